#include "hurwitz/class_function.hpp"

#include <stdexcept>
#include <string>

#include "hurwitz/error.hpp"

namespace hurwitz {

ClassFunction::ClassFunction(Group group, std::vector<value_type> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count()) {
    throw std::invalid_argument("class function needs one value per conjugacy class");
  }
}

ClassFunction ClassFunction::zero(Group group) {
  const std::size_t n = group->class_count();
  return ClassFunction(std::move(group), std::vector<value_type>(n, 0));
}

ClassFunction ClassFunction::trivial(Group group) {
  const std::size_t n = group->class_count();
  return ClassFunction(std::move(group), std::vector<value_type>(n, 1));
}

ClassFunction ClassFunction::permutation_character(Group group,
                                                   const std::vector<std::vector<int>>& images_of) {
  if (images_of.size() != group->order()) {
    throw std::invalid_argument("permutation character needs one image list per element");
  }
  std::vector<value_type> values;
  values.reserve(group->class_count());
  for (const auto& cls : group->classes()) {
    const auto& images = images_of[static_cast<std::size_t>(cls.front())];
    value_type fixed = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] == static_cast<int>(i)) ++fixed;
    }
    values.push_back(fixed);
  }
  return ClassFunction(std::move(group), std::move(values));
}

ClassFunction::value_type ClassFunction::operator()(element_id g) const {
  return values_[static_cast<std::size_t>(group_->class_of(g))];
}

void ClassFunction::check_same_group(const ClassFunction& other) const {
  if (group_ != other.group_) throw std::invalid_argument("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  check_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  check_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(value_type scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

ClassFunction::value_type inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw std::invalid_argument("class functions on different groups");
  const PermGroup& g = *a.group();
  ClassFunction::value_type sum = 0;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    element_id rep = g.classes()[c].front();
    auto size = static_cast<ClassFunction::value_type>(g.classes()[c].size());
    sum += size * a.value_of_class(c) * b(g.inv(rep));
  }
  auto order = static_cast<ClassFunction::value_type>(g.order());
  if (sum % order != 0) throw std::domain_error("inner product is not an integer");
  return sum / order;
}

ClassFunction induced_character(const Subgroup& h, std::span<const int> chi) {
  const PermGroup& g = h.group();
  if (chi.size() != h.order()) {
    throw Error(ErrorCode::NotACharacter, "character has " + std::to_string(chi.size()) +
                                              " values on a subgroup of order " + std::to_string(h.order()));
  }
  for (int v : chi) {
    if (v != 1 && v != -1) throw Error(ErrorCode::NotACharacter, "values must be +1 or -1");
  }
  const auto& members = h.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      int p = h.position_of(g.mul(members[i], members[j]));
      if (chi[static_cast<std::size_t>(p)] != chi[i] * chi[j]) {
        throw Error(ErrorCode::NotACharacter, "values are not multiplicative");
      }
    }
  }

  std::vector<ClassFunction::value_type> values;
  values.reserve(g.class_count());
  for (const auto& cls : g.classes()) {
    element_id rep = cls.front();
    ClassFunction::value_type sum = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      int p = h.position_of(g.conj(rep, static_cast<element_id>(x)));
      if (p >= 0) sum += chi[static_cast<std::size_t>(p)];
    }
    auto order = static_cast<ClassFunction::value_type>(h.order());
    if (sum % order != 0) throw Error(ErrorCode::NotACharacter, "induced value is not an integer");
    values.push_back(sum / order);
  }
  return ClassFunction(h.parent(), std::move(values));
}

std::vector<int> trivial_on(const Subgroup& h) { return std::vector<int>(h.order(), 1); }

}  // namespace hurwitz
