#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/group.hpp"

namespace hurwitz {

/// Integer-valued function on the conjugacy classes of a group, in the
/// group's canonical class order. Holds (virtual) characters.
class ClassFunction {
 public:
  using value_type = std::int64_t;

  ClassFunction() = default;
  ClassFunction(Group group, std::vector<value_type> values);

  static ClassFunction zero(Group group);
  static ClassFunction trivial(Group group);
  /// Value at g is the number of entries of `images_of[g]` fixing their
  /// position, i.e. the permutation character of an action given per element.
  static ClassFunction permutation_character(Group group,
                                             const std::vector<std::vector<int>>& images_of);

  const Group& group() const noexcept { return group_; }
  const std::vector<value_type>& values() const noexcept { return values_; }
  value_type value_of_class(std::size_t c) const { return values_[c]; }
  value_type operator()(element_id g) const;
  value_type degree() const { return values_.empty() ? 0 : values_.front(); }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(value_type scalar);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(value_type k, ClassFunction a) { return a *= k; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  void check_same_group(const ClassFunction& other) const;

  Group group_;
  std::vector<value_type> values_;
};

/// (1/|G|) sum_g a(g) b(g^-1). Throws std::domain_error if not an integer.
ClassFunction::value_type inner_product(const ClassFunction& a, const ClassFunction& b);

/// Frobenius induction of a +-1 valued homomorphism on H. `chi` is aligned
/// with h.members(). Throws Error(NotACharacter) if chi is not multiplicative.
ClassFunction induced_character(const Subgroup& h, std::span<const int> chi);

/// Trivial character of H as a vector aligned with h.members().
std::vector<int> trivial_on(const Subgroup& h);

}  // namespace hurwitz
