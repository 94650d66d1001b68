#include "hurwitz/perm.hpp"

#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ClosureBoundExceeded: return "ClosureBoundExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::ProductNotOne: return "ProductNotOne";
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PositiveGenusComponents: return "PositiveGenusComponents";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::Schema: return "Schema";
  }
  return "Unknown";
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidPermutation, "image array is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images = Perm::identity(degree).images_;
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree || used[static_cast<std::size_t>(from)]) {
        throw Error(ErrorCode::InvalidPermutation, "cycles are not disjoint or out of range");
      }
      used[static_cast<std::size_t>(from)] = 1;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return out;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = 1;
      if (!first) os << ' ';
      os << i;
      first = false;
      i = static_cast<std::size_t>(images_[i]);
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
  }
  Perm out;
  out.images_.resize(q.images_.size());
  for (std::size_t i = 0; i < q.images_.size(); ++i) {
    out.images_[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  }
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace hurwitz
