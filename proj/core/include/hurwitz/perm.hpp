#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hurwitz {

/// A permutation of {0, ..., n-1} stored as its image array.
/// Composition is right-to-left: (p * q)(i) == p(q(i)).
class Perm {
 public:
  Perm() = default;
  /// Throws Error(InvalidPermutation) unless `images` is a bijection of [0, n).
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  /// Disjoint-cycle notation, fixed points omitted; "()" for the identity.
  std::string cycle_string() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace hurwitz
