#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

/// Index of an element in PermGroup::elements(). The identity is always 0.
using element_id = std::int32_t;

inline constexpr std::size_t kDefaultClosureBound = 1'000'000;

class PermGroup;
using Group = std::shared_ptr<const PermGroup>;

/// A finite permutation group with every element materialized.
///
/// Elements are sorted lexicographically by image array, so element ids are
/// deterministic for a given generated group regardless of generator order.
/// Conjugacy classes are ordered by (element order, smallest member id).
class PermGroup {
 public:
  /// Closure of `generators` under composition. Throws DegreeMismatch if a
  /// generator's degree differs from `degree`, ClosureBoundExceeded if the
  /// group has more than `bound` elements.
  static Group generate(int degree, std::vector<Perm> generators,
                        std::size_t bound = kDefaultClosureBound);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<element_id>& generator_ids() const noexcept { return generator_ids_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(element_id g) const { return elements_[static_cast<std::size_t>(g)]; }

  std::optional<element_id> find(const Perm& p) const;
  /// Like find() but throws Error(InvalidPermutation) for non-members.
  element_id index_of(const Perm& p) const;

  static constexpr element_id identity() noexcept { return 0; }
  element_id mul(element_id a, element_id b) const;
  element_id inv(element_id a) const { return inverses_[static_cast<std::size_t>(a)]; }
  element_id pow(element_id a, long long k) const;
  element_id conj(element_id x, element_id g) const;  // g x g^-1
  element_id product(std::span<const element_id> word) const;

  int element_order(element_id a) const { return orders_[static_cast<std::size_t>(a)]; }

  const std::vector<std::vector<element_id>>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  int class_of(element_id g) const { return class_of_[static_cast<std::size_t>(g)]; }

 private:
  PermGroup() = default;
  void build_tables();
  void build_classes();

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<element_id> generator_ids_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, element_id, PermHash> index_;
  std::vector<element_id> inverses_;
  std::vector<int> orders_;
  std::vector<element_id> table_;  // row-major |G| x |G|, only for small groups
  std::vector<std::vector<element_id>> classes_;
  std::vector<int> class_of_;
};

int element_order(const PermGroup& group, element_id g);
const std::vector<std::vector<element_id>>& conjugacy_classes(const PermGroup& group);

/// A subgroup of a PermGroup, stored as a sorted list of member ids.
class Subgroup {
 public:
  Subgroup() = default;
  /// Smallest subgroup containing `generators`.
  static Subgroup generated_by(Group parent, std::span<const element_id> generators);
  /// Throws Error(NotASubgroup) unless `members` is closed and contains the identity.
  static Subgroup from_members(Group parent, std::vector<element_id> members);
  static Subgroup whole(Group parent);
  static Subgroup trivial(Group parent);

  const Group& parent() const noexcept { return parent_; }
  const PermGroup& group() const noexcept { return *parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }
  const std::vector<element_id>& members() const noexcept { return members_; }
  bool contains(element_id g) const { return member_flag_[static_cast<std::size_t>(g)] != 0; }
  /// Position of `g` within members(), or -1.
  int position_of(element_id g) const;

  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  Subgroup(Group parent, std::vector<element_id> members);

  Group parent_;
  std::vector<element_id> members_;
  std::vector<char> member_flag_;
};

Subgroup normalizer(const Subgroup& h);
Subgroup centralizer(const Subgroup& h);
Subgroup centralizer(const Group& group, element_id g);
/// The conjugate subgroup g H g^-1.
Subgroup conjugate(const Subgroup& h, element_id g);
/// Stabilizer of `point` in the natural action on {0, ..., degree-1}.
Subgroup point_stabilizer(const Group& group, int point);

/// Partition of G into cosets of H. Cells are sorted, labeled by their
/// smallest member, and listed in increasing label order.
struct CosetPartition {
  std::vector<std::vector<element_id>> cells;
  std::vector<int> cell_of;  // indexed by element id

  std::size_t size() const noexcept { return cells.size(); }
  element_id representative(std::size_t cell) const { return cells[cell].front(); }
};

/// Cells gH.
CosetPartition left_cosets(const Subgroup& h);
/// Cells Hg.
CosetPartition right_cosets(const Subgroup& h);

/// True iff s^2 = e, s m s^-1 = m^-1 and s is not in <m>.
bool is_inverting_involution(const PermGroup& group, element_id m, element_id s);

}  // namespace hurwitz
