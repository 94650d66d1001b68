#include "hurwitz/group.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

constexpr std::size_t kTableLimit = 1024;

}  // namespace

Group PermGroup::generate(int degree, std::vector<Perm> generators, std::size_t bound) {
  if (degree < 1) throw Error(ErrorCode::DegreeMismatch, "degree must be positive");
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                      std::to_string(degree));
    }
  }

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& g : generators) {
      Perm y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > bound) {
          throw Error(ErrorCode::ClosureBoundExceeded,
                      "closure exceeds " + std::to_string(bound) + " elements");
        }
        frontier.push_back(std::move(y));
      }
    }
  }

  auto group = std::shared_ptr<PermGroup>(new PermGroup());
  group->degree_ = degree;
  group->elements_.assign(seen.begin(), seen.end());
  std::sort(group->elements_.begin(), group->elements_.end());
  group->index_.reserve(group->elements_.size());
  for (std::size_t i = 0; i < group->elements_.size(); ++i) {
    group->index_.emplace(group->elements_[i], static_cast<element_id>(i));
  }
  group->generators_ = std::move(generators);
  for (const Perm& g : group->generators_) group->generator_ids_.push_back(group->index_.at(g));
  group->build_tables();
  group->build_classes();
  return group;
}

void PermGroup::build_tables() {
  const std::size_t n = elements_.size();
  inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inverses_[i] = index_.at(elements_[i].inverse());

  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
      }
    }
  }

  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int k = 1;
    element_id x = static_cast<element_id>(i);
    while (x != identity()) {
      x = mul(x, static_cast<element_id>(i));
      ++k;
    }
    orders_[i] = k;
  }
}

void PermGroup::build_classes() {
  const std::size_t n = elements_.size();
  class_of_.assign(n, -1);
  std::vector<std::vector<element_id>> raw;
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] >= 0) continue;
    std::vector<element_id> cls{static_cast<element_id>(start)};
    class_of_[start] = static_cast<int>(raw.size());
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (element_id g : generator_ids_) {
        element_id y = conj(cls[head], g);
        if (class_of_[static_cast<std::size_t>(y)] < 0) {
          class_of_[static_cast<std::size_t>(y)] = static_cast<int>(raw.size());
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    raw.push_back(std::move(cls));
  }
  std::sort(raw.begin(), raw.end(), [this](const auto& a, const auto& b) {
    int oa = orders_[static_cast<std::size_t>(a.front())];
    int ob = orders_[static_cast<std::size_t>(b.front())];
    if (oa != ob) return oa < ob;
    return a.front() < b.front();
  });
  classes_ = std::move(raw);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (element_id g : classes_[c]) class_of_[static_cast<std::size_t>(g)] = static_cast<int>(c);
  }
}

std::optional<element_id> PermGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

element_id PermGroup::index_of(const Perm& p) const {
  if (p.degree() != degree_) {
    throw Error(ErrorCode::DegreeMismatch, "permutation " + p.cycle_string() + " has degree " +
                                               std::to_string(p.degree()));
  }
  auto found = find(p);
  if (!found) {
    throw Error(ErrorCode::InvalidPermutation, p.cycle_string() + " is not an element of the group");
  }
  return *found;
}

element_id PermGroup::mul(element_id a, element_id b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  return index_.at(element(a) * element(b));
}

element_id PermGroup::pow(element_id a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= orders_[static_cast<std::size_t>(a)];
  element_id result = identity();
  for (long long i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

element_id PermGroup::conj(element_id x, element_id g) const { return mul(mul(g, x), inv(g)); }

element_id PermGroup::product(std::span<const element_id> word) const {
  element_id result = identity();
  for (element_id w : word) result = mul(result, w);
  return result;
}

int element_order(const PermGroup& group, element_id g) { return group.element_order(g); }

const std::vector<std::vector<element_id>>& conjugacy_classes(const PermGroup& group) {
  return group.classes();
}

// Subgroup

Subgroup::Subgroup(Group parent, std::vector<element_id> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  member_flag_.assign(parent_->order(), 0);
  for (element_id g : members_) member_flag_[static_cast<std::size_t>(g)] = 1;
}

Subgroup Subgroup::generated_by(Group parent, std::span<const element_id> generators) {
  const PermGroup& g = *parent;
  std::vector<char> in(g.order(), 0);
  std::vector<element_id> members{PermGroup::identity()};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (element_id s : generators) {
      element_id y = g.mul(s, members[head]);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::from_members(Group parent, std::vector<element_id> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h(std::move(parent), std::move(members));
  if (h.members_.empty() || h.members_.front() != PermGroup::identity()) {
    throw Error(ErrorCode::NotASubgroup, "member set lacks the identity");
  }
  for (element_id a : h.members_) {
    for (element_id b : h.members_) {
      if (!h.contains(h.group().mul(a, b))) {
        throw Error(ErrorCode::NotASubgroup, "member set is not closed under multiplication");
      }
    }
  }
  return h;
}

Subgroup Subgroup::whole(Group parent) {
  std::vector<element_id> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<element_id>(i);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(Group parent) {
  return Subgroup(std::move(parent), {PermGroup::identity()});
}

int Subgroup::position_of(element_id g) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), g);
  if (it == members_.end() || *it != g) return -1;
  return static_cast<int>(it - members_.begin());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](element_id g) { return other.contains(g); });
}

Subgroup normalizer(const Subgroup& h) {
  const PermGroup& g = h.group();
  std::vector<element_id> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto xi = static_cast<element_id>(x);
    bool keeps = std::all_of(h.members().begin(), h.members().end(),
                             [&](element_id y) { return h.contains(g.conj(y, xi)); });
    if (keeps) out.push_back(xi);
  }
  return Subgroup::from_members(h.parent(), std::move(out));
}

Subgroup centralizer(const Subgroup& h) {
  const PermGroup& g = h.group();
  std::vector<element_id> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto xi = static_cast<element_id>(x);
    bool commutes = std::all_of(h.members().begin(), h.members().end(),
                                [&](element_id y) { return g.mul(xi, y) == g.mul(y, xi); });
    if (commutes) out.push_back(xi);
  }
  return Subgroup::from_members(h.parent(), std::move(out));
}

Subgroup centralizer(const Group& group, element_id g) {
  const element_id gens[] = {g};
  return centralizer(Subgroup::generated_by(group, gens));
}

Subgroup conjugate(const Subgroup& h, element_id g) {
  std::vector<element_id> out;
  out.reserve(h.order());
  for (element_id y : h.members()) out.push_back(h.group().conj(y, g));
  return Subgroup::from_members(h.parent(), std::move(out));
}

Subgroup point_stabilizer(const Group& group, int point) {
  if (point < 0 || point >= group->degree()) {
    throw Error(ErrorCode::InvalidPermutation, "point " + std::to_string(point) + " out of range");
  }
  std::vector<element_id> out;
  for (std::size_t x = 0; x < group->order(); ++x) {
    if (group->elements()[x](point) == point) out.push_back(static_cast<element_id>(x));
  }
  return Subgroup::from_members(group, std::move(out));
}

namespace {

CosetPartition cosets(const Subgroup& h, bool left) {
  const PermGroup& g = h.group();
  CosetPartition out;
  out.cell_of.assign(g.order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (out.cell_of[x] >= 0) continue;
    auto xi = static_cast<element_id>(x);
    std::vector<element_id> cell;
    cell.reserve(h.order());
    for (element_id y : h.members()) cell.push_back(left ? g.mul(xi, y) : g.mul(y, xi));
    std::sort(cell.begin(), cell.end());
    for (element_id c : cell) out.cell_of[static_cast<std::size_t>(c)] = static_cast<int>(out.cells.size());
    out.cells.push_back(std::move(cell));
  }
  return out;
}

}  // namespace

CosetPartition left_cosets(const Subgroup& h) { return cosets(h, true); }
CosetPartition right_cosets(const Subgroup& h) { return cosets(h, false); }

bool is_inverting_involution(const PermGroup& group, element_id m, element_id s) {
  if (group.mul(s, s) != PermGroup::identity()) return false;
  if (group.conj(m, s) != group.inv(m)) return false;
  const int order = group.element_order(m);
  element_id power = PermGroup::identity();
  for (int k = 0; k < order; ++k) {
    if (power == s) return false;
    power = group.mul(power, m);
  }
  return true;
}

}  // namespace hurwitz
