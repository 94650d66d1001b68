#pragma once

// Brute-force reference computations on raw image arrays. Nothing here uses
// the library beyond converting its elements to image vectors.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hurwitz/group.hpp"

namespace oracle {

using perm = std::vector<int>;

inline perm compose(const perm& p, const perm& q) {  // p after q
  perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

inline perm invert(const perm& p) {
  perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

inline perm identity(int n) {
  perm r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

inline int order(const perm& p) {
  const perm e = identity(static_cast<int>(p.size()));
  perm q = p;
  int k = 1;
  while (q != e) {
    q = compose(p, q);
    ++k;
  }
  return k;
}

/// Naive closure: repeatedly multiply everything by everything until stable.
inline std::set<perm> closure(int n, const std::vector<perm>& gens) {
  std::set<perm> s{identity(n)};
  for (const auto& g : gens) s.insert(g);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<perm> cur(s.begin(), s.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) grew |= s.insert(compose(a, b)).second;
    }
  }
  return s;
}

inline perm raw(const hurwitz::PermGroup& g, hurwitz::element_id x) {
  auto im = g.element(x).images();
  return perm(im.begin(), im.end());
}

inline std::vector<perm> raw_members(const hurwitz::Subgroup& h) {
  std::vector<perm> out;
  for (auto x : h.members()) out.push_back(raw(*h.parent(), x));
  return out;
}

/// Sizes of conjugacy classes computed by conjugating with every element.
inline std::multiset<int> class_sizes(const std::set<perm>& g) {
  std::set<perm> seen;
  std::multiset<int> sizes;
  for (const auto& x : g) {
    if (seen.count(x)) continue;
    std::set<perm> cls;
    for (const auto& y : g) cls.insert(compose(compose(y, x), invert(y)));
    seen.insert(cls.begin(), cls.end());
    sizes.insert(static_cast<int>(cls.size()));
  }
  return sizes;
}

inline std::size_t normalizer_order(const std::set<perm>& g, const std::set<perm>& h) {
  std::size_t count = 0;
  for (const auto& y : g) {
    bool ok = true;
    for (const auto& x : h) ok = ok && h.count(compose(compose(y, x), invert(y)));
    count += ok;
  }
  return count;
}

/// Number of left cosets x H fixed by g, i.e. x^-1 g x in H, divided by |H|.
inline long long coset_fixed_points(const std::set<perm>& g, const std::set<perm>& h, const perm& x0) {
  long long hits = 0;
  for (const auto& x : g) hits += h.count(compose(compose(invert(x), x0), x));
  return hits / static_cast<long long>(h.size());
}

/// Ind_H^G chi evaluated at x0 via (1/|H|) sum_{x in G} chi(x^-1 x0 x).
inline long long induced_value(const std::set<perm>& g, const std::map<perm, int>& chi_on_h,
                               const perm& x0) {
  long long sum = 0;
  for (const auto& x : g) {
    auto it = chi_on_h.find(compose(compose(invert(x), x0), x));
    if (it != chi_on_h.end()) sum += it->second;
  }
  return sum / static_cast<long long>(chi_on_h.size());
}

/// Involutions s with s m s = m^-1 and s outside <m>.
inline int inverting_involutions(const std::set<perm>& g, const perm& m) {
  std::set<perm> cyc{identity(static_cast<int>(m.size()))};
  for (perm p = m; cyc.insert(p).second; p = compose(m, p)) {
  }
  int count = 0;
  for (const auto& s : g) {
    if (compose(s, s) != identity(static_cast<int>(m.size())) || cyc.count(s)) continue;
    if (compose(compose(s, m), s) == invert(m)) ++count;
  }
  return count;
}

/// Genus from the Euler characteristic of a Galois cover of P^1 of degree
/// |G| branched with the given orders: chi = |G| (2 - n) + sum |G| / e_i.
inline int sphere_cover_genus(long long group_order, const std::vector<int>& orders) {
  long long chi = group_order * (2 - static_cast<long long>(orders.size()));
  for (int e : orders) chi += group_order / e;
  return static_cast<int>((2 - chi) / 2);
}

/// Orbits of pairs (a, b) in Z/4N with a = 4k + e, 2e = -4k, under
/// (a, b) -> (a + 4, b - 4) and (a, b) -> (b, a), by fixed-point iteration.
inline std::vector<int> fdef_orbits(int n) {
  const int mod = 4 * n;
  std::set<std::pair<int, int>> pts;
  for (int k = 0; k < n; ++k) {
    for (int e = 0; e < mod; ++e) {
      if (((2 * e + 4 * k) % mod) == 0) pts.insert({(4 * k + e) % mod, e});
    }
  }
  std::vector<int> sizes;
  std::set<std::pair<int, int>> seen;
  for (const auto& p : pts) {
    if (seen.count(p)) continue;
    std::set<std::pair<int, int>> orb{p};
    for (bool grew = true; grew;) {
      grew = false;
      for (auto q : std::vector<std::pair<int, int>>(orb.begin(), orb.end())) {
        grew |= orb.insert({(q.first + 4) % mod, ((q.second - 4) % mod + mod) % mod}).second;
        grew |= orb.insert({q.second, q.first}).second;
      }
    }
    seen.insert(orb.begin(), orb.end());
    sizes.push_back(static_cast<int>(orb.size()));
  }
  return sizes;
}

}  // namespace oracle
