#pragma once

#include <optional>

#include "hurwitz/class_function.hpp"
#include "hurwitz/cover.hpp"

namespace hurwitz {

/// Equivariant virtual characters of de Rham cohomology of a nodal cover,
/// obtained from the normalization and the dual graph.
///
/// The identity used is chi_dR(C) = chi_dR(C') - 2 * sum Ind(signum), where
/// the sum runs over node orbits of the node-pair stabilizers. The value
/// obtained by adding twice the full graph character instead is kept in
/// `literal_chi_dR` for comparison; its degree is off by 2 * #components.
struct DevissageReport {
  int degree = 0;  // sum (2 - 2 g_i) - 2 #nodes, always available
  bool positive_genus_components = false;
  ClassFunction edge_induction_sum;
  ClassFunction graph_character;                // perm(components) - edge_induction_sum
  std::optional<ClassFunction> chi_normalization;  // 2 * perm(components), genus-0 case only
  std::optional<ClassFunction> chi_dR;
  std::optional<ClassFunction> literal_chi_dR;
  std::optional<ClassFunction> h1_character;    // connected genus-0 case only
};

DevissageReport de_rham_character(const CoverCurve& c);

/// [H^1] = 2 * triv - chi_dR. Throws Disconnected or PositiveGenusComponents.
ClassFunction h1_character(const CoverCurve& c);

}  // namespace hurwitz
