#include "hurwitz/cohomology.hpp"

#include <algorithm>

#include "hurwitz/error.hpp"

namespace hurwitz {

DevissageReport de_rham_character(const CoverCurve& c) {
  const Group& group = c.action.group();
  DevissageReport report;
  report.edge_induction_sum = edge_chain_character(c.action);
  const ClassFunction vertices = vertex_permutation_character(c.action);
  report.graph_character = vertices - report.edge_induction_sum;

  int degree = 0;
  for (const auto& comp : c.components) degree += 2 - 2 * comp.genus;
  degree -= 2 * static_cast<int>(c.nodes.size());
  report.degree = degree;

  report.positive_genus_components = std::any_of(
      c.components.begin(), c.components.end(), [](const CoverComponent& comp) { return comp.genus > 0; });
  if (report.positive_genus_components) return report;

  report.chi_normalization = 2 * vertices;
  report.chi_dR = *report.chi_normalization - 2 * report.edge_induction_sum;
  report.literal_chi_dR = *report.chi_normalization + 2 * report.graph_character;
  if (is_connected(c)) {
    report.h1_character = 2 * ClassFunction::trivial(group) - *report.chi_dR;
  }
  return report;
}

ClassFunction h1_character(const CoverCurve& c) {
  if (!is_connected(c)) throw Error(ErrorCode::Disconnected, "H^1 character needs a connected cover");
  DevissageReport report = de_rham_character(c);
  if (report.positive_genus_components) {
    throw Error(ErrorCode::PositiveGenusComponents,
                "normalization has positive-genus components; only the degree " +
                    std::to_string(2 * arithmetic_genus(c)) + " is known");
  }
  return *report.h1_character;
}

}  // namespace hurwitz
