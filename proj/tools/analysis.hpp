#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/cohomology.hpp"
#include "hurwitz/cover.hpp"
#include "hurwitz/datum.hpp"

namespace hurwitz::cli {

using json = nlohmann::json;

struct ReportViolation {
  std::string kind;
  int component = -1;
  int point = -1;
  int node = -1;
  std::string message;
  friend bool operator==(const ReportViolation&, const ReportViolation&) = default;
};

struct ReportComponent {
  int quotient_component = 0;
  std::vector<int> representative;  // coset representative as an image array
  std::size_t stabilizer_order = 0;
  int genus = 0;
  int branches = 0;
  friend bool operator==(const ReportComponent&, const ReportComponent&) = default;
};

struct ReportNode {
  std::string kind;    // "cyclic" | "dihedral"
  std::string origin;  // "node" | "dihedral-point"
  int a_component = 0;
  int b_component = 0;
  std::size_t stabilizer_order = 0;
  friend bool operator==(const ReportNode&, const ReportNode&) = default;
};

struct CoverSummaryReport {
  std::vector<ReportComponent> components;
  std::vector<ReportNode> nodes;
  int cyclic_nodes = 0;
  int dihedral_nodes = 0;
  bool connected = false;
  bool stable = false;
  std::optional<int> arithmetic_genus;
  friend bool operator==(const CoverSummaryReport&, const CoverSummaryReport&) = default;
};

struct ClassRow {
  int order = 1;
  std::size_t size = 1;
  std::vector<int> representative;
  friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

using Values = std::vector<long long>;

struct CharacterReport {
  std::vector<ClassRow> classes;
  int degree = 0;
  bool positive_genus_components = false;
  Values edge_induction_sum;
  Values graph_character;
  std::optional<Values> chi_dR;
  std::optional<Values> literal_chi_dR;
  std::optional<Values> h1;
  friend bool operator==(const CharacterReport&, const CharacterReport&) = default;
};

struct SubcoverReport {
  int stabilizer_point = 0;
  std::size_t degree = 0;
  struct Component {
    int quotient_component = 0;
    int degree = 0;
    int genus = 0;
    friend bool operator==(const Component&, const Component&) = default;
  };
  struct Point {
    int component = 0;
    int point = 0;
    std::vector<int> cycle_type;
    friend bool operator==(const Point&, const Point&) = default;
  };
  struct Node {
    int a_component = 0;
    int b_component = 0;
    bool branches_identified = false;
    std::size_t orbit_size = 0;
    friend bool operator==(const Node&, const Node&) = default;
  };
  std::vector<Component> components;
  std::vector<Point> points;
  std::vector<Node> nodes;
  bool connected = false;
  std::optional<int> arithmetic_genus;
  friend bool operator==(const SubcoverReport&, const SubcoverReport&) = default;
};

struct AnalysisReport {
  json datum;
  bool valid = false;
  bool quotient_stable = false;
  std::vector<ReportViolation> violations;
  std::vector<std::string> warnings;
  std::optional<CoverSummaryReport> cover;
  std::optional<CharacterReport> characters;
  std::optional<SubcoverReport> subcover;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
  std::optional<int> stabilizer_point;  // quotient by the stabilizer of this point
};

/// validate -> build_cover -> classify nodes -> characters.
AnalysisReport analyze(const BoundaryDatum& d, const AnalysisOptions& options = {});

json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const json& j);

/// Human-readable rendering for --pretty.
std::string render_pretty(const AnalysisReport& r);
/// One row per conjugacy class: order, size, then each available character.
std::string render_character_table(const AnalysisReport& r);

}  // namespace hurwitz::cli
