#include "analysis.hpp"

#include <iomanip>
#include <sstream>

#include "hurwitz/error.hpp"
#include "hurwitz/json_io.hpp"

namespace hurwitz::cli {

namespace {

std::vector<int> images_of(const PermGroup& g, element_id x) {
  const auto images = g.element(x).images();
  return {images.begin(), images.end()};
}

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

AnalysisReport analyze(const BoundaryDatum& d, const AnalysisOptions& options) {
  AnalysisReport r;
  r.datum = io::to_json(d);
  const ValidationResult validation = validate(d);
  r.valid = validation.ok();
  r.quotient_stable = quotient_stability(d);
  for (const auto& v : validation.violations) {
    r.violations.push_back({std::string(to_string(v.kind)), v.component, v.point, v.node, v.message});
  }
  for (const auto& w : validation.warnings) {
    std::ostringstream os;
    os << to_string(w.kind);
    if (w.component >= 0) os << " at component " << w.component;
    if (w.point >= 0) os << " point " << w.point;
    os << ": " << w.message;
    r.warnings.push_back(os.str());
  }
  if (!r.valid) return r;

  const PermGroup& g = *d.group;
  const CoverCurve cover = build_cover(d);
  CoverSummaryReport summary;
  const auto branches = branch_counts(cover);
  for (std::size_t i = 0; i < cover.components.size(); ++i) {
    const auto& comp = cover.components[i];
    summary.components.push_back({comp.quotient_component, images_of(g, comp.representative),
                                  comp.stabilizer_order, comp.genus, branches[i]});
  }
  for (std::size_t n = 0; n < cover.nodes.size(); ++n) {
    const NodeClass cls = classify_node(cover, n);
    const bool dihedral = cls.kind == NodeKind::DihedralNode;
    (dihedral ? summary.dihedral_nodes : summary.cyclic_nodes) += 1;
    summary.nodes.push_back({dihedral ? "dihedral" : "cyclic",
                             cover.nodes[n].origin == NodeOrigin::QuotientNode ? "node" : "dihedral-point",
                             cover.nodes[n].a.component, cover.nodes[n].b.component, cls.stabilizer.order()});
  }
  summary.connected = is_connected(cover);
  summary.stable = is_stable(cover);
  if (summary.connected) {
    summary.arithmetic_genus = arithmetic_genus(cover);
  } else {
    r.warnings.push_back("Disconnected: the cover has " +
                         std::to_string(connected_arithmetic_genera(cover).size()) + " connected pieces");
  }
  r.cover = std::move(summary);

  const DevissageReport dev = de_rham_character(cover);
  CharacterReport chars;
  for (const auto& cls : g.classes()) {
    chars.classes.push_back({g.element_order(cls.front()), cls.size(), images_of(g, cls.front())});
  }
  chars.degree = dev.degree;
  chars.positive_genus_components = dev.positive_genus_components;
  chars.edge_induction_sum = {dev.edge_induction_sum.values().begin(), dev.edge_induction_sum.values().end()};
  chars.graph_character = {dev.graph_character.values().begin(), dev.graph_character.values().end()};
  auto values = [](const std::optional<ClassFunction>& f) -> std::optional<Values> {
    if (!f) return std::nullopt;
    return Values(f->values().begin(), f->values().end());
  };
  chars.chi_dR = values(dev.chi_dR);
  chars.literal_chi_dR = values(dev.literal_chi_dR);
  chars.h1 = values(dev.h1_character);
  if (dev.positive_genus_components) {
    r.warnings.push_back("PositiveGenusComponents: character withheld, degree " + std::to_string(dev.degree) +
                         " only");
  }
  r.characters = std::move(chars);

  if (options.stabilizer_point) {
    const Subgroup k = point_stabilizer(d.group, *options.stabilizer_point);
    const SubcoverSummary sub = subcover(cover, k);
    SubcoverReport sr;
    sr.stabilizer_point = *options.stabilizer_point;
    sr.degree = sub.degree;
    for (const auto& c : sub.components) sr.components.push_back({c.quotient_component, c.degree, c.genus});
    for (const auto& p : sub.points) sr.points.push_back({p.point.component, p.point.point, p.cycle_type});
    for (const auto& n : sub.nodes) {
      sr.nodes.push_back({n.a_component, n.b_component, n.branches_identified, n.cover_nodes.size()});
    }
    sr.connected = sub.connected;
    sr.arithmetic_genus = sub.arithmetic_genus;
    r.subcover = std::move(sr);
  }
  return r;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["datum"] = r.datum;
  json validation;
  validation["valid"] = r.valid;
  validation["quotient_stable"] = r.quotient_stable;
  validation["violations"] = json::array();
  for (const auto& v : r.violations) {
    validation["violations"].push_back({{"kind", v.kind},
                                        {"component", v.component},
                                        {"point", v.point},
                                        {"node", v.node},
                                        {"message", v.message}});
  }
  j["validation"] = validation;
  j["warnings"] = r.warnings;

  if (r.cover) {
    const auto& c = *r.cover;
    json cover;
    cover["components"] = json::array();
    for (const auto& comp : c.components) {
      cover["components"].push_back({{"quotient_component", comp.quotient_component},
                                     {"representative", comp.representative},
                                     {"stabilizer_order", comp.stabilizer_order},
                                     {"genus", comp.genus},
                                     {"branches", comp.branches}});
    }
    cover["nodes"] = json::array();
    for (const auto& n : c.nodes) {
      cover["nodes"].push_back({{"kind", n.kind},
                                {"origin", n.origin},
                                {"a_component", n.a_component},
                                {"b_component", n.b_component},
                                {"stabilizer_order", n.stabilizer_order}});
    }
    cover["node_count"] = c.nodes.size();
    cover["cyclic_nodes"] = c.cyclic_nodes;
    cover["dihedral_nodes"] = c.dihedral_nodes;
    cover["connected"] = c.connected;
    cover["stable"] = c.stable;
    put_optional(cover, "arithmetic_genus", c.arithmetic_genus);
    j["cover"] = cover;
  } else {
    j["cover"] = nullptr;
  }

  if (r.characters) {
    const auto& ch = *r.characters;
    json chars;
    chars["classes"] = json::array();
    for (const auto& row : ch.classes) {
      chars["classes"].push_back({{"order", row.order}, {"size", row.size}, {"representative", row.representative}});
    }
    chars["degree"] = ch.degree;
    chars["positive_genus_components"] = ch.positive_genus_components;
    chars["edge_induction_sum"] = ch.edge_induction_sum;
    chars["graph_character"] = ch.graph_character;
    put_optional(chars, "chi_dR", ch.chi_dR);
    put_optional(chars, "literal_chi_dR", ch.literal_chi_dR);
    put_optional(chars, "h1", ch.h1);
    j["characters"] = chars;
  } else {
    j["characters"] = nullptr;
  }

  if (r.subcover) {
    const auto& s = *r.subcover;
    json sub;
    sub["stabilizer_point"] = s.stabilizer_point;
    sub["degree"] = s.degree;
    sub["components"] = json::array();
    for (const auto& c : s.components) {
      sub["components"].push_back({{"quotient_component", c.quotient_component}, {"degree", c.degree}, {"genus", c.genus}});
    }
    sub["points"] = json::array();
    for (const auto& p : s.points) {
      sub["points"].push_back({{"component", p.component}, {"point", p.point}, {"cycle_type", p.cycle_type}});
    }
    sub["nodes"] = json::array();
    for (const auto& n : s.nodes) {
      sub["nodes"].push_back({{"a_component", n.a_component},
                              {"b_component", n.b_component},
                              {"branches_identified", n.branches_identified},
                              {"orbit_size", n.orbit_size}});
    }
    sub["connected"] = s.connected;
    put_optional(sub, "arithmetic_genus", s.arithmetic_genus);
    j["subcover"] = sub;
  }
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.datum = j.at("datum");
  const json& validation = j.at("validation");
  r.valid = validation.at("valid").get<bool>();
  r.quotient_stable = validation.at("quotient_stable").get<bool>();
  for (const auto& v : validation.at("violations")) {
    r.violations.push_back({v.at("kind").get<std::string>(), v.at("component").get<int>(), v.at("point").get<int>(),
                            v.at("node").get<int>(), v.at("message").get<std::string>()});
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();

  if (!j.at("cover").is_null()) {
    const json& c = j.at("cover");
    CoverSummaryReport cover;
    for (const auto& comp : c.at("components")) {
      cover.components.push_back({comp.at("quotient_component").get<int>(),
                                  comp.at("representative").get<std::vector<int>>(),
                                  comp.at("stabilizer_order").get<std::size_t>(), comp.at("genus").get<int>(),
                                  comp.at("branches").get<int>()});
    }
    for (const auto& n : c.at("nodes")) {
      cover.nodes.push_back({n.at("kind").get<std::string>(), n.at("origin").get<std::string>(),
                             n.at("a_component").get<int>(), n.at("b_component").get<int>(),
                             n.at("stabilizer_order").get<std::size_t>()});
    }
    cover.cyclic_nodes = c.at("cyclic_nodes").get<int>();
    cover.dihedral_nodes = c.at("dihedral_nodes").get<int>();
    cover.connected = c.at("connected").get<bool>();
    cover.stable = c.at("stable").get<bool>();
    cover.arithmetic_genus = get_optional<int>(c, "arithmetic_genus");
    r.cover = std::move(cover);
  }

  if (!j.at("characters").is_null()) {
    const json& ch = j.at("characters");
    CharacterReport chars;
    for (const auto& row : ch.at("classes")) {
      chars.classes.push_back({row.at("order").get<int>(), row.at("size").get<std::size_t>(),
                               row.at("representative").get<std::vector<int>>()});
    }
    chars.degree = ch.at("degree").get<int>();
    chars.positive_genus_components = ch.at("positive_genus_components").get<bool>();
    chars.edge_induction_sum = ch.at("edge_induction_sum").get<Values>();
    chars.graph_character = ch.at("graph_character").get<Values>();
    chars.chi_dR = get_optional<Values>(ch, "chi_dR");
    chars.literal_chi_dR = get_optional<Values>(ch, "literal_chi_dR");
    chars.h1 = get_optional<Values>(ch, "h1");
    r.characters = std::move(chars);
  }

  if (j.contains("subcover") && !j.at("subcover").is_null()) {
    const json& s = j.at("subcover");
    SubcoverReport sub;
    sub.stabilizer_point = s.at("stabilizer_point").get<int>();
    sub.degree = s.at("degree").get<std::size_t>();
    for (const auto& c : s.at("components")) {
      sub.components.push_back({c.at("quotient_component").get<int>(), c.at("degree").get<int>(), c.at("genus").get<int>()});
    }
    for (const auto& p : s.at("points")) {
      sub.points.push_back({p.at("component").get<int>(), p.at("point").get<int>(), p.at("cycle_type").get<std::vector<int>>()});
    }
    for (const auto& n : s.at("nodes")) {
      sub.nodes.push_back({n.at("a_component").get<int>(), n.at("b_component").get<int>(),
                           n.at("branches_identified").get<bool>(), n.at("orbit_size").get<std::size_t>()});
    }
    sub.connected = s.at("connected").get<bool>();
    sub.arithmetic_genus = get_optional<int>(s, "arithmetic_genus");
    r.subcover = std::move(sub);
  }
  return r;
}

namespace {

std::string cycle_string(const std::vector<int>& images) {
  try {
    return Perm(images).cycle_string();
  } catch (const Error&) {
    return "?";
  }
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace

std::string render_character_table(const AnalysisReport& r) {
  std::ostringstream os;
  if (!r.characters) {
    os << "no characters (datum invalid)\n";
    return os.str();
  }
  const auto& ch = *r.characters;
  std::vector<std::pair<std::string, const Values*>> columns;
  if (ch.chi_dR) columns.emplace_back("chi_dR", &*ch.chi_dR);
  if (ch.h1) columns.emplace_back("H1", &*ch.h1);
  columns.emplace_back("graph", &ch.graph_character);
  columns.emplace_back("edges", &ch.edge_induction_sum);
  if (ch.literal_chi_dR) columns.emplace_back("literal", &*ch.literal_chi_dR);

  os << std::left << std::setw(22) << "class" << std::right << std::setw(6) << "order" << std::setw(6) << "size";
  for (const auto& [name, values] : columns) os << std::setw(9) << name;
  os << '\n';
  for (std::size_t c = 0; c < ch.classes.size(); ++c) {
    os << std::left << std::setw(22) << cycle_string(ch.classes[c].representative) << std::right << std::setw(6)
       << ch.classes[c].order << std::setw(6) << ch.classes[c].size;
    for (const auto& [name, values] : columns) os << std::setw(9) << (*values)[c];
    os << '\n';
  }
  os << "degree of chi_dR: " << ch.degree;
  if (ch.positive_genus_components) os << " (positive-genus components: character withheld)";
  os << '\n';
  return os.str();
}

std::string render_pretty(const AnalysisReport& r) {
  std::ostringstream os;
  os << "datum: " << (r.valid ? "valid" : "INVALID") << ", quotient " << (r.quotient_stable ? "stable" : "unstable")
     << '\n';
  for (const auto& v : r.violations) {
    os << "  violation " << v.kind << " (component " << v.component << ", point " << v.point << ", node " << v.node
       << "): " << v.message << '\n';
  }
  for (const auto& w : r.warnings) os << "  warning " << w << '\n';
  if (r.cover) {
    const auto& c = *r.cover;
    os << "cover: " << c.components.size() << " components, " << c.nodes.size() << " nodes (" << c.cyclic_nodes
       << " cyclic, " << c.dihedral_nodes << " dihedral), " << (c.connected ? "connected" : "disconnected") << ", "
       << (c.stable ? "stable" : "not stable");
    if (c.arithmetic_genus) os << ", arithmetic genus " << *c.arithmetic_genus;
    os << '\n';
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      const auto& comp = c.components[i];
      os << "  component " << i << ": over " << comp.quotient_component << ", genus " << comp.genus << ", |H| "
         << comp.stabilizer_order << ", " << comp.branches << " branches, coset of "
         << cycle_string(comp.representative) << '\n';
    }
  }
  if (r.characters) os << render_character_table(r);
  if (r.subcover) {
    const auto& s = *r.subcover;
    os << "quotient by the stabilizer of point " << s.stabilizer_point << ": degree " << s.degree << ", "
       << s.components.size() << " components";
    if (s.arithmetic_genus) os << ", arithmetic genus " << *s.arithmetic_genus;
    os << '\n';
    for (const auto& p : s.points) {
      os << "  point (" << p.component << ", " << p.point << "): cycle type " << join(p.cycle_type, ",") << '\n';
    }
    for (std::size_t i = 0; i < s.components.size(); ++i) {
      os << "  component " << i << ": degree " << s.components[i].degree << ", genus " << s.components[i].genus << '\n';
    }
  }
  return os.str();
}

}  // namespace hurwitz::cli
