#include "hurwitz/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz::io {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::Schema, path + ": " + message);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer()) schema_error(path + "." + key, "expected an integer");
  return v.get<int>();
}

element_id element_from_json(const json& j, const Group& group, const std::string& path) {
  Perm p = perm_from_json(j, path);
  if (p.degree() != group->degree()) {
    schema_error(path, "permutation of degree " + std::to_string(p.degree()) + " in a group of degree " +
                           std::to_string(group->degree()));
  }
  auto id = group->find(p);
  if (!id) schema_error(path, p.cycle_string() + " is not an element of the group");
  return *id;
}

}  // namespace

json parse(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, std::string(source) + ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

json to_json(const Perm& p) { return json(std::vector<int>(p.images().begin(), p.images().end())); }

Perm perm_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an image array");
  std::vector<int> images;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) schema_error(path + "[" + std::to_string(i) + "]", "expected an integer");
    images.push_back(j[i].get<int>());
  }
  try {
    return Perm(std::move(images));
  } catch (const Error&) {
    schema_error(path, "image array is not a bijection");
  }
}

json to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  return {{"degree", g.degree()}, {"generators", gens}};
}

Group group_from_json(const json& j, const std::string& path) {
  const int degree = int_field(j, "degree", path);
  if (degree < 1) schema_error(path + ".degree", "must be positive");
  const json& gens = field(j, "generators", path);
  if (!gens.is_array()) schema_error(path + ".generators", "expected an array");
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = path + ".generators[" + std::to_string(i) + "]";
    perms.push_back(perm_from_json(gens[i], p));
    if (perms.back().degree() != degree) schema_error(p, "wrong degree");
  }
  return PermGroup::generate(degree, std::move(perms));
}

json to_json(const BoundaryDatum& d) {
  const PermGroup& g = *d.group;
  json comps = json::array();
  for (const auto& comp : d.components) {
    json handles = json::array();
    for (const auto& [a, b] : comp.handles) handles.push_back({to_json(g.element(a)), to_json(g.element(b))});
    json points = json::array();
    for (const auto& p : comp.points) {
      json jp = {{"kind", std::string(to_string(p.kind))}, {"m", to_json(g.element(p.m))}};
      if (p.kind == PointKind::Dihedral) jp["s"] = to_json(g.element(p.s));
      if (p.kind == PointKind::NodeEnd) jp["node"] = p.node_id;
      points.push_back(std::move(jp));
    }
    comps.push_back({{"genus", comp.genus}, {"handles", handles}, {"points", points}});
  }
  return {{"group", to_json(g)}, {"components", comps}};
}

BoundaryDatum datum_from_json(const json& j) {
  return datum_from_json(j, group_from_json(field(j, "group", "$"), "$.group"));
}

BoundaryDatum datum_from_json(const json& j, const Group& group) {
  BoundaryDatum d;
  d.group = group;
  const json& comps = field(j, "components", "$");
  if (!comps.is_array()) schema_error("$.components", "expected an array");
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::string cpath = "$.components[" + std::to_string(c) + "]";
    const json& jc = comps[c];
    if (!jc.is_object()) schema_error(cpath, "expected an object");
    MarkedComponent comp;
    comp.genus = jc.contains("genus") ? int_field(jc, "genus", cpath) : 0;
    if (jc.contains("handles")) {
      const json& handles = jc["handles"];
      if (!handles.is_array()) schema_error(cpath + ".handles", "expected an array");
      for (std::size_t h = 0; h < handles.size(); ++h) {
        const std::string hpath = cpath + ".handles[" + std::to_string(h) + "]";
        if (!handles[h].is_array() || handles[h].size() != 2) schema_error(hpath, "expected a pair");
        comp.handles.emplace_back(element_from_json(handles[h][0], group, hpath + "[0]"),
                                  element_from_json(handles[h][1], group, hpath + "[1]"));
      }
    }
    const json& points = field(jc, "points", cpath);
    if (!points.is_array()) schema_error(cpath + ".points", "expected an array");
    for (std::size_t p = 0; p < points.size(); ++p) {
      const std::string ppath = cpath + ".points[" + std::to_string(p) + "]";
      const json& kind = field(points[p], "kind", ppath);
      if (!kind.is_string()) schema_error(ppath + ".kind", "expected a string");
      const element_id m = element_from_json(field(points[p], "m", ppath), group, ppath + ".m");
      const std::string k = kind.get<std::string>();
      if (k == "cyclic") {
        comp.points.push_back(MarkedPoint::cyclic(m));
      } else if (k == "dihedral") {
        comp.points.push_back(
            MarkedPoint::dihedral(m, element_from_json(field(points[p], "s", ppath), group, ppath + ".s")));
      } else if (k == "node") {
        comp.points.push_back(MarkedPoint::node_end(m, int_field(points[p], "node", ppath)));
      } else {
        schema_error(ppath + ".kind", "unknown kind \"" + k + "\"");
      }
    }
    d.components.push_back(std::move(comp));
  }
  return d;
}

json to_json(const HurwitzTuple& t) {
  json entries = json::array();
  for (element_id g : t.entries) entries.push_back(to_json(t.group->element(g)));
  return {{"group", to_json(*t.group)}, {"tuple", entries}};
}

HurwitzTuple tuple_from_json(const json& j) {
  HurwitzTuple t;
  t.group = group_from_json(field(j, "group", "$"), "$.group");
  const json& entries = field(j, "tuple", "$");
  if (!entries.is_array()) schema_error("$.tuple", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    t.entries.push_back(element_from_json(entries[i], t.group, "$.tuple[" + std::to_string(i) + "]"));
  }
  return t;
}

json class_table(const PermGroup& g) {
  json out = json::array();
  for (const auto& cls : g.classes()) {
    out.push_back({{"order", g.element_order(cls.front())},
                   {"size", cls.size()},
                   {"representative", to_json(g.element(cls.front()))}});
  }
  return out;
}

json to_json(const ClassFunction& f) { return json(f.values()); }

}  // namespace hurwitz::io
