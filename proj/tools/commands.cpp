#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "analysis.hpp"
#include "hurwitz/cover.hpp"
#include "hurwitz/degen.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/json_io.hpp"

namespace hurwitz::cli {

namespace {

/// Maps exceptions onto the exit-code contract.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::Schema:
      case ErrorCode::InvalidPermutation:
      case ErrorCode::DegreeMismatch:
      case ErrorCode::ClosureBoundExceeded:
        return kExitUsage;
      default:
        return kExitViolation;
    }
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BoundaryDatum d = io::datum_from_json(io::read_file(options.path));
    if (options.stabilizer_point &&
        (*options.stabilizer_point < 0 || *options.stabilizer_point >= d.group->degree())) {
      err << "error: --stabilizer-point out of range\n";
      return kExitUsage;
    }
    const AnalysisReport report = analyze(d, {options.stabilizer_point});
    if (options.pretty) {
      out << render_pretty(report);
    } else {
      out << to_json(report).dump(2) << '\n';
    }
    return report.valid ? kExitOk : kExitViolation;
  });
}

int cmd_degenerate(const DegenerateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const HurwitzTuple t = io::tuple_from_json(io::read_file(options.path));
    check_product_one(t);
    const PermGroup& g = *t.group;
    const bool splits = options.splits || !options.dihedral;
    const bool dihedral = options.dihedral || !options.splits;

    std::vector<Degeneration> list;
    std::vector<std::string> warnings;
    if (splits) {
      auto found = split_degenerations(t);
      list.insert(list.end(), found.begin(), found.end());
    }
    if (dihedral) {
      std::vector<int> indices;
      if (options.index) {
        indices.push_back(*options.index);
      } else {
        for (int i = 0; i < static_cast<int>(t.entries.size()); ++i) indices.push_back(i);
      }
      for (int i : indices) {
        if (i < 0 || i >= static_cast<int>(t.entries.size())) {
          err << "error: --index " << i << " out of range\n";
          return kExitUsage;
        }
        auto found = dihedral_degenerations(t, i);
        if (found.empty()) {
          const element_id m = t.entries[static_cast<std::size_t>(i)];
          const element_id gens[] = {m};
          const Subgroup n = normalizer(Subgroup::generated_by(t.group, gens));
          warnings.push_back("Realizability: no involution outside <g_" + std::to_string(i) + "> inverts g_" +
                             std::to_string(i) + " = " + g.element(m).cycle_string() + " (order " +
                             std::to_string(g.element_order(m)) + "); its normalizer has order " +
                             std::to_string(n.order()));
        }
        list.insert(list.end(), found.begin(), found.end());
      }
    }
    const std::size_t raw = list.size();
    if (options.dedup) list = dedup(list);

    json result;
    result["tuple"] = io::to_json(t);
    result["raw_count"] = raw;
    result["count"] = list.size();
    result["warnings"] = warnings;
    result["degenerations"] = json::array();
    for (const auto& d : list) {
      json entry;
      entry["kind"] = std::string(to_string(d.kind));
      if (d.kind == DegenerationKind::Split) {
        entry["parameters"] = {{"k", d.split_k}};
      } else {
        entry["parameters"] = {{"index", d.index}, {"s", io::to_json(g.element(d.s))}};
      }
      entry["report"] = to_json(analyze(d.datum));
      result["degenerations"].push_back(std::move(entry));
    }

    if (options.pretty) {
      out << raw << " degenerations" << (options.dedup ? ", " + std::to_string(list.size()) + " after dedup" : "")
          << '\n';
      for (const auto& w : warnings) out << "warning " << w << '\n';
      for (const auto& d : list) {
        out << "== " << to_string(d.kind);
        if (d.kind == DegenerationKind::Split) {
          out << " k=" << d.split_k;
        } else {
          out << " index=" << d.index << " s=" << g.element(d.s).cycle_string();
        }
        out << '\n' << render_pretty(analyze(d.datum));
      }
    } else {
      out << result.dump(2) << '\n';
    }
    return kExitOk;
  });
}

int cmd_character(const CharacterOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BoundaryDatum d = io::datum_from_json(io::read_file(options.path));
    const AnalysisReport report = analyze(d);
    if (!report.valid) {
      for (const auto& v : report.violations) err << "violation " << v.kind << ": " << v.message << '\n';
      return kExitViolation;
    }
    if (options.json) {
      out << to_json(report)["characters"].dump(2) << '\n';
    } else {
      out << render_character_table(report);
    }
    return kExitOk;
  });
}

int cmd_graph(const GraphOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.which != "quotient" && options.which != "cover") {
      err << "error: --which must be quotient or cover\n";
      return kExitUsage;
    }
    const BoundaryDatum d = io::datum_from_json(io::read_file(options.path));
    if (!validate(d).ok()) {
      err << "error: datum does not validate\n";
      return kExitViolation;
    }
    std::ostringstream dot;
    if (options.which == "quotient") {
      const DualGraphOfGroups dual = dual_graph_of_groups(d);
      DotStyle style;
      style.name = "quotient";
      for (int e : dual.graph.unoriented_edges()) {
        style.edge_labels.push_back(std::to_string(dual.edge_group_order[static_cast<std::size_t>(e)]));
      }
      write_dot(dot, dual.graph, style);
    } else {
      const CoverCurve cover = build_cover(d);
      DotStyle style;
      style.name = "cover";
      for (const auto& comp : cover.components) {
        style.vertex_labels.push_back("g=" + std::to_string(comp.genus) + " |H|=" + std::to_string(comp.stabilizer_order));
      }
      for (std::size_t n = 0; n < cover.nodes.size(); ++n) {
        const NodeClass cls = classify_node(cover, n);
        style.edge_labels.push_back(std::to_string(cls.stabilizer.order()));
        style.dashed.push_back(cls.kind == NodeKind::DihedralNode);
      }
      write_dot(dot, cover.action.graph(), style);
    }
    if (options.dot == "-") {
      out << dot.str();
    } else {
      std::ofstream file(options.dot);
      if (!file) {
        err << "error: cannot write " << options.dot << '\n';
        return kExitUsage;
      }
      file << dot.str();
    }
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary data of finite group actions on stable curves"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Validate a boundary datum and analyze its cover");
  analyze_cmd->add_option("datum", analyze_opts.path, "Datum JSON file")->required();
  analyze_cmd->add_flag("--pretty", analyze_opts.pretty, "Print a readable summary instead of JSON");
  analyze_cmd->add_option("--stabilizer-point", analyze_opts.stabilizer_point,
                          "Also quotient the cover by the stabilizer of this point");

  DegenerateOptions degen_opts;
  auto* degen_cmd = app.add_subcommand("degenerate", "Enumerate codimension-1 degenerations of a Hurwitz tuple");
  degen_cmd->add_option("tuple", degen_opts.path, "Tuple JSON file")->required();
  degen_cmd->add_flag("--splits", degen_opts.splits, "Node-split degenerations");
  degen_cmd->add_flag("--dihedral", degen_opts.dihedral, "Dihedral degenerations");
  degen_cmd->add_option("--index", degen_opts.index, "Tuple position for --dihedral (default: all)");
  degen_cmd->add_flag("--dedup", degen_opts.dedup, "Keep one degeneration per conjugacy class");
  degen_cmd->add_flag("--pretty", degen_opts.pretty, "Readable output");

  CharacterOptions char_opts;
  auto* char_cmd = app.add_subcommand("character", "Character table of the cover's de Rham cohomology");
  char_cmd->add_option("datum", char_opts.path, "Datum JSON file")->required();
  char_cmd->add_flag("--json", char_opts.json, "JSON output");

  GraphOptions graph_opts;
  auto* graph_cmd = app.add_subcommand("graph", "Export a dual graph as DOT");
  graph_cmd->add_option("datum", graph_opts.path, "Datum JSON file")->required();
  graph_cmd->add_option("--dot", graph_opts.dot, "Output file ('-' for stdout)");
  graph_cmd->add_option("--which", graph_opts.which, "quotient or cover")
      ->check(CLI::IsMember({"quotient", "cover"}));

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify-examples", "Run the pinned audit of the built-in examples");
  verify_cmd->add_option("--datum", verify_opts.datum_path, "Replace the icosahedral dihedral datum");
  verify_cmd->add_flag("--json", verify_opts.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (*analyze_cmd) return cmd_analyze(analyze_opts, out, err);
  if (*degen_cmd) return cmd_degenerate(degen_opts, out, err);
  if (*char_cmd) return cmd_character(char_opts, out, err);
  if (*graph_cmd) return cmd_graph(graph_opts, out, err);
  if (*verify_cmd) return cmd_verify_examples(verify_opts, out, err);
  return kExitUsage;
}

}  // namespace hurwitz::cli
