#include "rdg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "rdg/format.hpp"
#include "rdg/generators.hpp"
#include "rdg/geometry.hpp"
#include "rdg/invariants.hpp"
#include "rdg/moves.hpp"
#include "rdg/render.hpp"
#include "rdg/search.hpp"

namespace rdg {

namespace {

using ojson = nlohmann::ordered_json;

// Input problems surfaced by subcommands; mapped to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RectDiagram load(const std::string& path) {
  const auto text = read_text(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError(path + ": cannot write");
  f << text;
}

ojson class_json(const Move& m, const MoveClass& c) {
  return ojson{{"move", to_string(m)},
               {"label", to_string(c.label)},
               {"delta_tb", c.delta_tb},
               {"delta_rot", c.delta_rot},
               {"delta_sl_plus", c.delta_sl_plus}};
}

std::string class_text(const Move& m, const MoveClass& c) {
  return to_string(m) + " " + to_string(c.label) + " dtb " + std::to_string(c.delta_tb) + " drot " +
         std::to_string(c.delta_rot) + " dsl+ " + std::to_string(c.delta_sl_plus);
}

std::optional<std::int64_t> env_budget() {
  const char* v = std::getenv("RDG_BUDGET");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const long long b = std::strtoll(v, &end, 10);
  if (*end != '\0' || b <= 0) throw InputError("RDG_BUDGET must be a positive integer");
  return b;
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rectangular diagrams of Legendrian and transverse links"};
  app.name("rdg");
  app.require_subcommand(1);

  std::function<int()> run;
  bool json = false;
  std::string output;

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file");
  std::string in1, in2;
  validate_cmd->add_option("file", in1, "Diagram file ('-' for stdin)")->required();
  validate_cmd->add_flag("--json", json, "JSON output");
  validate_cmd->callback([&] {
    run = [&] {
      const auto text = read_text(in1);
      RectDiagram d;
      try {
        d = parse_unchecked(text);
      } catch (const ParseError& e) {
        throw InputError(in1 + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
      }
      const auto rep = validate(d);
      if (json) {
        ojson j{{"valid", rep.ok()}, {"violations", ojson::array()}};
        for (const auto& v : rep.violations) j["violations"].push_back({{"axiom", v.axiom}, {"message", v.message}});
        out << j.dump() << '\n';
      } else if (rep.ok()) {
        out << "ok\n";
      } else {
        for (const auto& v : rep.violations) out << "axiom " << v.axiom << ": " << v.message << '\n';
      }
      return rep.ok() ? kExitOk : kExitInvalid;
    };
  });

  // inv
  auto* inv_cmd = app.add_subcommand("inv", "Classical invariants");
  std::optional<double> theta;
  inv_cmd->add_option("file", in1, "Diagram file")->required();
  inv_cmd->add_option("--theta", theta, "Position on the column circle [0, n) for the winding number");
  inv_cmd->add_flag("--json", json, "JSON output");
  inv_cmd->callback([&] {
    run = [&] {
      const auto d = load(in1);
      auto r = invariants(d);
      if (theta) r.winding = winding(d, theta);
      if (json) {
        ojson j{{"omega", r.omega}, {"winding", r.winding}, {"up", r.up},
                {"down", r.down},   {"tb", r.tb},           {"rot", r.rot}};
        out << j.dump() << '\n';
      } else {
        out << "omega " << r.omega << "\nwinding " << r.winding << "\nup " << r.up << "\ndown " << r.down << "\ntb "
            << r.tb << "\nrot " << r.rot << "\nsl_plus " << r.tb - r.rot << "\nsl_minus " << r.tb + r.rot << '\n';
      }
      return kExitOk;
    };
  });

  // braid
  auto* braid_cmd = app.add_subcommand("braid", "Flip every backward row");
  braid_cmd->add_option("file", in1, "Diagram file")->required();
  braid_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  braid_cmd->callback([&] {
    run = [&] {
      emit(serialize(braid(load(in1))), output, out);
      return kExitOk;
    };
  });

  // flip
  auto* flip_cmd = app.add_subcommand("flip", "Flip one row");
  int flip_row = 0;
  flip_cmd->add_option("file", in1, "Diagram file")->required();
  flip_cmd->add_option("row", flip_row, "z rank")->required();
  flip_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  flip_cmd->callback([&] {
    run = [&] {
      emit(serialize(flip(load(in1), flip_row)), output, out);
      return kExitOk;
    };
  });

  // move
  auto* move_cmd = app.add_subcommand("move", "Apply moves in order, e.g. stab:1,2,NE flip:3 rot:1");
  std::vector<std::string> move_texts;
  move_cmd->add_option("file", in1, "Diagram file")->required();
  move_cmd->add_option("moves", move_texts, "Move literals")->required();
  move_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  move_cmd->add_flag("--json", json, "Report each move's classification as JSON");
  move_cmd->callback([&] {
    run = [&] {
      auto d = load(in1);
      ojson steps = ojson::array();
      std::string report;
      for (const auto& t : move_texts) {
        Move m;
        try {
          m = parse_move(t);
        } catch (const Error& e) {
          throw InputError(e.what());
        }
        const auto cls = classify(d, m);
        d = apply(d, m);
        steps.push_back(class_json(m, cls));
        report += class_text(m, cls) + '\n';
      }
      if (json) {
        out << ojson{{"moves", steps}, {"diagram", serialize(d)}}.dump() << '\n';
        if (!output.empty()) emit(serialize(d), output, out);
      } else {
        emit(serialize(d), output, out);
        err << report;
      }
      return kExitOk;
    };
  });

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "Bounded search for a move sequence");
  std::string move_set = "legendrian";
  int max_depth = 10, max_grid = 0;
  std::optional<std::int64_t> budget;
  bool braided_only = false;
  equiv_cmd->add_option("file1", in1, "Source diagram")->required();
  equiv_cmd->add_option("file2", in2, "Target diagram")->required();
  equiv_cmd->add_option("--moves", move_set, "legendrian | transverse | topological")
      ->check(CLI::IsMember({"legendrian", "transverse", "transverse_plus", "topological"}));
  equiv_cmd->add_option("--max-depth", max_depth, "Total search depth")->check(CLI::NonNegativeNumber);
  equiv_cmd->add_option("--max-grid", max_grid, "Largest intermediate n (default max(n1, n2) + 2)")
      ->check(CLI::NonNegativeNumber);
  equiv_cmd->add_option("--budget", budget, "Node budget (default $RDG_BUDGET or 1000000)")
      ->check(CLI::PositiveNumber);
  equiv_cmd->add_flag("--braided-only", braided_only, "Restrict intermediate diagrams to braided ones");
  equiv_cmd->add_flag("--json", json, "JSON output");
  equiv_cmd->callback([&] {
    run = [&] {
      const auto a = load(in1);
      const auto b = load(in2);
      SearchConfig cfg;
      cfg.move_set = parse_move_set(move_set);
      cfg.max_depth = max_depth;
      cfg.max_grid = max_grid;
      cfg.braided_only = braided_only;
      if (auto e = env_budget()) cfg.node_budget = *e;
      if (budget) cfg.node_budget = *budget;
      if (max_grid != 0 && max_grid < std::max(a.size(), b.size())) {
        throw InputError("--max-grid is smaller than an input diagram");
      }
      const auto cert = equivalent(a, b, cfg);
      const bool found = cert.verdict == Verdict::Equivalent;
      if (found && canonicalize(replay(a, cert, cfg.move_set)) != canonicalize(b)) {
        throw Error("internal: certificate does not replay to the target");
      }
      if (json) {
        ojson j{{"verdict", found ? "equivalent" : "not_found_within_bounds"}};
        if (found) {
          j["path"] = ojson::array();
          for (const auto& s : cert.path) j["path"].push_back(class_json(s.move, s.cls));
        } else {
          j["reason"] = cert.reason;
          if (cert.obstruction) j["obstruction"] = *cert.obstruction;
        }
        j["nodes_explored"] = cert.nodes_explored;
        out << j.dump() << '\n';
      } else if (found) {
        out << "equivalent in " << cert.path.size() << " move" << (cert.path.size() == 1 ? "" : "s") << '\n';
        for (const auto& s : cert.path) out << "  " << class_text(s.move, s.cls) << '\n';
      } else {
        out << "not found within bounds (" << cert.reason;
        if (cert.obstruction) out << ": " << *cert.obstruction << " differs";
        out << ")\n";
      }
      return found ? kExitOk : kExitNotFound;
    };
  });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "unknot | unknot-braided | braid <word> <k> | torus <p> <q> | cable-slope <r> <s>");
  std::string kind;
  std::vector<std::string> params;
  gen_cmd->add_option("kind", kind, "What to generate")
      ->required()
      ->check(CLI::IsMember({"unknot", "unknot-braided", "braid", "torus", "cable-slope"}));
  gen_cmd->add_option("params", params, "Parameters");
  gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  gen_cmd->add_flag("--json", json, "JSON output (cable-slope)");
  gen_cmd->callback([&] {
    run = [&] {
      auto need = [&](std::size_t k) {
        if (params.size() != k) {
          throw InputError("gen " + kind + " takes " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
        }
      };
      if (kind == "cable-slope") {
        need(2);
        const CableSpec spec{to_int(params[0], "r"), to_int(params[1], "s")};
        const auto slope = cable_slope(spec);
        if (json) {
          const auto [p, q] = cable_type(spec);
          out << ojson{{"slope", to_string(slope)}, {"cable_type", {p, q}}}.dump() << '\n';
        } else {
          out << to_string(slope) << '\n';
        }
        return kExitOk;
      }
      RectDiagram d;
      if (kind == "unknot") {
        need(0);
        d = gen_unknot_rect();
      } else if (kind == "unknot-braided") {
        need(0);
        d = gen_unknot_braided();
      } else if (kind == "braid") {
        need(2);
        d = gen_braid_closure(parse_braid_word(params[0]), to_int(params[1], "strand count"));
      } else {
        need(2);
        d = gen_torus_knot(to_int(params[0], "p"), to_int(params[1], "q"));
      }
      emit(serialize(d), output, out);
      return kExitOk;
    };
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "Draw a diagram (SVG, or text with --ascii)");
  bool ascii = false;
  render_cmd->add_option("file", in1, "Diagram file")->required();
  render_cmd->add_flag("--ascii", ascii, "Plain-text grid instead of SVG");
  render_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  render_cmd->callback([&] {
    run = [&] {
      const auto d = load(in1);
      emit(ascii ? render_ascii(d) : render_svg(d), output, out);
      return kExitOk;
    };
  });

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "Piecewise-Legendrian curve as CSV (r,theta,z,tag)");
  EmbedOptions eo;
  double shift = 0;
  bool residual = false;
  embed_cmd->add_option("file", in1, "Diagram file")->required();
  embed_cmd->add_option("--r1", eo.r1, "Radius of the near-horizontal arcs");
  embed_cmd->add_option("--r2", eo.r2, "Radius of the near-vertical arcs");
  embed_cmd->add_option("--samples", eo.samples_per_arc, "Samples per arc");
  embed_cmd->add_option("--shift", shift, "Apply the half-space map with this parameter");
  embed_cmd->add_flag("--residual", residual, "Print the contact residual report instead of the curve");
  embed_cmd->add_flag("--json", json, "JSON residual report");
  embed_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  embed_cmd->callback([&] {
    run = [&] {
      auto c = embed(load(in1), eo);
      if (shift != 0) c = half_space_shift(c, shift);
      if (!residual && !json) {
        emit(curve_to_csv(c), output, out);
        return kExitOk;
      }
      const auto rep = contact_residual(c);
      if (json) {
        ojson j{{"max_residual", rep.max_residual}, {"segments", rep.segments}, {"per_tag", ojson::object()}};
        for (const auto& [tag, v] : rep.per_tag) j["per_tag"][to_string(tag)] = v;
        out << j.dump() << '\n';
      } else {
        out << "max_residual " << rep.max_residual << "\nsegments " << rep.segments << '\n';
        for (const auto& [tag, v] : rep.per_tag) out << to_string(tag) << ' ' << v << '\n';
      }
      return kExitOk;
    };
  });

  // front
  auto* front_cmd = app.add_subcommand("front", "Front projection as SVG");
  front_cmd->add_option("file", in1, "Diagram file")->required();
  front_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  front_cmd->callback([&] {
    run = [&] {
      emit(front_to_svg(front_from_diagram(load(in1))), output, out);
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  try {
    return run();
  } catch (const MoveRejected& e) {
    err << "rdg: move rejected: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "rdg: " << e.what() << '\n';
  }
  return kExitInvalid;
}

}  // namespace rdg
