// reeb-forge: tree and cactus realization toolkit.
//
// Exit codes: 0 success, 1 validation failure, 2 verification mismatch,
// 3 input parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "reebforge/decomp.hpp"
#include "reebforge/enumerate.hpp"
#include "reebforge/json_io.hpp"
#include "reebforge/svg.hpp"

using namespace reebforge;

namespace {

struct ExitWith {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw ExitWith{3, "missing --input"};
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ExitWith{3, "cannot read " + path};
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ExitWith{1, "cannot write " + path};
  out << text;
}

std::array<int, 4> parse_exponents(const std::string& spec, int def4) {
  std::array<int, 4> exps{1, 1, 1, def4};
  if (spec.empty()) return exps;
  std::istringstream in(spec);
  std::string tok;
  int k = 0;
  while (std::getline(in, tok, ',')) {
    if (k >= 4) throw ExitWith{3, "--exponents needs exactly four integers"};
    try {
      size_t used = 0;
      exps[k] = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ExitWith{3, "bad exponent '" + tok + "'"};
    }
    ++k;
  }
  if (k != 4) throw ExitWith{3, "--exponents needs exactly four integers"};
  return exps;
}

Thm4Selection parse_selection(const std::string& spec) {
  if (spec.empty()) return {};
  size_t i = spec.find_first_not_of(" \t\r\n");
  std::string text = (i != std::string::npos && spec[i] == '{') ? spec : read_input(spec);
  return selection_from_json(text);
}

int exit_code_for(const PipelineError& pe) {
  if (pe.stage == "input" || pe.stage == "selection" || pe.stage == "level") return 3;
  if (pe.stage == "verify" || pe.stage == "oracle") return 2;
  return 1;  // validate / arrange / emit / sweep
}

std::string decomposition_text(const TreeDecomposition& d) {
  std::ostringstream os;
  for (size_t i = 0; i < d.pieces.size(); ++i) {
    const DecompPiece& p = d.pieces[i];
    os << "piece " << i << " (" << (p.kind == PieceKind::Bridge ? "bridge" : "bridgeless")
       << "):";
    for (const auto& [u, v] : p.graph.edges())
      os << " " << p.graph.vertex_id(u) << "-" << p.graph.vertex_id(v);
    os << "\n";
  }
  os << "tree:";
  for (const auto& [u, v] : d.tree.edges())
    os << " " << d.tree.vertex_id(u) << "-" << d.tree.vertex_id(v);
  os << "\n";
  return os.str();
}

std::string embedding_text(const LeveledEmbedding& e) {
  std::ostringstream os;
  os << "root " << e.root << ", levels 1.." << e.level_count << "\n";
  for (const auto& [v, l] : e.level_of)
    os << v << ": level " << l << " lane " << rat_to_string(e.lane_of.at(v)) << "\n";
  os << "gap counts:";
  for (int c : e.gap_count) os << " " << c;
  os << "\n";
  return os.str();
}

std::string reeb_text(const ReebGraph& rg) {
  std::ostringstream os;
  if (!rg.verified) os << "UNVERIFIED (floating sweep; no rational event certificate)\n";
  for (int v = 0; v < rg.skeleton.vertex_count(); ++v) {
    const std::string& id = rg.skeleton.vertex_id(v);
    os << id << " @ " << rat_to_string(rg.vertex_level.at(id)) << " [";
    bool first = true;
    for (const std::string& tag : rg.vertex_provenance.at(id)) {
      os << (first ? "" : ", ") << tag;
      first = false;
    }
    os << "]\n";
  }
  for (size_t k = 0; k < rg.skeleton.edges().size(); ++k) {
    const auto& [u, v] = rg.skeleton.edges()[k];
    os << rg.skeleton.vertex_id(u) << " - " << rg.skeleton.vertex_id(v) << " : fiber "
       << rg.edge_fiber[k] << "\n";
  }
  return os.str();
}

std::string bundle_text(const RealizationBundle& b) {
  std::ostringstream os;
  os << "input: " << b.input_graph.vertex_count() << " vertices, "
     << b.input_graph.edge_count() << " edges\n";
  os << "arrangement: " << b.arrangement.curves.size() << " curves ("
     << b.arrangement.splitter_count << " splitters, " << b.arrangement.bites.size()
     << " markers)\n";
  os << "validator: " << (b.certificate.validator.pass() ? "pass" : "FAIL") << "\n";
  os << "reeb: " << b.computed_reeb.skeleton.vertex_count() << " vertices, "
     << b.computed_reeb.skeleton.edge_count() << " edges\n";
  os << "isomorphism: " << (b.certificate.isomorphism ? "witness" : b.certificate.mismatch)
     << "\n";
  os << "jacobian: " << (b.certificate.jacobian.pass ? "pass" : "FAIL") << " over "
     << b.certificate.jacobian.points_checked << " lifts\n";
  os << "oracle: " << (b.certificate.oracle_consistent ? "consistent" : "INCONSISTENT")
     << " at resolution " << b.certificate.oracle_resolution << "\n";
  for (const std::string& d : b.certificate.divergences) os << "divergence: " << d << "\n";
  return os.str();
}

struct Range {
  int lo = 2, hi = 7;
};

Range parse_range(const std::string& spec) {
  if (spec.empty()) return {};
  Range r;
  try {
    size_t dots = spec.find("..");
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(spec);
    } else {
      r.lo = std::stoi(spec.substr(0, dots));
      r.hi = std::stoi(spec.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw ExitWith{3, "bad size range '" + spec + "' (want N or A..B)"};
  }
  if (r.lo < 2 || r.hi < r.lo) throw ExitWith{3, "bad size range '" + spec + "'"};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree and cactus realization toolkit"};
  app.require_subcommand(1);

  std::string input, output, format, exponents_spec, selection_spec;
  int resolution = 128;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "input file ('-' = stdin)");
    sub->add_option("--output", output, "output file (default stdout)");
    sub->add_option("--format", format, "json|svg|text");
    sub->add_option("--exponents", exponents_spec, "I1,I2,I3,I4");
    sub->add_option("--selection", selection_spec, "omission selection (inline JSON or a file)");
    sub->add_option("--resolution", resolution, "raster oracle resolution");
    return sub;
  };

  CLI::App* decompose = common(app.add_subcommand("decompose", "bridge/bridgeless pieces"));
  CLI::App* level = common(app.add_subcommand("level", "leveled tree embedding"));
  CLI::App* realize = common(app.add_subcommand("realize", "realize a tree"));
  CLI::App* realize_cactus =
      common(app.add_subcommand("realize-cactus", "realize a cactus selection"));
  CLI::App* sweep = common(app.add_subcommand("sweep", "Reeb graph of an arrangement"));
  CLI::App* validate = common(app.add_subcommand("validate", "arrangement preconditions"));
  CLI::App* emit_system = common(app.add_subcommand("emit-system", "defining polynomial system"));
  CLI::App* enumerate_check =
      common(app.add_subcommand("enumerate-check", "realize every tree of the given sizes"));
  CLI::App* render = common(app.add_subcommand("render", "svg of tree, region, reeb graph"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (format.empty())
      format = render->parsed() ? "svg" : enumerate_check->parsed() ? "text" : "json";
    if (format != "json" && format != "svg" && format != "text")
      throw ExitWith{3, "unknown --format '" + format + "'"};

    if (decompose->parsed()) {
      Multigraph g = graph_from_text(read_input(input));
      TreeDecomposition d = tree_decomposition(g);
      write_output(output, format == "text" ? decomposition_text(d) : decomposition_to_json(d));
    } else if (level->parsed()) {
      LeveledEmbedding e = level_tree(graph_from_text(read_input(input)));
      write_output(output, format == "text" ? embedding_text(e) : embedding_to_json(e));
    } else if (realize->parsed() || realize_cactus->parsed() || render->parsed()) {
      Multigraph g = graph_from_text(read_input(input));
      bool cactus = realize_cactus->parsed() || !selection_spec.empty();
      RealizationBundle b;
      if (cactus) {
        Thm4Selection sel = parse_selection(selection_spec);
        b = reebforge::realize_cactus(g, sel, parse_exponents(exponents_spec, 0), resolution);
      } else {
        b = realize_tree(g, parse_exponents(exponents_spec, 1), resolution);
      }
      if (format == "svg")
        write_output(output, render_svg(b));
      else
        write_output(output, format == "text" ? bundle_text(b) : bundle_to_json(b));
      if (!b.certificate.validator.pass()) return 1;
      if (!b.certificate.isomorphism && !cactus) return 2;
    } else if (sweep->parsed()) {
      Arrangement a = arrangement_from_json(read_input(input));
      ReebGraph rg = sweep_reeb(a);
      if (format == "svg")
        write_output(output, render_region_svg(a, &rg));
      else
        write_output(output, format == "text" ? reeb_text(rg) : reeb_to_json(rg));
    } else if (validate->parsed()) {
      Arrangement a = arrangement_from_json(read_input(input));
      ValidationReport rep = validate_preconditions(a);
      std::ostringstream txt;
      txt << (rep.pass() ? "pass" : "FAIL") << "\n";
      for (const auto& i : rep.issues) txt << i.check << ": " << i.detail << "\n";
      write_output(output, format == "text" ? txt.str() : validation_to_json(rep));
      if (!rep.pass()) return 1;
    } else if (emit_system->parsed()) {
      Arrangement a = arrangement_from_json(read_input(input));
      AlgebraicSystem s = emit_algebraic_system(a);
      write_output(output, format == "text" ? system_to_text(s) : system_to_json(s));
    } else if (enumerate_check->parsed()) {
      Range r = parse_range(input);
      std::array<int, 4> exps = parse_exponents(exponents_spec, 1);
      std::ostringstream os;
      bool all_ok = true;
      for (int n = r.lo; n <= r.hi; ++n) {
        int total = 0, witnessed = 0;
        for (const Multigraph& t : enumerate_trees(n)) {
          ++total;
          RealizationBundle b = realize_tree(t, exps, resolution);
          if (b.certificate.isomorphism && b.certificate.validator.pass() &&
              b.certificate.oracle_consistent)
            ++witnessed;
        }
        os << "n=" << n << ": " << witnessed << "/" << total << " realized\n";
        if (witnessed != total) all_ok = false;
      }
      write_output(output, os.str());
      if (!all_ok) return 2;
    }
  } catch (const ExitWith& e) {
    std::cerr << "reeb-forge: " << e.message << "\n";
    return e.code;
  } catch (const PipelineError& pe) {
    std::cerr << "reeb-forge: " << pe.what() << "\n";
    return exit_code_for(pe);
  } catch (const std::invalid_argument& e) {
    std::cerr << "reeb-forge: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "reeb-forge: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
