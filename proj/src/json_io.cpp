#include "reebforge/json_io.hpp"

#include <json.hpp>
#include <sstream>

namespace reebforge {

namespace {

using nlohmann::json;

json graph_json(const Multigraph& g) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.vertex_id(v));
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges())
    j["edges"].push_back(json::array({g.vertex_id(u), g.vertex_id(v)}));
  return j;
}

Multigraph graph_from(const json& j) {
  Multigraph g;
  for (const auto& v : j.at("vertices")) g.ensure_vertex(v.get<std::string>());
  for (const auto& ed : j.at("edges")) {
    if (!ed.is_array() || ed.size() != 2)
      throw std::invalid_argument("graph edge must be a pair of vertex ids");
    g.ensure_vertex(ed[0].get<std::string>());
    g.ensure_vertex(ed[1].get<std::string>());
    g.add_edge(ed[0].get<std::string>(), ed[1].get<std::string>());
  }
  return g;
}

// Uniform error surface for the CLI: every malformed input is an
// std::invalid_argument no matter where nlohmann noticed it.
template <class F>
auto parsing(const std::string& text, F&& f) -> decltype(f(json{})) {
  try {
    return f(json::parse(text));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& ex) {
    throw std::invalid_argument(ex.what());
  }
}

json rat_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from(const json& j) { return rat_from_string(j.get<std::string>()); }

json curve_json(const Curve& c) {
  json j;
  j["name"] = c.name;
  j["group"] = c.group;
  switch (c.shape) {
    case CurveShape::VLine:
    case CurveShape::HLine:
      j["shape"] = c.shape == CurveShape::VLine ? "vline" : "hline";
      j["c0"] = rat_json(c.c0);
      j["side"] = c.side;
      break;
    case CurveShape::Circle:
      j["shape"] = "circle";
      j["cx"] = rat_json(c.cx);
      j["cy"] = rat_json(c.cy);
      j["r2"] = rat_json(c.r2);
      if (c.radius) j["radius"] = rat_json(*c.radius);
      break;
  }
  return j;
}

Curve curve_from(const json& j) {
  std::string shape = j.at("shape").get<std::string>();
  std::string name = j.at("name").get<std::string>();
  int group = j.at("group").get<int>();
  if (shape == "vline")
    return Curve::vline(rat_from(j.at("c0")), j.at("side").get<int>(), group, name);
  if (shape == "hline")
    return Curve::hline(rat_from(j.at("c0")), j.at("side").get<int>(), group, name);
  if (shape == "circle") {
    std::optional<Rat> radius;
    if (j.contains("radius")) radius = rat_from(j.at("radius"));
    return Curve::circle(rat_from(j.at("cx")), rat_from(j.at("cy")), rat_from(j.at("r2")), group,
                         name, radius);
  }
  throw std::invalid_argument("unknown curve shape '" + shape + "'");
}

json edge_pair_json(const std::pair<std::string, std::string>& ed) {
  return json::array({ed.first, ed.second});
}

json arrangement_json(const Arrangement& a) {
  json j;
  j["exponents"] = a.exponents;
  j["bounds"] = {{"X1", rat_json(a.X1)},
                 {"X2", rat_json(a.X2)},
                 {"Y1", rat_json(a.Y1)},
                 {"Y2", rat_json(a.Y2)}};
  j["region_seed"] = json::array({rat_json(a.region_seed.first), rat_json(a.region_seed.second)});
  j["curves"] = json::array();
  for (const Curve& c : a.curves) j["curves"].push_back(curve_json(c));
  j["splitter_count"] = a.splitter_count;
  j["event_columns"] = json::object();
  for (const auto& [v, x] : a.event_column) j["event_columns"][v] = rat_json(x);
  j["uncovered_edges"] = json::array();
  for (const auto& ed : a.uncovered_edges) j["uncovered_edges"].push_back(edge_pair_json(ed));
  j["notes"] = a.notes;
  return j;
}

Arrangement arrangement_from(const json& j) {
  Arrangement a;
  auto exps = j.at("exponents");
  if (!exps.is_array() || exps.size() != 4)
    throw std::invalid_argument("exponents must be a 4-element array");
  for (int g = 0; g < 4; ++g) a.exponents[g] = exps[g].get<int>();
  const json& b = j.at("bounds");
  a.X1 = rat_from(b.at("X1"));
  a.X2 = rat_from(b.at("X2"));
  a.Y1 = rat_from(b.at("Y1"));
  a.Y2 = rat_from(b.at("Y2"));
  const json& seed = j.at("region_seed");
  a.region_seed = {rat_from(seed.at(0)), rat_from(seed.at(1))};
  for (const auto& c : j.at("curves")) a.curves.push_back(curve_from(c));
  a.splitter_count = j.value("splitter_count", 0);
  if (j.contains("event_columns"))
    for (const auto& [v, x] : j.at("event_columns").items()) a.event_column[v] = rat_from(x);
  if (j.contains("uncovered_edges"))
    for (const auto& ed : j.at("uncovered_edges"))
      a.uncovered_edges.push_back({ed.at(0).get<std::string>(), ed.at(1).get<std::string>()});
  if (j.contains("notes"))
    for (const auto& n : j.at("notes")) a.notes.push_back(n.get<std::string>());
  return a;
}

json reeb_json(const ReebGraph& rg) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < rg.skeleton.vertex_count(); ++v) {
    const std::string& id = rg.skeleton.vertex_id(v);
    json vert;
    vert["id"] = id;
    vert["level"] = rat_json(rg.vertex_level.at(id));
    vert["provenance"] = rg.vertex_provenance.at(id);
    j["vertices"].push_back(vert);
  }
  j["edges"] = json::array();
  for (const auto& [u, v] : rg.skeleton.edges())
    j["edges"].push_back(json::array({rg.skeleton.vertex_id(u), rg.skeleton.vertex_id(v)}));
  j["edge_fibers"] = rg.edge_fiber;
  j["verified"] = rg.verified;
  return j;
}

json validation_json(const ValidationReport& r) {
  json j;
  j["pass"] = r.pass();
  j["issues"] = json::array();
  for (const ValidationIssue& i : r.issues)
    j["issues"].push_back({{"check", i.check}, {"detail", i.detail}});
  return j;
}

json system_json(const AlgebraicSystem& s) {
  json j;
  j["plane_variables"] = json::array({"x1", "x2"});
  j["ambient_dimension"] = s.ambient_dimension;
  j["manifold_dimension"] = s.manifold_dimension;
  j["equations"] = json::array();
  for (const GroupEquation& eq : s.equations) {
    json e;
    e["group"] = eq.group;
    e["exponent"] = eq.exponent;
    json vars = json::array();
    for (int k = 0; k <= eq.exponent; ++k)
      vars.push_back("y" + std::to_string(eq.group) + "_" + std::to_string(k));
    e["variables"] = vars;
    e["polynomial"] = poly_to_string(eq.product);
    json coeffs = json::array();
    for (const auto& [deg, c] : eq.product)
      coeffs.push_back({{"dx1", deg.first}, {"dx2", deg.second}, {"c", rat_json(c)}});
    e["coefficients"] = coeffs;
    json names = json::array();
    for (int ci : eq.curve_indices) names.push_back(s.curves.at(ci).name);
    e["curves"] = names;
    j["equations"].push_back(e);
  }
  return j;
}

json jacobian_json(const JacobianReport& r) {
  return json{{"points_checked", r.points_checked},
              {"max_residual", r.max_residual},
              {"min_singular_value", r.min_singular_value},
              {"worst_ratio", r.worst_ratio},
              {"pass", r.pass}};
}

json embedding_json(const LeveledEmbedding& e) {
  json j;
  j["tree"] = graph_json(e.tree);
  j["root"] = e.root;
  j["level_count"] = e.level_count;
  j["levels"] = json::object();
  for (const auto& [v, l] : e.level_of) j["levels"][v] = l;
  j["lanes"] = json::object();
  for (const auto& [v, lane] : e.lane_of) j["lanes"][v] = rat_json(lane);
  j["gap_counts"] = e.gap_count;
  j["gap_edges"] = e.gap_edges;
  j["leaf_order"] = e.leaf_order;
  json bands = json::array();
  for (const auto& [lo, hi] : e.edge_band)
    bands.push_back(json::array({rat_json(lo), rat_json(hi)}));
  j["edge_bands"] = bands;
  return j;
}

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string graph_to_json(const Multigraph& g) { return dumped(graph_json(g)); }

Multigraph graph_from_json(const std::string& text) {
  return parsing(text, [](const json& j) { return graph_from(j); });
}

Multigraph graph_from_edge_list(const std::string& text) {
  Multigraph g;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) {
      g.ensure_vertex(u);
      continue;
    }
    if (ls >> extra) throw std::invalid_argument("edge list line has more than two tokens: " + line);
    g.ensure_vertex(u);
    g.ensure_vertex(v);
    g.add_edge(u, v);
  }
  return g;
}

Multigraph graph_from_text(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return graph_from_json(text);
  return graph_from_edge_list(text);
}

std::string decomposition_to_json(const TreeDecomposition& d) {
  json j;
  j["pieces"] = json::array();
  for (const DecompPiece& p : d.pieces) {
    json piece;
    if (p.kind == PieceKind::Bridge) {
      piece["kind"] = "bridge";
    } else {
      bool all_deg2 = true;
      for (int v = 0; v < p.graph.vertex_count(); ++v)
        if (p.graph.degree(v) != 2) all_deg2 = false;
      piece["kind"] = all_deg2 ? "cycle" : "other";
    }
    piece["vertices"] = json::array();
    for (int v = 0; v < p.graph.vertex_count(); ++v)
      piece["vertices"].push_back(p.graph.vertex_id(v));
    piece["edges"] = json::array();
    for (const auto& [u, v] : p.graph.edges())
      piece["edges"].push_back(json::array({p.graph.vertex_id(u), p.graph.vertex_id(v)}));
    j["pieces"].push_back(piece);
  }
  j["tree"] = graph_json(d.tree);
  j["incidence"] = json::array();
  for (const auto& [pieces, vertex] : d.incidence)
    j["incidence"].push_back(
        {{"pieces", json::array({pieces.first, pieces.second})}, {"vertex", vertex}});
  return dumped(j);
}

std::string embedding_to_json(const LeveledEmbedding& e) { return dumped(embedding_json(e)); }

std::string arrangement_to_json(const Arrangement& a) { return dumped(arrangement_json(a)); }

Arrangement arrangement_from_json(const std::string& text) {
  return parsing(text, [](const json& j) { return arrangement_from(j); });
}

std::string reeb_to_json(const ReebGraph& rg) { return dumped(reeb_json(rg)); }

std::string system_to_json(const AlgebraicSystem& s) { return dumped(system_json(s)); }

std::string system_to_text(const AlgebraicSystem& s) {
  std::ostringstream os;
  os << "ambient dimension " << s.ambient_dimension << ", manifold dimension "
     << s.manifold_dimension << "\n";
  for (const GroupEquation& eq : s.equations) {
    os << "group " << eq.group << ": " << poly_to_string(eq.product) << " = ";
    for (int k = 0; k <= eq.exponent; ++k)
      os << (k ? " + " : "") << "y" << eq.group << "_" << k << "^2";
    os << "\n";
  }
  return os.str();
}

Thm4Selection selection_from_json(const std::string& text) {
  return parsing(text, [](const json& j) {
    Thm4Selection sel;
    sel.global_I4_zero = j.value("global_I4_zero", true);
    if (j.contains("sets"))
      for (const auto& s : j.at("sets")) {
        OmissionSet set;
        std::string form = s.at("form").get<std::string>();
        if (form == "root")
          set.form = OmissionForm::Root;
        else if (form == "terminal")
          set.form = OmissionForm::Terminal;
        else if (form == "triple")
          set.form = OmissionForm::Triple;
        else
          throw std::invalid_argument("unknown omission form '" + form + "'");
        for (const auto& ed : s.at("edges")) {
          if (!ed.is_array() || ed.size() != 2)
            throw std::invalid_argument("selection edge must be a pair of vertex ids");
          set.edges.push_back({ed[0].get<std::string>(), ed[1].get<std::string>()});
        }
        sel.sets.push_back(std::move(set));
      }
    return sel;
  });
}

std::string validation_to_json(const ValidationReport& r) { return dumped(validation_json(r)); }

std::string bundle_to_json(const RealizationBundle& b) {
  json j;
  j["input_graph"] = graph_json(b.input_graph);
  j["embedding"] = embedding_json(b.embedding);
  j["arrangement"] = arrangement_json(b.arrangement);
  j["system"] = system_json(b.system);
  j["reeb"] = reeb_json(b.computed_reeb);
  json cert;
  cert["validator"] = validation_json(b.certificate.validator);
  if (b.certificate.isomorphism) {
    json iso;
    iso["vertex_map"] = b.certificate.isomorphism->vertex_map;
    json bundles = json::array();
    for (const auto& bun : b.certificate.isomorphism->edge_multiplicity_witness)
      bundles.push_back({{"from", edge_pair_json(bun.from)},
                         {"to", edge_pair_json(bun.to)},
                         {"multiplicity", bun.multiplicity}});
    iso["edge_multiplicity_witness"] = bundles;
    cert["isomorphism"] = iso;
  } else {
    cert["isomorphism"] = nullptr;
    cert["mismatch"] = b.certificate.mismatch;
  }
  cert["jacobian"] = jacobian_json(b.certificate.jacobian);
  cert["oracle"] = {{"consistent", b.certificate.oracle_consistent},
                    {"resolution", b.certificate.oracle_resolution}};
  cert["divergences"] = b.certificate.divergences;
  j["certificate"] = cert;
  return dumped(j);
}

}  // namespace reebforge
