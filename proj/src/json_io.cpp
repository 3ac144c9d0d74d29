#include "smalehom/json_io.hpp"

#include <fstream>

namespace smalehom {

namespace {

const Json& require_key(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string(what) + ": missing key \"" + key + "\"");
  return j.at(key);
}

Integer integer_from_json(const Json& j, const char* what) {
  try {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long>());
  } catch (const std::invalid_argument&) {
  }
  throw ValidationError(std::string(what) + ": entry is not an integer or decimal string");
}

Index index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ValidationError(std::string(what) + ": expected a nonnegative integer");
  return static_cast<Index>(j.get<long long>());
}

}  // namespace

Json matrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  const Index rows = index_from_json(require_key(j, "rows", "matrix"), "matrix.rows");
  const Index cols = index_from_json(require_key(j, "cols", "matrix"), "matrix.cols");
  const Json& entries = require_key(j, "entries", "matrix");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows)
    throw ValidationError("matrix.entries: expected " + std::to_string(rows) + " rows");
  IntMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ValidationError("matrix.entries: row " + std::to_string(i) + " must have " +
                            std::to_string(cols) + " entries");
    for (Index k = 0; k < cols; ++k)
      out(i, k) = integer_from_json(row[static_cast<std::size_t>(k)], "matrix.entries");
  }
  return out;
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["vertices"] = g.vertex_labels();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json je;
    je["id"] = e.id;
    je["src"] = g.vertex_label(e.src);
    je["dst"] = g.vertex_label(e.dst);
    edges.push_back(std::move(je));
  }
  out["edges"] = std::move(edges);
  return out;
}

Graph graph_from_json(const Json& j) {
  const Json& vertices = require_key(j, "vertices", "graph");
  const Json& edges = require_key(j, "edges", "graph");
  if (!vertices.is_array()) throw ValidationError("graph.vertices: expected an array");
  if (!edges.is_array()) throw ValidationError("graph.edges: expected an array");
  std::vector<std::string> vl;
  for (const auto& v : vertices) {
    if (!v.is_string()) throw ValidationError("graph.vertices: labels must be strings");
    vl.push_back(v.get<std::string>());
  }
  std::vector<std::array<std::string, 3>> el;
  for (const auto& e : edges) {
    el.push_back({require_key(e, "id", "graph.edge").get<std::string>(),
                  require_key(e, "src", "graph.edge").get<std::string>(),
                  require_key(e, "dst", "graph.edge").get<std::string>()});
  }
  return Graph(std::move(vl), el);
}

Json hom_to_json(const GraphHom& h) {
  Json out;
  out["source"] = graph_to_json(h.source());
  out["target"] = graph_to_json(h.target());
  Json vm;
  for (Index v = 0; v < h.source().n_vertices(); ++v)
    vm[h.source().vertex_label(v)] = h.target().vertex_label(h.vertex_image(v));
  Json em;
  for (Index e = 0; e < h.source().n_edges(); ++e)
    em[h.source().edge(e).id] = h.target().edge(h.edge_image(e)).id;
  out["vertex_map"] = std::move(vm);
  out["edge_map"] = std::move(em);
  return out;
}

GraphHom hom_from_json(const Json& j) {
  Graph source = graph_from_json(require_key(j, "source", "hom"));
  Graph target = graph_from_json(require_key(j, "target", "hom"));
  const Json& vm = require_key(j, "vertex_map", "hom");
  const Json& em = require_key(j, "edge_map", "hom");
  std::vector<Index> vertex_map, edge_map;
  for (Index v = 0; v < source.n_vertices(); ++v) {
    const std::string& label = source.vertex_label(v);
    if (!vm.contains(label))
      throw ValidationError("hom.vertex_map: missing image of \"" + label + "\"");
    vertex_map.push_back(target.vertex_index(vm.at(label).get<std::string>()));
  }
  for (Index e = 0; e < source.n_edges(); ++e) {
    const std::string& id = source.edge(e).id;
    if (!em.contains(id))
      throw ValidationError("hom.edge_map: missing image of \"" + id + "\"");
    edge_map.push_back(target.edge_index(em.at(id).get<std::string>()));
  }
  return GraphHom(std::move(source), std::move(target), std::move(vertex_map),
                  std::move(edge_map));
}

Json complex_to_json(const PutnamComplex& p) {
  Json degrees = Json::array();
  for (Index n = 0; n < p.n_degrees(); ++n) {
    const auto& d = p.degree(n);
    Json jd;
    jd["rank"] = d.rank;
    jd["gamma"] = matrix_to_json(d.gamma);
    jd["boundary"] = d.boundary ? matrix_to_json(*d.boundary) : Json(nullptr);
    degrees.push_back(std::move(jd));
  }
  Json out;
  out["degrees"] = std::move(degrees);
  out["provenance"] =
      p.provenance() == PutnamComplex::Provenance::preset ? "preset" : "computed-from-hom";
  return out;
}

PutnamComplex complex_from_json(const Json& j) {
  const Json& degrees = require_key(j, "degrees", "complex");
  if (!degrees.is_array()) throw ValidationError("complex.degrees: expected an array");
  std::vector<PutnamComplex::Degree> out;
  for (const auto& jd : degrees) {
    PutnamComplex::Degree d;
    d.rank = index_from_json(require_key(jd, "rank", "complex.degree"), "complex.rank");
    d.gamma = matrix_from_json(require_key(jd, "gamma", "complex.degree"));
    if (jd.contains("boundary") && !jd.at("boundary").is_null())
      d.boundary = matrix_from_json(jd.at("boundary"));
    out.push_back(std::move(d));
  }
  std::string prov = "preset";
  if (j.contains("provenance")) prov = j.at("provenance").get<std::string>();
  return PutnamComplex(std::move(out), prov == "preset"
                                           ? PutnamComplex::Provenance::preset
                                           : PutnamComplex::Provenance::computed);
}

Json invariants_to_json(const GroupInvariants& g) {
  Json out;
  out["rank"] = g.free_rank;
  Json torsion = Json::array();
  for (const Integer& t : g.torsion) torsion.push_back(t.get_str());
  out["torsion"] = std::move(torsion);
  out["pretty"] = g.to_string();
  return out;
}

Json limit_to_json(const LimitInvariants& l) {
  Json out;
  out["rank"] = l.rank;
  Json torsion = Json::array();
  for (const Integer& t : l.eventual_torsion) torsion.push_back(t.get_str());
  out["eventual_torsion"] = std::move(torsion);
  out["tag"] = tag_name(l.tag);
  if (l.tag == LimitTag::localized) {
    Json primes = Json::array();
    for (const Integer& p : l.localized_primes) primes.push_back(p.get_str());
    out["localized_primes"] = std::move(primes);
  }
  out["free_action"] = matrix_to_json(l.free_action);
  out["pretty"] = l.to_string();
  return out;
}

Json snf_to_json(const SmithDecomposition& d) {
  Json out;
  Json factors = Json::array();
  for (const Integer& f : d.factors) factors.push_back(f.get_str());
  out["factors"] = std::move(factors);
  out["u"] = matrix_to_json(d.u);
  out["s"] = matrix_to_json(d.s);
  out["v"] = matrix_to_json(d.v);
  return out;
}

Json shift_cok_ker_to_json(const ShiftCokKer& s) {
  Json out;
  out["bf"] = invariants_to_json(s.cok.invariants());
  out["ker"] = invariants_to_json(s.ker.invariants());
  return out;
}

Json stable_homology_to_json(const StableHomology& h) {
  Json out = Json::array();
  for (const auto& inv : h.invariants) out.push_back(limit_to_json(inv));
  return out;
}

Json sheet_to_json(const SpectralSheet& s) {
  Json out;
  out["row_q0"] = Json::array();
  for (const auto& e : s.row) out["row_q0"].push_back(limit_to_json(e));
  out["odd_rows"] = "zero";
  out["even_rows"] = "equal to row_q0";
  out["rank_bound_k0"] = s.rank_bound_k0;
  out["rank_bound_k1"] = s.rank_bound_k1;
  return out;
}

Json ruelle_to_json(const RuelleReport& r) {
  Json out;
  auto invs = [](const std::vector<GroupInvariants>& v) {
    Json a = Json::array();
    for (const auto& g : v) a.push_back(invariants_to_json(g));
    return a;
  };
  out["bf"] = invs(r.bf);
  out["ker"] = invs(r.ker);
  Json cb = Json::array();
  for (const auto& m : r.c_boundaries) cb.push_back(matrix_to_json(m));
  out["c_boundaries"] = std::move(cb);
  Json cpb = Json::array();
  for (const auto& m : r.cprime_boundaries) cpb.push_back(matrix_to_json(m));
  out["cprime_boundaries"] = std::move(cpb);
  out["c_homology"] = invs(r.c_homology);
  out["cprime_homology"] = invs(r.cprime_homology);
  Json segs = Json::array();
  for (const auto& s : r.segments) {
    Json js;
    js["p"] = s.p;
    js["H_{p-1}(C')"] = invariants_to_json(s.incoming);
    js["H_p(C)"] = invariants_to_json(s.h_c);
    js["H_{p-2}(C')"] = invariants_to_json(s.outgoing);
    js["determined"] = s.determined;
    if (s.determined)
      js["E2_p0"] = invariants_to_json(s.value);
    else
      js["E2_p0"] = "extension problem";
    segs.push_back(std::move(js));
  }
  out["segments"] = std::move(segs);
  out["collapse_certain"] = r.collapse_certain;
  out["k_extensions"] = r.k_extensions;
  return out;
}

Json kunneth_to_json(const KunnethCheck& k) {
  Json out;
  Json pred = Json::array(), direct = Json::array(), per = Json::array();
  for (const auto& l : k.predicted) pred.push_back(limit_to_json(l));
  for (const auto& l : k.direct) direct.push_back(limit_to_json(l));
  for (bool b : k.degree_pass) per.push_back(b ? "PASS" : "FAIL");
  out["predicted"] = std::move(pred);
  out["direct"] = std::move(direct);
  out["per_degree"] = std::move(per);
  out["pass"] = k.pass;
  return out;
}

Json odometer_to_json(const std::vector<LimitInvariants>& h) {
  Json out = Json::array();
  for (const auto& l : h) out.push_back(limit_to_json(l));
  return out;
}

Json tower_to_json(const OdometerTower& t) {
  Json out;
  out["n"] = t.n;
  Json levels = Json::array();
  for (const auto& level : t.levels) {
    Json jl;
    Json orders = Json::array();
    for (const Integer& m : level.coset_orders) orders.push_back(m.get_str());
    jl["coset_orders"] = std::move(orders);
    Json hom = Json::array();
    for (const auto& h : level.homology) hom.push_back(invariants_to_json(h));
    jl["homology"] = std::move(hom);
    levels.push_back(std::move(jl));
  }
  out["levels"] = std::move(levels);
  Json expected = Json::array();
  for (const auto& m : t.expected) expected.push_back(matrix_to_json(m));
  out["expected_connecting"] = std::move(expected);
  Json steps = Json::array();
  for (std::size_t j = 0; j < t.connecting.size(); ++j) {
    Json js;
    Json maps = Json::array();
    for (const auto& m : t.connecting[j]) maps.push_back(matrix_to_json(m));
    js["maps"] = std::move(maps);
    js["matches_expected"] = t.matches_expected[j];
    js["equivalent_expected"] = t.equivalent_expected[j];
    steps.push_back(std::move(js));
  }
  out["steps"] = std::move(steps);
  out["all_equivalent"] = t.all_equivalent;
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
}

}  // namespace smalehom
