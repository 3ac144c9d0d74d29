// Command-line front end: exact homological invariants of shifts of finite
// type, solenoids (via presets), and Z^N odometers.
//
// Exit codes: 0 success, 1 validation/input error, 2 internal invariant
// violation (a structural identity such as dd = 0 failed on the given data).
#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "smalehom/examples.hpp"
#include "smalehom/json_io.hpp"

using namespace smalehom;

namespace {

std::string format_flag = "table";

void emit(const std::string& key, const Json& payload, const std::string& table,
          const Json& extras = Json::object()) {
  if (format_flag == "json") {
    Json out;
    out["schema"] = "v1";
    out[key] = payload;
    for (const auto& [k, v] : extras.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << table;
  }
}

std::string matrix_inline(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

void warn_if_reducible(const Graph& g, const std::string& role) {
  if (!is_strongly_connected(g))
    std::cerr << "warning: " << role
              << " is not strongly connected; the presented shift may be reducible\n";
}

struct ComplexInput {
  std::string hom_path;
  std::string preset;
  std::string complex_path;
  Index m = 2;
  Index n_max = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--hom", hom_path, "graph homomorphism JSON file");
    cmd->add_option("--preset", preset, "preset name (solenoid)");
    cmd->add_option("--m", m, "preset parameter m");
    cmd->add_option("--complex", complex_path, "normalized complex JSON file");
    cmd->add_option("--nmax", n_max, "truncate the complex at this level");
  }

  PutnamComplex resolve() const {
    int sources = (!hom_path.empty()) + (!preset.empty()) + (!complex_path.empty());
    if (sources != 1)
      throw ValidationError("give exactly one of --hom, --preset, --complex");
    if (!hom_path.empty()) {
      GraphHom pi = hom_from_json(load_json_file(hom_path));
      warn_if_reducible(pi.target(), "target graph");
      return putnam_complex(pi, n_max);
    }
    if (!preset.empty()) {
      if (preset != "solenoid") throw ValidationError("unknown preset: " + preset);
      return truncate(solenoid_preset(m));
    }
    return truncate(complex_from_json(load_json_file(complex_path)));
  }

  PutnamComplex truncate(PutnamComplex p) const {
    if (n_max < 0 || p.n_degrees() <= n_max + 1) return p;
    std::vector<PutnamComplex::Degree> degrees(p.degrees().begin(),
                                               p.degrees().begin() + n_max + 1);
    return PutnamComplex(std::move(degrees), p.provenance());
  }
};

std::string homology_table(const StableHomology& h) {
  std::ostringstream os;
  for (Index p = 0; p < h.n_degrees(); ++p)
    os << "H^s_" << p << " = " << h.invariants[static_cast<std::size_t>(p)].to_string()
       << "\n";
  os << "H^s_p = 0 for p >= " << h.n_degrees() << "\n";
  return os.str();
}

int run_main(int argc, char** argv) {
  CLI::App app{"exact homological invariants of hyperbolic symbolic dynamics"};
  app.require_subcommand(1);
  app.add_option("--format", format_flag, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));

  // snf
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string snf_matrix;
  snf_cmd->add_option("--matrix", snf_matrix, "matrix JSON file")->required();
  snf_cmd->callback([&] {
    SmithDecomposition d = smith_normal_form(matrix_from_json(load_json_file(snf_matrix)));
    std::ostringstream os;
    os << "factors:";
    for (const Integer& f : d.factors) os << " " << f.get_str();
    os << "\n";
    emit("snf", snf_to_json(d), os.str());
  });

  // bf
  auto* bf_cmd = app.add_subcommand("bf", "Bowen-Franks group and ker(1-gamma) of a graph");
  std::string bf_graph;
  bf_cmd->add_option("--graph", bf_graph, "graph JSON file")->required();
  bf_cmd->callback([&] {
    Graph g = graph_from_json(load_json_file(bf_graph));
    warn_if_reducible(g, "graph");
    ShiftCokKer s = bowen_franks(g);
    std::ostringstream os;
    os << "BF = " << s.cok.invariants().to_string()
       << "\nker(1-gamma) = " << s.ker.invariants().to_string() << "\n";
    emit("bf", shift_cok_ker_to_json(s), os.str());
  });

  // dimgroup
  auto* dim_cmd = app.add_subcommand("dimgroup", "dimension group of a graph");
  std::string dim_graph;
  dim_cmd->add_option("--graph", dim_graph, "graph JSON file")->required();
  dim_cmd->callback([&] {
    Graph g = graph_from_json(load_json_file(dim_graph));
    warn_if_reducible(g, "graph");
    LimitInvariants l = limit_invariants(dimension_group(g));
    emit("dimension_group", limit_to_json(l), "D^s = " + l.to_string() + "\n");
  });

  // putnam
  auto* putnam_cmd = app.add_subcommand("putnam", "stable homology of a normalized complex");
  ComplexInput putnam_in;
  putnam_in.attach(putnam_cmd);
  putnam_cmd->callback([&] {
    StableHomology h = stable_homology(putnam_in.resolve());
    // The complex is bounded, so homology above its top degree is exactly
    // zero, not merely uncomputed.
    Json extras;
    extras["zero_above_degree"] = h.n_degrees();
    emit("stable_homology", stable_homology_to_json(h), homology_table(h), extras);
  });

  // ruelle
  auto* ruelle_cmd = app.add_subcommand("ruelle", "Bowen-Franks homology report for the Ruelle algebra");
  ComplexInput ruelle_in;
  ruelle_in.attach(ruelle_cmd);
  ruelle_cmd->callback([&] {
    RuelleReport r = ruelle_report(ruelle_in.resolve());
    std::ostringstream os;
    for (std::size_t n = 0; n < r.bf.size(); ++n)
      os << "C_" << n << " = BF = " << r.bf[n].to_string()
         << "   C'_" << n << " = ker = " << r.ker[n].to_string() << "\n";
    for (std::size_t p = 0; p < r.segments.size(); ++p) {
      const auto& s = r.segments[p];
      os << "E2_{" << s.p << ",0}: ";
      if (s.determined)
        os << s.value.to_string() << "\n";
      else
        os << "extension problem between " << s.incoming.to_string() << " and "
           << s.h_c.to_string() << "\n";
    }
    for (const auto& e : r.k_extensions) os << e << "\n";
    emit("ruelle", ruelle_to_json(r), os.str());
  });

  // sheet
  auto* sheet_cmd = app.add_subcommand("sheet", "spectral sheet E^2 with K-theory rank bounds");
  ComplexInput sheet_in;
  sheet_in.attach(sheet_cmd);
  sheet_cmd->callback([&] {
    SpectralSheet s = spectral_sheet(stable_homology(sheet_in.resolve()).invariants);
    std::ostringstream os;
    os << "E^2_{p,even} row:";
    for (const auto& e : s.row) os << " " << e.to_string() << " |";
    os << "\nodd rows vanish\nrank K_0 <= " << s.rank_bound_k0
       << "\nrank K_1 <= " << s.rank_bound_k1 << "\n";
    emit("spectral_sheet", sheet_to_json(s), os.str());
  });

  // kunneth
  auto* kun_cmd = app.add_subcommand("kunneth", "Kunneth cross-check of two recoding data");
  std::string hom1, hom2;
  Index kun_nmax = -1;
  kun_cmd->add_option("--hom1", hom1, "first graph homomorphism JSON")->required();
  kun_cmd->add_option("--hom2", hom2, "second graph homomorphism JSON")->required();
  kun_cmd->add_option("--nmax", kun_nmax, "truncate the complexes at this level");
  kun_cmd->callback([&] {
    GraphHom pi1 = hom_from_json(load_json_file(hom1));
    GraphHom pi2 = hom_from_json(load_json_file(hom2));
    warn_if_reducible(pi1.target(), "first target graph");
    warn_if_reducible(pi2.target(), "second target graph");
    KunnethCheck k = kunneth_crosscheck(pi1, pi2, kun_nmax);
    std::ostringstream os;
    for (std::size_t p = 0; p < k.degree_pass.size(); ++p)
      os << "degree " << p << ": " << (k.degree_pass[p] ? "PASS" : "FAIL") << "\n";
    os << (k.pass ? "PASS" : "FAIL") << "\n";
    emit("kunneth", kunneth_to_json(k), os.str());
  });

  // odometer
  auto* odo_cmd = app.add_subcommand("odometer", "Z^N odometer groupoid homology");
  std::string odo_matrix;
  odo_cmd->add_option("--matrix", odo_matrix, "matrix JSON file")->required();
  odo_cmd->callback([&] {
    auto h = odometer_homology(matrix_from_json(load_json_file(odo_matrix)));
    std::ostringstream os;
    for (std::size_t p = 0; p < h.size(); ++p)
      os << "H_" << p << " = " << h[p].to_string() << "\n";
    emit("odometer_homology", odometer_to_json(h), os.str());
  });

  // tower
  auto* tower_cmd = app.add_subcommand("tower", "odometer level tower with connecting maps");
  std::string tower_matrix;
  Index tower_levels = 2;
  tower_cmd->add_option("--matrix", tower_matrix, "matrix JSON file")->required();
  tower_cmd->add_option("--levels", tower_levels, "number of levels (including level 0)");
  tower_cmd->callback([&] {
    OdometerTower t = odometer_level_tower(matrix_from_json(load_json_file(tower_matrix)),
                                           tower_levels);
    std::ostringstream os;
    for (std::size_t j = 0; j < t.levels.size(); ++j) {
      os << "level " << j << ":";
      for (std::size_t k = 0; k < t.levels[j].homology.size(); ++k)
        os << " H_" << k << " = " << t.levels[j].homology[k].to_string() << " |";
      os << "\n";
    }
    for (std::size_t j = 0; j < t.connecting.size(); ++j) {
      os << "step " << j << " -> " << j + 1 << ":";
      for (std::size_t k = 0; k < t.connecting[j].size(); ++k)
        os << " H_" << k << ": " << matrix_inline(t.connecting[j][k])
           << (t.matches_expected[j][k] ? " (= ext^" + std::to_string(t.n - static_cast<Index>(k)) + " B^t)" : "");
      os << "\n";
    }
    os << (t.all_equivalent ? "connecting maps match ext^k(B^t)\n"
                            : "connecting maps DIFFER from ext^k(B^t)\n");
    emit("tower", tower_to_json(t), os.str());
  });

  // presets
  auto* presets_cmd = app.add_subcommand("presets", "list available preset complexes");
  presets_cmd->callback([&] {
    Json j = Json::array();
    Json solenoid;
    solenoid["name"] = "solenoid";
    solenoid["parameters"] = "--m M (M >= 2)";
    solenoid["description"] = "normalized complex of the M-solenoid";
    j.push_back(std::move(solenoid));
    emit("presets", j, "solenoid --m M (M >= 2): normalized complex of the M-solenoid\n");
  });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "write example inputs");
  std::string gen_name, gen_out, gen_entries;
  Index gen_m = 2, gen_n = 3;
  gen_cmd->add_option("--name", gen_name,
                      "full_shift | cycle | complete | fold | solenoid_preset | odometer")
      ->required();
  gen_cmd->add_option("--m", gen_m, "symbol/vertex count");
  gen_cmd->add_option("--n", gen_n, "cycle length");
  gen_cmd->add_option("--entries", gen_entries, "odometer matrix entries, e.g. [[2,0],[0,2]]");
  gen_cmd->add_option("--out", gen_out, "output file")->required();
  gen_cmd->callback([&] {
    Json j;
    if (gen_name == "full_shift") {
      j = graph_to_json(full_shift_graph(gen_m));
    } else if (gen_name == "cycle") {
      j = graph_to_json(cycle_graph(gen_n));
    } else if (gen_name == "complete") {
      j = graph_to_json(complete_graph(gen_m));
    } else if (gen_name == "fold") {
      j = hom_to_json(fold_hom(gen_m));
    } else if (gen_name == "solenoid_preset") {
      j = complex_to_json(solenoid_preset(gen_m));
    } else if (gen_name == "odometer") {
      if (gen_entries.empty())
        throw ValidationError("gen odometer needs --entries");
      Json rowsj;
      try {
        rowsj = Json::parse(gen_entries);
      } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("--entries: ") + e.what());
      }
      if (!rowsj.is_array() || rowsj.empty())
        throw ValidationError("--entries: expected a nonempty array of rows");
      IntMatrix b(static_cast<Index>(rowsj.size()),
                  static_cast<Index>(rowsj.front().size()));
      for (Index i = 0; i < b.rows(); ++i) {
        const Json& row = rowsj[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != b.cols())
          throw ValidationError("--entries: ragged rows");
        for (Index c = 0; c < b.cols(); ++c) {
          const Json& cell = row[static_cast<std::size_t>(c)];
          b(i, c) = cell.is_string() ? Integer(cell.get<std::string>())
                                     : Integer(cell.get<long>());
        }
      }
      if (b.rows() != b.cols() || abs(determinant(b)) < 2)
        throw ValidationError("odometer matrix must be square with |det| >= 2");
      j = matrix_to_json(b);
    } else {
      throw ValidationError("unknown example name: " + gen_name);
    }
    j["schema"] = "v1";
    write_json_file(gen_out, j);
    std::cout << "wrote " << gen_out << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const CommutationError& e) {
    std::cerr << "structural invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const BoundarySquareError& e) {
    std::cerr << "structural invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
