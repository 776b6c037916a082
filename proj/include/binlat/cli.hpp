#pragma once

#include <chrono>
#include <cstddef>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binlat/cb3.hpp"
#include "binlat/decomp.hpp"
#include "binlat/degree.hpp"
#include "binlat/error.hpp"
#include "binlat/graphs.hpp"
#include "binlat/ideal.hpp"
#include "binlat/io.hpp"
#include "binlat/lattice.hpp"
#include "binlat/matclass.hpp"
#include "binlat/volume.hpp"

namespace binlat::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "binlat-report/1";

// Integers are decimal strings so consumers never overflow.
inline Json to_json(const Integer& x) { return x.get_str(); }
inline Json to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}
inline Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}
inline Json to_json(const BinomialIdeal& I) {
  Json a = Json::array();
  for (const auto& g : I.reduced_basis()) a.push_back(g.to_string());
  return a;
}
inline Json to_json(const MatrixClassReport& r) {
  Json j;
  j["pb"] = r.pb;
  j["ppb"] = r.ppb;
  j["cb"] = r.cb;
  j["pcb"] = r.pcb;
  j["gcb"] = r.gcb;
  j["gpcb"] = r.gpcb;
  j["b"] = r.b ? to_json(*r.b) : Json(nullptr);
  j["c"] = r.c ? to_json(*r.c) : Json(nullptr);
  return j;
}
namespace detail {

inline bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

inline bool flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!scalar(x)) return false;
  return true;
}

inline std::string flat_text(const Json& j) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : j) {
    s += (first ? "" : ", ") + scalar_text(x);
    first = false;
  }
  return s + "]";
}

inline void render(std::ostream& os, const Json& obj, int indent);

inline void render_value(std::ostream& os, const std::string& key, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (scalar(v)) {
    os << pad << key << ": " << scalar_text(v) << "\n";
  } else if (flat_array(v)) {
    os << pad << key << ": " << flat_text(v) << "\n";
  } else if (v.is_object()) {
    os << pad << key << ":\n";
    render(os, v, indent + 2);
  } else {
    os << pad << key << ":\n";
    for (const auto& x : v) {
      if (flat_array(x)) {
        os << pad << "  " << flat_text(x) << "\n";
      } else if (x.is_object()) {
        os << pad << "  -\n";
        render(os, x, indent + 4);
      } else {
        os << pad << "  " << scalar_text(x) << "\n";
      }
    }
  }
}

inline void render(std::ostream& os, const Json& obj, int indent) {
  for (const auto& [k, v] : obj.items()) render_value(os, k, v, indent);
}

struct Options {
  std::string file;
  std::string kind;
  std::string grading;
  bool digraph = false;
  bool full_report = false;
  unsigned long max_iter = kDefaultCriticalCap;
};

struct Input {
  std::string text;
  Json echo;
};

inline Input load(const Options& o, std::istream& in) {
  Input r;
  r.text = io::read_source(o.file, in);
  r.echo["file"] = o.file;
  return r;
}

inline std::optional<IntVector> grading_flag(const Options& o) {
  if (o.grading.empty()) return std::nullopt;
  return io::parse_grading(o.grading);
}

inline bool supports_at_least_4(const IntMatrix& L) {
  for (std::size_t j = 0; j < L.cols(); ++j) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < L.rows(); ++i) n += L(i, j) != 0;
    if (n < 4) return false;
  }
  return true;
}

inline Json cmd_snf(const IntMatrix& M) {
  SnfDecomposition d = smith_normal_form(M);
  IntMatrix D(M.rows(), M.cols());
  for (std::size_t i = 0; i < d.gamma.size(); ++i) D(i, i) = d.gamma[i];
  ensure(d.P * M * d.Q == D, "snf: P L Q is not diag(gamma, 0)");
  Json r;
  r["rank"] = d.rank;
  r["gamma"] = to_json(d.gamma);
  r["invariant_factors"] = to_json(FiniteAbelianGroup::from_gamma(d.gamma).invariant_factors());
  r["P"] = to_json(d.P);
  r["Q"] = to_json(d.Q);
  return r;
}

inline Json cmd_torsion(const Lattice& lat) {
  FiniteAbelianGroup g = critical_group(lat);
  Json r;
  r["ambient_dim"] = lat.ambient_dim();
  r["rank"] = lat.rank();
  r["invariant_factors"] = to_json(g.invariant_factors());
  r["torsion_order"] = to_json(g.order());
  r["torsion_free"] = g.is_trivial();
  return r;
}

inline Json cmd_degree(const Options& o, const std::string& text) {
  auto d = grading_flag(o);
  Json r;
  if (o.kind == "lattice") {
    Lattice lat = io::parse_lattice(text);
    LatticeDegree ld = degree_lattice_data(lat);
    r["degree"] = to_json(ld.degree);
    r["rank"] = ld.rank;
    r["torsion_order"] = to_json(ld.torsion_order);
    r["normalized_volume"] = to_json(ld.normalized_volume);
    r["defining_torsion"] = to_json(ld.defining_torsion);
    r["defining_matrix"] = to_json(ld.defining_matrix);
    if (d) {
      r["grading"] = to_json(*d);
      r["graded_degree"] = to_json(degree_graded_dim1(lat, *d));
      ensure(r["graded_degree"] == r["degree"], "degree lattice: graded formula disagrees");
    }
  } else if (o.kind == "toric") {
    require(!d, "degree toric: --grading does not apply");
    IntMatrix V = io::parse_matrix(text);
    ToricDegree t = toric_degree_data(V);
    r["degree"] = to_json(t.degree);
    r["normalized_volume"] = to_json(t.normalized_volume);
    r["torsion_order"] = to_json(t.torsion_order);
    r["torsion_free"] = t.torsion_order == 1;
  } else if (o.kind == "ideal") {
    BinomialIdeal I = io::parse_ideal(text);
    if (d) {
      require(d->size() == I.ambient_dim(), "degree ideal: grading length mismatch");
      for (const auto& g : I.generators()) require(is_homogeneous(g, *d), "degree ideal: generator is not homogeneous");
      r["grading"] = to_json(*d);
    }
    AffineDegree a = affine_degree(I);
    r["dimension"] = a.dimension;
    r["degree"] = to_json(a.degree);
  } else {
    IntMatrix L = io::parse_matrix(text);
    MatrixIdealDegree m = d ? degree_matrix_ideal_graded(L, *d) : degree_matrix_ideal_data(L);
    r["degree"] = to_json(m.degree);
    r["grading"] = to_json(m.grading);
    r["minor_gcd"] = to_json(m.minor_gcd);
  }
  return r;
}

inline Json cmd_saturate(const BinomialIdeal& I) {
  BinomialIdeal S = saturate_variables(I);
  Json r;
  r["saturation"] = to_json(S);
  r["is_lattice_ideal"] = S == I;
  return r;
}

inline Json cmd_hull(const IntMatrix& L, const Options& o) {
  BinomialIdeal I = matrix_ideal(L);
  ColonSaturation cs = colon_saturation(I, IntVector(L.rows(), Integer(1)));
  ensure(cs.saturation == saturate_variables(I), "hull: iterated colon differs from the saturation");
  Json r;
  r["ideal"] = to_json(I);
  r["hull"] = to_json(cs.saturation);
  r["stabilizing_power"] = cs.stabilizing_power;
  r["lattice_ideal"] = cs.saturation == I;
  if (L.rows() == L.cols()) {
    MatrixClassReport c = classify(L);
    if (c.gcb && L.rows() == 3) r["cb_matrix"] = to_json(find_hull_gcb3(L, o.max_iter).cb_matrix);
    if (c.gpcb) r["gpcb_colon_matches"] = gpcb_hull_data(L).colon_matches;
  }
  return r;
}

inline Json cmd_classify(const IntMatrix& L) {
  TransposeReport t = check_transpose_theorems(L);
  Json r;
  r["size"] = L.rows();
  r["rank"] = t.rank;
  r["classes"] = to_json(t.matrix);
  r["transpose_classes"] = to_json(t.transpose);
  r["strongly_connected"] = t.strongly_connected;
  Json checks = Json::array();
  for (const auto& c : t.checks) {
    Json j;
    j["name"] = c.name;
    j["applies"] = c.applies;
    j["holds"] = c.holds;
    checks.push_back(j);
  }
  r["transpose_checks"] = checks;
  if (t.matrix.gcb) {
    GcbVanishingReport v = gcb_vanishing_equivalence(L);
    Json j;
    j["strongly_connected"] = v.strongly_connected;
    j["transpose_vanishing"] = v.vanishing;
    j["adjoint_positive"] = v.adjoint_positive;
    j["equivalent"] = v.equivalent();
    r["gcb_vanishing"] = j;
  }
  if (t.matrix.gpcb) {
    GpcbSyzygyData sz = gpcb_syzygy(L);
    Json shifts = Json::array();
    for (const auto& v : sz.shifts) shifts.push_back(to_json(v));
    r["syzygy_shifts"] = shifts;
  }
  if (t.matrix.gpcb && L.rows() == 2) {
    TwoByTwoReport w = analyze_2x2(L);
    Json j;
    j["c1"] = to_json(w.c1);
    j["c2"] = to_json(w.c2);
    j["principal"] = w.principal;
    j["pcb_ideal"] = w.pcb;
    j["lattice_ideal"] = w.lattice;
    j["hull"] = to_json(w.hull);
    r["two_by_two"] = j;
  }
  if (t.matrix.pb && supports_at_least_4(L)) r["pb_not_lattice_ideal"] = pb_not_lattice_check(L);
  return r;
}

inline Json orbit_json(const GaloisOrbitReport& g) {
  Json r;
  r["gamma"] = to_json(g.gamma);
  r["invariant_factors"] = to_json(g.group.invariant_factors());
  r["d"] = to_json(g.d);
  r["component_count"] = to_json(g.group.order());
  r["component_degree"] = to_json(g.component_degree);
  Json orbits = Json::array();
  for (const auto& o : g.orbits) {
    Json j;
    j["representative"] = to_json(o.representative);
    j["size"] = o.size;
    j["degree"] = to_json(o.degree);
    orbits.push_back(j);
  }
  r["rational_orbits"] = orbits;
  r["total_degree"] = to_json(g.total_degree);
  return r;
}

inline Json cmd_laplacian(const io::GraphFile& f, const Options& o) {
  Json r;
  if (o.digraph) {
    WeightedDigraph G = io::to_digraph(f);
    IntMatrix L = laplacian_digraph(G);
    r["laplacian"] = to_json(L);
    MatrixClassReport c = classify(L);
    r["strongly_connected"] = strongly_connected(G);
    r["classes"] = to_json(c);
    if (c.gcb) {
      GcbVanishingReport v = gcb_vanishing_equivalence(L);
      r["transpose_vanishing"] = v.vanishing;
      r["adjoint_positive"] = v.adjoint_positive;
    }
    if (o.full_report) r["classification"] = cmd_classify(L);
    return r;
  }
  WeightedGraph G = io::to_graph(f);
  IntMatrix L = laplacian(G);
  r["laplacian"] = to_json(L);
  if (!o.full_report) {
    FiniteAbelianGroup g = sandpile_group(G);
    r["sandpile_invariant_factors"] = to_json(g.invariant_factors());
    r["sandpile_order"] = to_json(g.order());
    r["spanning_trees"] = to_json(spanning_tree_count(G));
    return r;
  }
  LaplacianReport rep = laplacian_report(G);
  r["sandpile_invariant_factors"] = to_json(rep.sandpile.invariant_factors());
  r["sandpile_order"] = to_json(rep.sandpile.order());
  r["spanning_trees"] = to_json(rep.spanning_trees);
  r["vanishing"] = rep.vanishing;
  r["degree"] = to_json(rep.laplacian_degree);
  r["toppling_degree"] = to_json(rep.toppling_degree);
  r["toppling_ideal"] = to_json(rep.toppling);
  r["hull"] = to_json(rep.hull);
  r["stabilizing_power"] = rep.stabilizing_power;
  r["hull_is_toppling"] = rep.hull_is_toppling;
  r["all_degrees_at_least_3"] = rep.all_degrees_at_least_3;
  r["all_supports_at_least_4"] = rep.all_supports_at_least_4;
  r["hypotheses_agree"] = rep.hypotheses_agree();
  r["lattice_ideal"] = rep.lattice_ideal ? Json(*rep.lattice_ideal) : Json(nullptr);
  r["minimal_generators"] = rep.minimal_generators ? Json(*rep.minimal_generators) : Json(nullptr);
  if (f.vertices >= 2) r["decomposition"] = orbit_json(rational_orbit_report(Lattice::from_columns(L)));
  return r;
}

inline Json cmd_cb3(const Options& o, const std::string& text) {
  Json r;
  if (o.kind == "structure") {
    Lattice lat = io::parse_lattice(text);
    CriticalBinomialSet cs = cb_structure(lat, o.max_iter);
    r["case"] = cs.which == CriticalCase::doubly_pure ? "doubly-pure" : "full";
    std::vector<Integer> perm(cs.perm.begin(), cs.perm.end());
    for (auto& p : perm) p += 1;
    r["permutation"] = to_json(perm);
    Json fs = Json::array();
    for (const auto& f : cs.f) fs.push_back(f.to_string());
    r["critical_binomials"] = fs;
    r["matrix"] = to_json(cs.matrix);
    r["grading"] = to_json(cs.d);
  } else if (o.kind == "findhull") {
    FindHullResult h = find_hull_gcb3(io::parse_matrix(text), o.max_iter);
    r["cb_matrix"] = to_json(h.cb_matrix);
    r["hull"] = to_json(h.hull);
  } else {
    CbPropertiesReport p = cb_properties_check(io::parse_matrix(text));
    r["first_syzygy"] = p.first_syzygy;
    r["second_syzygy"] = p.second_syzygy;
    r["lattice_ideal"] = p.lattice_ideal;
    r["minimal_generators"] = p.minimal_generators;
    r["complete_intersection"] = p.complete_intersection();
    r["almost_complete_intersection"] = p.almost_complete_intersection();
  }
  return r;
}

inline Json cmd_volume(const std::vector<IntVector>& pts) {
  LatticePolytope P(pts);
  Json r;
  r["points"] = pts.size();
  r["dimension"] = P.dimension();
  r["normalized_volume"] = to_json(normalized_volume(P));
  return r;
}

}  // namespace detail

// Exit codes: 0 ok, 1 precondition failure, 2 usage/I-O/parse error, 3 internal invariant failure.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for lattice and binomial ideals", "binlat"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, no_timing = false;
  detail::Options o;
  app.add_flag("--json", json, "Write the report as JSON");
  app.add_flag("--no-timing", no_timing, "Omit the timing field");
  app.add_option("--max-iter", o.max_iter, "Iteration cap for critical-binomial searches")->check(CLI::PositiveNumber);

  auto file_cmd = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto add_file = [&](CLI::App* c) { c->add_option("file", o.file, "Input file, '-' for stdin")->required(); };

  CLI::App* snf = file_cmd("snf", "Smith normal form of a matrix");
  add_file(snf);
  CLI::App* tor = file_cmd("torsion", "Torsion of Z^s / L for a lattice");
  add_file(tor);
  CLI::App* deg = file_cmd("degree", "Degree of a lattice, toric, binomial or matrix ideal");
  deg->add_option("kind", o.kind, "lattice|toric|ideal|matrix")->required()->check(
      CLI::IsMember({"lattice", "toric", "ideal", "matrix"}));
  add_file(deg);
  deg->add_option("--grading", o.grading, "Positive grading d1,..,ds");
  CLI::App* sat = file_cmd("saturate", "Saturation of a binomial ideal by all variables");
  add_file(sat);
  CLI::App* hull = file_cmd("hull", "Hull of the matrix ideal I(L)");
  add_file(hull);
  CLI::App* cls = file_cmd("classify", "Matrix classes and transpose theorems");
  add_file(cls);
  CLI::App* lap = file_cmd("laplacian", "Laplacian ideals of a weighted graph");
  add_file(lap);
  lap->add_flag("--digraph", o.digraph, "Treat the file as a weighted digraph");
  lap->add_flag("--full-report", o.full_report, "Ideal-theoretic report");
  CLI::App* dec = file_cmd("decompose", "Primary decomposition structure of a graded rank s-1 lattice");
  add_file(dec);
  CLI::App* cb3 = file_cmd("cb3", "Three-variable CB structure");
  cb3->add_option("mode", o.kind, "structure|findhull|check")->required()->check(
      CLI::IsMember({"structure", "findhull", "check"}));
  add_file(cb3);
  CLI::App* vol = file_cmd("volume", "Normalized volume of the convex hull of points");
  add_file(vol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string command = sub->get_name();
  if (!o.kind.empty()) command += " " + o.kind;

  try {
    const auto start = std::chrono::steady_clock::now();
    detail::Input input = detail::load(o, in);
    const std::string& text = input.text;
    Json results;
    if (sub == snf) {
      results = detail::cmd_snf(io::parse_matrix(text));
    } else if (sub == tor) {
      results = detail::cmd_torsion(io::parse_lattice(text));
    } else if (sub == deg) {
      results = detail::cmd_degree(o, text);
    } else if (sub == sat) {
      results = detail::cmd_saturate(io::parse_ideal(text));
    } else if (sub == hull) {
      results = detail::cmd_hull(io::parse_matrix(text), o);
    } else if (sub == cls) {
      IntMatrix L = io::parse_matrix(text);
      require_square(L, "classify");
      results = detail::cmd_classify(L);
    } else if (sub == lap) {
      results = detail::cmd_laplacian(io::parse_graph(text), o);
    } else if (sub == dec) {
      results = detail::orbit_json(rational_orbit_report(io::parse_lattice(text)));
    } else if (sub == cb3) {
      results = detail::cmd_cb3(o, text);
    } else {
      results = detail::cmd_volume(io::parse_points(text));
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    Json report;
    report["schema"] = kSchema;
    report["command"] = command;
    report["input"] = input.echo;
    report["results"] = results;
    if (!no_timing) report["timing"] = Json{{"elapsed_ms", ms}};
    if (json) {
      out << report.dump(2) << "\n";
    } else {
      out << "command: " << command << "\n";
      out << "input: " << o.file << "\n";
      detail::render(out, results, 0);
      if (!no_timing) out << "elapsed_ms: " << std::fixed << std::setprecision(3) << ms << "\n";
    }
    return 0;
  } catch (const precondition_error& e) {
    err << "binlat: precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    err << "binlat: input error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    err << "binlat: internal check failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "binlat: error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace binlat::cli
