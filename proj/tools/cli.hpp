#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcove/alcove.hpp"

namespace alcove::cli {

using nlohmann::json;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"hl",   "schur",         "tensor", "branch", "hecke-mult",
                                          "crystal-graph", "walks", "dims"};
  return c;
}

struct JobSpec {
  std::string command;
  char family = 'A';
  int rank = 0;
  std::vector<Weight> weights;
  std::optional<Partition> shape;
  std::optional<std::vector<int>> levi;  // 0-based
  std::optional<std::vector<int>> word;  // 0-based
  std::string format = "json";
  bool verify = false;
  std::string out;
  int threads = 1;
};

// Thrown for --help; carries the text to print.
struct help_request {
  std::string text;
};

inline std::vector<int> parse_list(const std::string& s, const std::string& what) {
  std::vector<int> v = parse_ints(s, ',');
  if (v.empty() && !s.empty()) throw usage_error(what + ": empty list");
  return v;
}

inline JobSpec parse_args(int argc, const char* const* argv) {
  CLI::App app{"Hall-Littlewood polynomials, characters and crystals by alcove walks", "alcove"};
  JobSpec j;
  std::string type;
  std::vector<std::string> weights;
  std::string shape, levi, word;
  app.add_option("command", j.command, "one of: hl schur tensor branch hecke-mult crystal-graph walks dims")
      ->required();
  app.add_option("--type", type, "root system family A,B,C,D,G")->required();
  app.add_option("--rank", j.rank, "rank")->required();
  app.add_option("--weight", weights, "weight in fundamental-weight coordinates c1,..,cn (repeat for tensor)");
  app.add_option("--shape", shape, "partition p1,..,pk (type A)");
  app.add_option("--levi", levi, "Levi simple roots j1,..,jm (1-based)");
  app.add_option("--word", word, "finite Weyl group word i1,..,ik (1-based), for hecke-mult");
  app.add_option("--format", j.format, "json, dot or tsv");
  app.add_flag("--verify", j.verify, "compare against an independent route");
  app.add_option("--out", j.out, "output file (default stdout)");
  app.add_option("--threads", j.threads, "worker threads");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw help_request{app.help()};
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  if (std::find(commands().begin(), commands().end(), j.command) == commands().end())
    throw usage_error("unknown command '" + j.command + "'");
  if (type.size() != 1 || std::string("ABCDG").find(type[0]) == std::string::npos)
    throw usage_error("--type must be one of A,B,C,D,G");
  j.family = type[0];
  RootDatum probe(j.family, j.rank);  // validates the rank
  if (j.format != "json" && j.format != "dot" && j.format != "tsv")
    throw usage_error("--format must be json, dot or tsv");
  if (j.threads < 1) throw usage_error("--threads must be >= 1");

  for (auto& w : weights) {
    auto v = parse_list(w, "--weight");
    if (static_cast<int>(v.size()) != j.rank)
      throw usage_error("--weight " + w + " has " + std::to_string(v.size()) + " coordinates, rank is " +
                        std::to_string(j.rank));
    j.weights.push_back(Weight::from(v));
  }
  if (!shape.empty()) {
    if (j.family != 'A') throw usage_error("--shape needs --type A");
    Partition p = trim(parse_list(shape, "--shape"));
    check_partition(p);
    if (static_cast<int>(p.size()) > j.rank + 1) throw usage_error("--shape has more than rank+1 parts");
    j.shape = p;
    j.weights.push_back(composition_weight(p, j.rank + 1));
  }
  auto indices = [&](const std::string& s, const char* flag) {
    std::vector<int> v;
    for (int x : parse_list(s, flag)) {
      if (x < 1 || x > j.rank) throw usage_error(std::string(flag) + ": index " + std::to_string(x) + " out of range");
      v.push_back(x - 1);
    }
    return v;
  };
  if (app.count("--levi")) {
    auto v = indices(levi, "--levi");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    j.levi = v;
  }
  if (app.count("--word")) j.word = indices(word, "--word");

  auto need = [&](std::size_t n) {
    if (j.weights.size() != n)
      throw usage_error(j.command + " needs exactly " + std::to_string(n) + " weight" + (n == 1 ? "" : "s"));
  };
  if (j.command == "tensor") need(2);
  else need(1);
  if (j.command == "branch" && !j.levi) throw usage_error("branch needs --levi");
  if (j.command == "hecke-mult" && !j.word) throw usage_error("hecke-mult needs --word");
  if (j.command == "crystal-graph" && j.family != 'A') throw usage_error("crystal-graph needs --type A");
  if (j.format == "dot" && j.command != "crystal-graph") throw usage_error("--format dot is only for crystal-graph");
  if (j.command != "hecke-mult")
    for (auto& w : j.weights)
      if (!w.dominant()) throw usage_error("weight " + w.str() + " is not dominant");
  return j;
}

// ---- emitters ------------------------------------------------------------------

inline json poly_json(const LaurentPoly& p) {
  json a = json::array();
  for (auto& [e, c] : p.terms()) a.push_back({e, c});
  return a;
}
inline json weight_json(const Weight& w) { return w.vec(); }
inline json weyl_json(const RootDatum& R, const WeylElt& w) {
  std::vector<int> v = R.word(w);
  for (int& x : v) ++x;
  return v;
}

inline json poly_terms(const GroupAlgElt& f) {
  json a = json::array();
  for (auto& [m, c] : f.terms()) a.push_back({{"weight", weight_json(m)}, {"coeff", poly_json(c)}});
  return a;
}
inline json decomposition_json(const Decomposition& d) {
  json a = json::array();
  for (auto& [m, c] : d) a.push_back({{"weight", weight_json(m)}, {"coeff", poly_json(c)}});
  return a;
}
inline json mult_json(const std::map<Weight, std::int64_t>& d) {
  json a = json::array();
  for (auto& [m, c] : d) a.push_back({{"weight", weight_json(m)}, {"mult", c}});
  return a;
}

inline std::string csv(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}
inline std::string poly_tsv(const LaurentPoly& p) { return poly_json(p).dump(); }

struct Output {
  json doc;
  std::string tsv;
  std::string dot;
};

inline json step_json(const Step& s) {
  static const char* kinds[] = {"cross", "fold", "omega"};
  return {{"label", s.label}, {"kind", kinds[static_cast<int>(s.kind)]}, {"sign", s.sign}};
}

// ---- commands ------------------------------------------------------------------

inline void verify_fail(const std::string& what) { throw invariant_error("verification failed: " + what); }

inline Output cmd_hl(const JobSpec& j) {
  RootDatum R(j.family, j.rank);
  AffineWeyl W(R);
  const Weight& l = j.weights[0];
  Output o;
  o.doc = {{"command", "hl"}, {"type", R.name()}, {"weight", weight_json(l)}};
  GroupAlgElt P = hall_littlewood_walks(W, l);
  if (j.verify && P != macdonald_formula(R, l))
    verify_fail("walk sum over B_q(p_lambda) differs from Macdonald's formula for P_lambda");
  if (j.levi) {
    Decomposition d = hl_restrict_direct(W, l, *j.levi);
    if (j.verify && hl_restrict(W, l, *j.levi) != d)
      verify_fail("restriction rule: walks of B_q(p_lambda) in C_J - rho_J do not give the P^J expansion");
    std::vector<int> lv = *j.levi;
    for (int& x : lv) ++x;
    o.doc["levi"] = lv;
    o.doc["decomposition"] = decomposition_json(d);
    o.tsv = "weight\tcoeff\n";
    for (auto& [m, c] : d) o.tsv += csv(m.vec()) + "\t" + poly_tsv(c) + "\n";
    return o;
  }
  o.doc["polynomial"] = poly_terms(P);
  o.tsv = "weight\tcoeff\n";
  for (auto& [m, c] : P.terms()) o.tsv += csv(m.vec()) + "\t" + poly_tsv(c) + "\n";
  return o;
}

inline Output cmd_schur(const JobSpec& j) {
  RootDatum R(j.family, j.rank);
  const Weight& l = j.weights[0];
  IntGroupAlgElt s = schur(R, l);
  if (j.verify) {
    KostantTable p(R);
    for (auto& [m, c] : s.terms())
      if (weight_mult(R, l, m, p) != c) verify_fail("weight multiplicity from Kostant's formula differs from s_lambda");
  }
  Output o;
  o.doc = {{"command", "schur"}, {"type", R.name()}, {"weight", weight_json(l)}, {"dim", dim_classical(R, l)}};
  o.doc["character"] = mult_json(s.terms());
  o.tsv = "weight\tmult\n";
  for (auto& [m, c] : s.terms()) o.tsv += csv(m.vec()) + "\t" + std::to_string(c) + "\n";
  return o;
}

inline Output cmd_tensor(const JobSpec& j) {
  RootDatum R(j.family, j.rank);
  const Weight &mu = j.weights[0], &nu = j.weights[1];
  auto d = expand_in_schur(R, schur(R, mu) * schur(R, nu));
  if (j.verify) {
    KostantTable p(R);
    for (auto& [l, c] : d)
      if (tensor_mult(R, mu, nu, l, p) != c) verify_fail("tensor product multiplicity formula differs from s_mu s_nu");
    std::int64_t tot = 0;
    for (auto& [l, c] : d) tot += c * dim_classical(R, l);
    if (tot != dim_classical(R, mu) * dim_classical(R, nu)) verify_fail("dimensions of the tensor product");
  }
  Output o;
  o.doc = {{"command", "tensor"}, {"type", R.name()}, {"weights", {weight_json(mu), weight_json(nu)}}};
  o.doc["decomposition"] = mult_json(d);
  o.tsv = "weight\tmult\n";
  for (auto& [m, c] : d) o.tsv += csv(m.vec()) + "\t" + std::to_string(c) + "\n";
  return o;
}

inline Output cmd_branch(const JobSpec& j) {
  RootDatum R(j.family, j.rank);
  const Weight& l = j.weights[0];
  auto d = branch(R, l, *j.levi);
  if (j.verify) {
    IntGroupAlgElt sum;
    std::int64_t tot = 0;
    for (auto& [m, c] : d) {
      IntGroupAlgElt sj = levi_schur(R, m, *j.levi);
      sum += IntGroupAlgElt::monomial(R.zero(), c) * sj;
      tot += c * levi_dim(R, m, *j.levi);
    }
    if (sum != schur(R, l)) verify_fail("sum of Levi characters differs from s_lambda");
    if (tot != dim_classical(R, l)) verify_fail("branching dimension count");
  }
  std::vector<int> lv = *j.levi;
  for (int& x : lv) ++x;
  Output o;
  o.doc = {{"command", "branch"}, {"type", R.name()}, {"weight", weight_json(l)}, {"levi", lv}};
  o.doc["decomposition"] = mult_json(d);
  o.tsv = "weight\tmult\n";
  for (auto& [m, c] : d) o.tsv += csv(m.vec()) + "\t" + std::to_string(c) + "\n";
  return o;
}

inline Output cmd_hecke(const JobSpec& j) {
  RootDatum R(j.family, j.rank);
  HeckeAlgebra H{AffineWeyl(R)};
  const Weight& l = j.weights[0];
  WeylElt w = R.from_word(*j.word);
  HeckeElt h = H.expand_TwX(w, l);
  if (j.verify && h != H.product_TwX(w, l))
    verify_fail("walk expansion of T_{w^-1}^-1 X^lambda differs from the Bernstein relation");
  Output o;
  std::vector<int> wd = *j.word;
  for (int& x : wd) ++x;
  o.doc = {{"command", "hecke-mult"}, {"type", R.name()}, {"weight", weight_json(l)}, {"word", wd}};
  json a = json::array();
  o.tsv = "weight\tv\tcoeff\n";
  for (auto& [k, c] : h.terms()) {
    a.push_back({{"weight", weight_json(k.mu)}, {"v", weyl_json(R, k.v)}, {"coeff", poly_json(c)}});
    o.tsv += csv(k.mu.vec()) + "\t" + weyl_json(R, k.v).dump() + "\t" + poly_tsv(c) + "\n";
  }
  o.doc["terms"] = a;
  return o;
}

inline Output cmd_crystal(const JobSpec& j) {
  int n = j.rank + 1;
  Partition p = j.shape ? *j.shape : weight_partition(j.weights[0]);
  CrystalGraph g = generate_crystal(p, n);
  if (j.verify) {
    RootDatum R('A', j.rank);
    if (crystal_char(g) != schur(R, composition_weight(p, n))) verify_fail("crystal character differs from s_lambda");
  }
  Output o;
  o.dot = export_graph(g);
  o.doc = {{"command", "crystal-graph"}, {"shape", g.shape}, {"letters", n}};
  json nodes = json::array(), edges = json::array();
  o.tsv = "id\trows\tweight\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    Tableau t = from_reading(g.nodes[k], g.shape);
    auto wt = word_weight(g.nodes[k], n);
    nodes.push_back({{"id", k}, {"rows", t.rows}, {"weight", wt}});
    o.tsv += std::to_string(k) + "\t" + tableau_label(t) + "\t" + csv(wt) + "\n";
  }
  o.tsv += "source\ttarget\tlabel\n";
  for (auto& e : g.edges) {
    edges.push_back({{"source", e.src}, {"target", e.dst}, {"label", e.label}});
    o.tsv += std::to_string(e.src) + "\t" + std::to_string(e.dst) + "\t" + std::to_string(e.label) + "\n";
  }
  o.doc["nodes"] = nodes;
  o.doc["edges"] = edges;
  return o;
}

inline Output cmd_walks(const JobSpec& j) {
  RootDatum R(j.family, j.rank);
  AffineWeyl W(R);
  const Weight& l = j.weights[0];
  auto B = qcrystal_walks(W, l);
  if (j.verify) {
    if (hall_littlewood_walks(W, l) != macdonald_formula(R, l))
      verify_fail("walk sum over B_q(p_lambda) differs from Macdonald's formula for P_lambda");
    check_qcrystal_closed(W, B);
  }
  Output o;
  o.doc = {{"command", "walks"}, {"type", R.name()}, {"weight", weight_json(l)}};
  json a = json::array();
  o.tsv = "start\tsteps\twt\tphi\tfolds\tc\tcoeff\n";
  for (auto& p : B) {
    WalkStats st = walk_stats(W, p);
    json steps = json::array();
    std::string ss;
    for (auto& s : p.steps) {
      steps.push_back(step_json(s));
      ss += (ss.empty() ? "" : " ") + std::string(s.kind == StepKind::fold ? "f" : s.kind == StepKind::omega ? "g" : "c") +
            std::to_string(s.label) + (s.sign > 0 ? "+" : s.sign < 0 ? "-" : "");
    }
    LaurentPoly coeff = walk_weight(W, p, 0);
    a.push_back({{"start", {{"trans", weight_json(p.start.trans)}, {"fin", weyl_json(R, p.start.fin)}}},
                 {"steps", steps},
                 {"wt", weight_json(st.wt)},
                 {"phi", weyl_json(R, st.phi)},
                 {"folds", st.folds()},
                 {"c", st.c},
                 {"coeff", poly_json(coeff)}});
    o.tsv += weyl_json(R, p.start.fin).dump() + "\t" + ss + "\t" + csv(st.wt.vec()) + "\t" +
             weyl_json(R, st.phi).dump() + "\t" + std::to_string(st.folds()) + "\t" + std::to_string(st.c) + "\t" +
             poly_tsv(coeff) + "\n";
  }
  o.doc["walks"] = a;
  return o;
}

inline Output cmd_dims(const JobSpec& j) {
  RootDatum R(j.family, j.rank);
  const Weight& l = j.weights[0];
  std::int64_t d = dim_classical(R, l);
  LaurentPoly qd = dim_quantum(R, l);
  if (j.verify) {
    std::int64_t s = 0;
    for (auto& [m, c] : schur(R, l).terms()) s += c;
    if (s != d) verify_fail("dimension formula differs from s_lambda(1)");
    if (j.family == 'A' && static_cast<std::int64_t>(generate_crystal(weight_partition(l), j.rank + 1).nodes.size()) != d)
      verify_fail("number of column strict tableaux differs from the dimension");
  }
  Output o;
  o.doc = {{"command", "dims"}, {"type", R.name()}, {"weight", weight_json(l)}, {"dim", d}, {"qdim", poly_json(qd)}};
  o.tsv = "dim\tqdim\n" + std::to_string(d) + "\t" + poly_tsv(qd) + "\n";
  return o;
}

inline std::string render(const JobSpec& j) {
  set_threads(j.threads);
  Output o;
  if (j.command == "hl") o = cmd_hl(j);
  else if (j.command == "schur") o = cmd_schur(j);
  else if (j.command == "tensor") o = cmd_tensor(j);
  else if (j.command == "branch") o = cmd_branch(j);
  else if (j.command == "hecke-mult") o = cmd_hecke(j);
  else if (j.command == "crystal-graph") o = cmd_crystal(j);
  else if (j.command == "walks") o = cmd_walks(j);
  else o = cmd_dims(j);
  if (j.format == "dot") return o.dot;
  if (j.format == "tsv") return o.tsv;
  return o.doc.dump() + "\n";
}

// Exit codes: 0 ok, 1 unexpected, 2 usage, 3 invariant violation.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    JobSpec j = parse_args(argc, argv);
    std::string text = render(j);
    if (j.out.empty()) {
      out << text;
    } else {
      std::ofstream f(j.out, std::ios::binary);
      if (!f) throw usage_error("cannot open " + j.out);
      f << text;
    }
    return 0;
  } catch (const help_request& h) {
    out << h.text;
    return 0;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    err << "invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace alcove::cli
