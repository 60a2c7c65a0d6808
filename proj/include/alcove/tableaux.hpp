#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "group_algebra.hpp"
#include "parallel.hpp"

namespace alcove {

// Letters 1..n; the word b1 b2 ... bk stands for eps_{b1} (x) ... (x) eps_{bk}.
using Word = std::vector<int>;
using Partition = std::vector<int>;

inline void check_partition(const Partition& l) {
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l[k] < 0) throw usage_error("partition has a negative part");
    if (k && l[k] > l[k - 1]) throw usage_error("partition parts must be weakly decreasing");
  }
}

inline Partition trim(Partition l) {
  while (!l.empty() && l.back() == 0) l.pop_back();
  return l;
}

// mu_i = number of i's, i = 1..n
inline std::vector<int> word_weight(const Word& b, int n) {
  std::vector<int> m(n, 0);
  for (int a : b) {
    if (a < 1 || a > n) throw usage_error("letter " + std::to_string(a) + " outside 1.." + std::to_string(n));
    ++m[a - 1];
  }
  return m;
}

// (mu_1 - mu_2, ..., mu_{n-1} - mu_n): the A_{n-1} weight of a composition.
inline Weight composition_weight(const std::vector<int>& mu, int n) {
  Weight w(n - 1);
  for (int i = 0; i + 1 < n; ++i) w.c[i] = (i < (int)mu.size() ? mu[i] : 0) - (i + 1 < (int)mu.size() ? mu[i + 1] : 0);
  return w;
}

// Partition with at most n parts from fundamental-weight coordinates (last part 0).
inline Partition weight_partition(const Weight& w) {
  Partition l(w.n + 1, 0);
  for (int i = w.n - 1; i >= 0; --i) l[i] = l[i + 1] + w.c[i];
  return trim(l);
}

namespace detail {
// Positions of unpaired +1 (letter i) and -1 (letter i+1) after cancelling (+1,-1) pairs.
inline void unpaired(int i, const Word& b, std::vector<int>& plus, std::vector<int>& minus) {
  plus.clear();
  minus.clear();
  for (int k = 0; k < static_cast<int>(b.size()); ++k) {
    if (b[k] == i) {
      plus.push_back(k);
    } else if (b[k] == i + 1) {
      if (!plus.empty()) plus.pop_back();
      else minus.push_back(k);
    }
  }
}
}  // namespace detail

inline std::optional<Word> word_f(int i, Word b) {
  std::vector<int> p, m;
  detail::unpaired(i, b, p, m);
  if (p.empty()) return std::nullopt;
  b[p.front()] = i + 1;
  return b;
}

inline std::optional<Word> word_e(int i, Word b) {
  std::vector<int> p, m;
  detail::unpaired(i, b, p, m);
  if (m.empty()) return std::nullopt;
  b[m.back()] = i;
  return b;
}

// Number of f_i (resp. e_i) that can be applied.
inline int word_d_plus(int i, const Word& b) {
  std::vector<int> p, m;
  detail::unpaired(i, b, p, m);
  return static_cast<int>(p.size());
}
inline int word_d_minus(int i, const Word& b) {
  std::vector<int> p, m;
  detail::unpaired(i, b, p, m);
  return static_cast<int>(m.size());
}

struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    Partition l;
    for (auto& r : rows) l.push_back(static_cast<int>(r.size()));
    return l;
  }
  int size() const {
    int s = 0;
    for (auto& r : rows) s += static_cast<int>(r.size());
    return s;
  }
  // number of i's, padded to n entries
  std::vector<int> weight(int n) const {
    Word all;
    for (auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    return word_weight(all, n);
  }
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows; }
};

// Row i filled with i.
inline Tableau highest_tableau(const Partition& l) {
  check_partition(l);
  Tableau t;
  for (std::size_t i = 0; i < l.size() && l[i] > 0; ++i) t.rows.emplace_back(l[i], static_cast<int>(i) + 1);
  return t;
}

inline Word reading(const Tableau& t) {
  check_partition(t.shape());
  Word b;
  for (auto& r : t.rows) b.insert(b.end(), r.rbegin(), r.rend());
  return b;
}

inline Tableau from_reading(const Word& b, const Partition& l) {
  check_partition(l);
  Tableau t;
  std::size_t k = 0;
  for (int len : l) {
    if (len == 0) break;
    if (k + len > b.size()) throw usage_error("word is shorter than the shape");
    t.rows.emplace_back(b.rbegin() + (b.size() - k - len), b.rbegin() + (b.size() - k));
    k += len;
  }
  if (k != b.size()) throw usage_error("word is longer than the shape");
  return t;
}

inline bool is_column_strict(const Tableau& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    if (r.empty()) return false;
    for (std::size_t j = 1; j < r.size(); ++j)
      if (r[j] < r[j - 1]) return false;
    if (i == 0) continue;
    const auto& up = t.rows[i - 1];
    if (r.size() > up.size()) return false;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] <= up[j]) return false;
  }
  return true;
}

struct CrystalEdge {
  int src, dst, label;
  friend bool operator==(const CrystalEdge& a, const CrystalEdge& b) {
    return a.src == b.src && a.dst == b.dst && a.label == b.label;
  }
  friend bool operator<(const CrystalEdge& a, const CrystalEdge& b) {
    return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
  }
};

struct CrystalGraph {
  Partition shape;
  int n = 0;
  std::vector<Word> nodes;  // sorted
  std::vector<CrystalEdge> edges;  // dst = f_label(src), sorted

  int index(const Word& b) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), b);
    return it != nodes.end() && *it == b ? static_cast<int>(it - nodes.begin()) : -1;
  }
  friend bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
    return a.shape == b.shape && a.n == b.n && a.nodes == b.nodes && a.edges == b.edges;
  }
};

// Closure of reading(P_lambda) under word_f / word_e, frontier by frontier.
inline CrystalGraph generate_crystal(const Partition& shape, int n) {
  Partition l = trim(shape);
  check_partition(l);
  if (n < 1) throw usage_error("crystal needs at least one letter");
  if (static_cast<int>(l.size()) > n) throw usage_error("partition has more than n parts");
  CrystalGraph g;
  g.shape = l;
  g.n = n;
  std::set<Word> seen{reading(highest_tableau(l))};
  std::vector<Word> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    auto nbrs = parallel_map<std::vector<Word>>(frontier.size(), [&](std::size_t k) {
      std::vector<Word> out;
      for (int i = 1; i < n; ++i)
        for (auto q : {word_f(i, frontier[k]), word_e(i, frontier[k])})
          if (q) {
            if (!is_column_strict(from_reading(*q, l)))
              throw invariant_error("root operator left the column strict tableaux");
            out.push_back(*q);
          }
      return out;
    });
    std::set<Word> fresh;
    for (auto& v : nbrs)
      for (auto& q : v)
        if (!seen.count(q)) fresh.insert(q);
    seen.insert(fresh.begin(), fresh.end());
    frontier.assign(fresh.begin(), fresh.end());
  }
  g.nodes.assign(seen.begin(), seen.end());
  for (int s = 0; s < static_cast<int>(g.nodes.size()); ++s)
    for (int i = 1; i < n; ++i)
      if (auto q = word_f(i, g.nodes[s])) g.edges.push_back({s, g.index(*q), i});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline IntGroupAlgElt crystal_char(const CrystalGraph& g) {
  if (g.n < 2) throw usage_error("crystal_char needs n >= 2 letters");
  IntGroupAlgElt r;
  for (auto& b : g.nodes) r.add_term(composition_weight(word_weight(b, g.n), g.n), 1);
  return r;
}

// Tableaux of shape lambda and weight mu, counted in the crystal.
inline std::int64_t tableau_count(const CrystalGraph& g, const std::vector<int>& mu) {
  std::vector<int> m = mu;
  m.resize(g.n, 0);
  std::int64_t s = 0;
  for (auto& b : g.nodes)
    if (word_weight(b, g.n) == m) ++s;
  return s;
}

// s_mu s_nu = sum over q in B(nu) with every prefix of p_mu (x) q dominant of s_{mu + wt(q)}.
inline std::vector<std::pair<Partition, std::int64_t>> lr_via_crystal(const Partition& mu, const Partition& nu,
                                                                      int n) {
  Partition m = trim(mu);
  check_partition(m);
  if (static_cast<int>(m.size()) > n) throw usage_error("partition has more than n parts");
  CrystalGraph g = generate_crystal(nu, n);
  std::map<Partition, std::int64_t> out;
  for (auto& q : g.nodes) {
    std::vector<int> cnt(m);
    cnt.resize(n, 0);
    bool ok = true;
    for (int a : q) {
      ++cnt[a - 1];
      if (a >= 2 && cnt[a - 2] < cnt[a - 1]) {
        ok = false;
        break;
      }
    }
    if (ok) ++out[trim(cnt)];
  }
  return {out.begin(), out.end()};
}

// ---- DOT ----------------------------------------------------------------------

inline std::string tableau_label(const Tableau& t) {
  std::string s;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) s += "/";
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) s += (j ? " " : "") + std::to_string(t.rows[i][j]);
  }
  return s;
}

inline std::string export_graph(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  std::string sh;
  for (std::size_t k = 0; k < g.shape.size(); ++k) sh += (k ? "," : "") + std::to_string(g.shape[k]);
  os << "  graph [partition=\"" << sh << "\", letters=" << g.n << "];\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    if (g.nodes[k].empty()) {
      os << "  n" << k << ";\n";
      continue;
    }
    os << "  n" << k << " [label=\"" << tableau_label(from_reading(g.nodes[k], g.shape)) << "\"];\n";
  }
  for (auto& e : g.edges) os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, sep)) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw usage_error("not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) throw usage_error("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// Inverse of export_graph.
inline CrystalGraph import_graph(const std::string& dot) {
  static const std::regex head(R"re(^\s*graph \[partition="([0-9,]*)", letters=([0-9]+)\];\s*$)re");
  static const std::regex bare(R"re(^\s*n([0-9]+);\s*$)re");
  static const std::regex node(R"re(^\s*n([0-9]+) \[label="([^"]*)"\];\s*$)re");
  static const std::regex edge(R"re(^\s*n([0-9]+) -> n([0-9]+) \[label="([0-9]+)"\];\s*$)re");
  CrystalGraph g;
  std::map<int, Word> nodes;
  std::istringstream is(dot);
  std::string line;
  std::smatch m;
  while (std::getline(is, line)) {
    if (std::regex_match(line, m, head)) {
      g.shape = parse_ints(m[1], ',');
      g.n = std::stoi(m[2]);
    } else if (std::regex_match(line, m, bare)) {
      nodes[std::stoi(m[1])] = {};
    } else if (std::regex_match(line, m, node)) {
      Tableau t;
      std::istringstream rs(m[2].str());
      std::string row;
      while (std::getline(rs, row, '/')) t.rows.push_back(parse_ints(row, ' '));
      nodes[std::stoi(m[1])] = reading(t);
    } else if (std::regex_match(line, m, edge)) {
      g.edges.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])});
    }
  }
  for (auto& [k, b] : nodes) {
    if (k != static_cast<int>(g.nodes.size())) throw usage_error("DOT node ids are not consecutive");
    g.nodes.push_back(b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace alcove
