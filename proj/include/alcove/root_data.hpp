#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "laurent.hpp"

namespace alcove {

inline constexpr int kMaxRank = 8;

// Element of the weight lattice in fundamental-weight coordinates: c[i] = <lambda, alpha_i^vee>.
struct Weight {
  std::array<int, kMaxRank> c{};
  int n = 0;

  Weight() = default;
  explicit Weight(int rank) : n(rank) {}
  Weight(std::initializer_list<int> xs) : n(static_cast<int>(xs.size())) {
    int i = 0;
    for (int x : xs) c[i++] = x;
  }
  static Weight from(const std::vector<int>& xs) {
    Weight w(static_cast<int>(xs.size()));
    for (int i = 0; i < w.n; ++i) w.c[i] = xs[i];
    return w;
  }

  int operator[](int i) const { return c[i]; }
  int& operator[](int i) { return c[i]; }

  Weight& operator+=(const Weight& o) {
    for (int i = 0; i < n; ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (int i = 0; i < n; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (int i = 0; i < a.n; ++i) a.c[i] = -a.c[i];
    return a;
  }
  friend Weight operator*(int k, Weight a) {
    for (int i = 0; i < a.n; ++i) a.c[i] *= k;
    return a;
  }
  friend bool operator==(const Weight& a, const Weight& b) { return a.n == b.n && a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.c < b.c;
  }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[i]) return false;
    return true;
  }
  bool dominant() const {
    for (int i = 0; i < n; ++i)
      if (c[i] < 0) return false;
    return true;
  }
  std::vector<int> vec() const { return std::vector<int>(c.begin(), c.begin() + n); }
  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.n);
    for (int i = 0; i < w.n; ++i) h = h * 1000003u ^ static_cast<std::size_t>(w.c[i] + 4096);
    return h;
  }
};

// Finite Weyl group element, stored as the images w(omega_j) (column j of m).
struct WeylElt {
  std::array<std::int8_t, kMaxRank * kMaxRank> m{};
  int n = 0;

  int at(int i, int j) const { return m[i * n + j]; }
  Weight act(const Weight& l) const {
    Weight r(n);
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += at(i, j) * l.c[j];
      r.c[i] = s;
    }
    return r;
  }
  friend WeylElt operator*(const WeylElt& u, const WeylElt& v) {
    WeylElt r;
    r.n = u.n;
    for (int i = 0; i < u.n; ++i)
      for (int j = 0; j < u.n; ++j) {
        int s = 0;
        for (int k = 0; k < u.n; ++k) s += u.at(i, k) * v.at(k, j);
        r.m[i * u.n + j] = static_cast<std::int8_t>(s);
      }
    return r;
  }
  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.n == b.n && a.m == b.m; }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.m < b.m; }
};

struct WeylHash {
  std::size_t operator()(const WeylElt& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < w.n * w.n; ++i) h = (h ^ static_cast<std::uint8_t>(w.m[i])) * 1099511628211ull;
    return h;
  }
};

struct Root {
  std::vector<int> simple;   // coordinates over the simple roots
  std::vector<int> coroot;   // coordinates of alpha^vee over the simple coroots
  Weight weight;             // the root in fundamental-weight coordinates
  int height() const { return std::accumulate(simple.begin(), simple.end(), 0); }
};

class RootDatum {
 public:
  RootDatum(char family, int rank) : family_(family), n_(rank) {
    if (rank < 1 || rank > kMaxRank) throw usage_error("rank must be in 1..8");
    build_cartan();
    build_roots();
    build_inverse_cartan();
    cache_ = std::make_shared<Cache>();
  }

  char family() const { return family_; }
  int rank() const { return n_; }
  std::string name() const { return std::string(1, family_) + std::to_string(n_); }
  int cartan(int i, int j) const { return A_[i][j]; }
  const std::vector<Root>& pos_roots() const { return roots_; }
  int num_pos_roots() const { return static_cast<int>(roots_.size()); }

  Weight zero() const { return Weight(n_); }
  Weight omega(int i) const {
    Weight w(n_);
    w.c[i] = 1;
    return w;
  }
  Weight rho() const {
    Weight w(n_);
    for (int i = 0; i < n_; ++i) w.c[i] = 1;
    return w;
  }
  Weight alpha(int i) const { return roots_[simple_idx_[i]].weight; }
  // index of the highest root phi (phi^vee is the highest coroot)
  int phi_index() const { return phi_; }
  const Root& phi() const { return roots_[phi_]; }
  int simple_index(int i) const { return simple_idx_[i]; }

  int pair(const Weight& l, int r) const {
    const auto& cv = roots_[r].coroot;
    int s = 0;
    for (int j = 0; j < n_; ++j) s += cv[j] * l.c[j];
    return s;
  }
  // +k+1 for the k-th positive root, -(k+1) for its negative, 0 if not a root
  int root_lookup(const Weight& w) const {
    auto it = root_map_.find(w);
    return it == root_map_.end() ? 0 : it->second;
  }

  Weight reflect(const Weight& l, int i) const {
    Weight r = l;
    int k = l.c[i];
    for (int j = 0; j < n_; ++j) r.c[j] -= k * A_[j][i];
    return r;
  }
  Weight reflect_root(const Weight& l, int r) const {
    int k = pair(l, r);
    Weight x = l;
    for (int j = 0; j < n_; ++j) x.c[j] -= k * roots_[r].weight.c[j];
    return x;
  }

  // Simple-root coordinates of a weight when it lies in the root lattice.
  std::optional<std::vector<int>> to_simple(const Weight& l) const {
    std::vector<int> r(n_);
    for (int i = 0; i < n_; ++i) {
      long long s = 0;
      for (int j = 0; j < n_; ++j) s += static_cast<long long>(adj_[i][j]) * l.c[j];
      if (s % det_ != 0) return std::nullopt;
      r[i] = static_cast<int>(s / det_);
    }
    return r;
  }

  // det * (inverse Cartan matrix)[i][j]
  long long inverse_cartan_num(int i, int j) const { return adj_[i][j]; }

  bool dominance_leq(const Weight& mu, const Weight& lam) const {
    auto d = to_simple(lam - mu);
    if (!d) return false;
    for (int x : *d)
      if (x < 0) return false;
    return true;
  }

  // --- finite Weyl group -------------------------------------------------
  WeylElt identity() const {
    WeylElt e;
    e.n = n_;
    for (int i = 0; i < n_; ++i) e.m[i * n_ + i] = 1;
    return e;
  }
  WeylElt s(int i) const {
    WeylElt e;
    e.n = n_;
    for (int j = 0; j < n_; ++j) {
      Weight im = reflect(omega(j), i);
      for (int k = 0; k < n_; ++k) e.m[k * n_ + j] = static_cast<std::int8_t>(im.c[k]);
    }
    return e;
  }
  WeylElt from_word(const std::vector<int>& word) const {
    WeylElt w = identity();
    for (int i : word) w = w * s(i);
    return w;
  }
  // reflection in H_alpha for positive root index r
  WeylElt reflection(int r) const {
    WeylElt e;
    e.n = n_;
    for (int j = 0; j < n_; ++j) {
      Weight im = reflect_root(omega(j), r);
      for (int k = 0; k < n_; ++k) e.m[k * n_ + j] = static_cast<std::int8_t>(im.c[k]);
    }
    return e;
  }
  Weight act(const WeylElt& w, const Weight& l) const { return w.act(l); }

  // Lexicographically first reduced word, built from left descents.
  std::vector<int> word(const WeylElt& w) const {
    std::vector<int> out;
    WeylElt x = w;
    Weight r = x.act(rho());
    while (true) {
      int i = 0;
      while (i < n_ && r.c[i] >= 0) ++i;
      if (i == n_) break;
      out.push_back(i);
      x = s(i) * x;
      r = reflect(r, i);
    }
    return out;
  }
  int length(const WeylElt& w) const {
    Weight r = w.act(rho());
    int l = 0;
    for (int k = 0; k < num_pos_roots(); ++k)
      if (pair(r, k) < 0) ++l;
    return l;
  }
  WeylElt inverse(const WeylElt& w) const {
    auto wd = word(w);
    std::reverse(wd.begin(), wd.end());
    return from_word(wd);
  }
  int det(const WeylElt& w) const { return length(w) % 2 ? -1 : 1; }
  // sign of w(alpha_r): true when positive
  bool maps_positive(const WeylElt& w, int r) const {
    int k = root_lookup(w.act(roots_[r].weight));
    if (k == 0) throw invariant_error("image of a root is not a root");
    return k > 0;
  }

  // Whole group in BFS order from the identity (generators tried in order 1..n).
  const std::vector<WeylElt>& weyl_group() const {
    std::call_once(cache_->once, [this] { build_group(); });
    return cache_->elts;
  }
  int weyl_index(const WeylElt& w) const {
    weyl_group();
    auto it = cache_->index.find(w);
    if (it == cache_->index.end()) throw invariant_error("element not in cached Weyl group");
    return it->second;
  }
  std::size_t weyl_order() const {
    // closed forms per family
    auto fact = [](int k) {
      std::size_t r = 1;
      for (int i = 2; i <= k; ++i) r *= static_cast<std::size_t>(i);
      return r;
    };
    switch (family_) {
      case 'A': return fact(n_ + 1);
      case 'B':
      case 'C': return fact(n_) << n_;
      case 'D': return fact(n_) << (n_ - 1);
      case 'G': return 12;
    }
    return 0;
  }
  WeylElt longest() const {
    WeylElt w = identity();
    Weight r = rho();
    // walk to the antidominant chamber
    while (true) {
      int i = 0;
      while (i < n_ && r.c[i] <= 0) ++i;
      if (i == n_) break;
      w = s(i) * w;
      r = reflect(r, i);
    }
    return w;
  }

  // Elements of the parabolic subgroup generated by s_j, j in J, BFS order.
  std::vector<WeylElt> parabolic(const std::vector<int>& J) const {
    std::vector<WeylElt> out{identity()};
    std::unordered_map<WeylElt, int, WeylHash> seen{{identity(), 0}};
    for (std::size_t k = 0; k < out.size(); ++k)
      for (int j : J) {
        WeylElt y = out[k] * s(j);
        if (seen.emplace(y, static_cast<int>(out.size())).second) out.push_back(y);
      }
    return out;
  }

  std::vector<Weight> orbit(const Weight& l) const {
    std::vector<Weight> out{l};
    std::unordered_map<Weight, int, WeightHash> seen{{l, 0}};
    for (std::size_t k = 0; k < out.size(); ++k)
      for (int i = 0; i < n_; ++i) {
        Weight y = reflect(out[k], i);
        if (seen.emplace(y, 0).second) out.push_back(y);
      }
    return out;
  }
  // dominant representative of the orbit and an element w with w(dom) = l
  std::pair<Weight, WeylElt> to_dominant(const Weight& l) const {
    Weight x = l;
    WeylElt w = identity();
    while (true) {
      int i = 0;
      while (i < n_ && x.c[i] >= 0) ++i;
      if (i == n_) break;
      x = reflect(x, i);
      w = w * s(i);
    }
    return {x, w};
  }

  // Poincare polynomial (in t) of the stabilizer of l.
  LaurentPoly stabilizer_poincare(const Weight& l) const {
    LaurentPoly p;
    if (l.dominant()) {
      std::vector<int> J;
      for (int i = 0; i < n_; ++i)
        if (l.c[i] == 0) J.push_back(i);
      for (auto& w : parabolic(J)) p.add_term(length(w), 1);
      return p;
    }
    for (auto& w : weyl_group())
      if (w.act(l) == l) p.add_term(length(w), 1);
    return p;
  }
  LaurentPoly poincare() const { return stabilizer_poincare(zero()); }

  // Minimal length representatives of W / W_lambda, in BFS order of W.
  std::vector<WeylElt> min_coset_reps(const Weight& l) const {
    if (!l.dominant()) throw usage_error("min_coset_reps: weight " + l.str() + " is not dominant");
    std::vector<int> J;
    for (int i = 0; i < n_; ++i)
      if (l.c[i] == 0) J.push_back(i);
    std::vector<WeylElt> out;
    for (auto& w : weyl_group()) {
      bool ok = true;
      for (int j : J)
        if (!maps_positive(w, simple_idx_[j])) { ok = false; break; }
      if (ok) out.push_back(w);
    }
    return out;
  }

  std::vector<int> all_indices() const {
    std::vector<int> r(n_);
    std::iota(r.begin(), r.end(), 0);
    return r;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<WeylElt> elts;
    std::unordered_map<WeylElt, int, WeylHash> index;
  };

  void build_group() const {
    auto& c = *cache_;
    c.elts.push_back(identity());
    c.index.emplace(identity(), 0);
    // BFS; within a layer the order is by (parent index, generator), i.e. word-lex
    for (std::size_t k = 0; k < c.elts.size(); ++k)
      for (int i = 0; i < n_; ++i) {
        WeylElt y = c.elts[k] * s(i);
        if (c.index.emplace(y, static_cast<int>(c.elts.size())).second) c.elts.push_back(y);
      }
  }

  void build_cartan() {
    A_.assign(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i) A_[i][i] = 2;
    auto link = [&](int i, int j) { A_[i][j] = A_[j][i] = -1; };
    switch (family_) {
      case 'A':
        for (int i = 0; i + 1 < n_; ++i) link(i, i + 1);
        break;
      case 'B':
        if (n_ < 2) throw usage_error("type B needs rank >= 2");
        for (int i = 0; i + 1 < n_; ++i) link(i, i + 1);
        A_[n_ - 1][n_ - 2] = -2;  // alpha_n short
        break;
      case 'C':
        if (n_ < 2) throw usage_error("type C needs rank >= 2");
        // node 1 is the long root 2e_1, alpha_i = e_i - e_{i-1}
        for (int i = 0; i + 1 < n_; ++i) link(i, i + 1);
        A_[1][0] = -2;
        break;
      case 'D':
        if (n_ < 3) throw usage_error("type D needs rank >= 3");
        for (int i = 0; i + 2 < n_; ++i) link(i, i + 1);
        link(n_ - 3, n_ - 1);
        break;
      case 'G':
        if (n_ != 2) throw usage_error("type G needs rank 2");
        A_[0][1] = -3;  // alpha_1 short
        A_[1][0] = -1;
        break;
      default:
        throw usage_error(std::string("unsupported family '") + family_ + "'");
    }
  }

  void build_roots() {
    std::map<std::vector<int>, std::vector<int>> found;  // simple -> coroot
    std::deque<std::pair<std::vector<int>, std::vector<int>>> q;
    for (int i = 0; i < n_; ++i) {
      std::vector<int> e(n_, 0);
      e[i] = 1;
      found[e] = e;
      q.emplace_back(e, e);
    }
    while (!q.empty()) {
      auto [a, av] = q.front();
      q.pop_front();
      for (int i = 0; i < n_; ++i) {
        // <alpha, alpha_i^vee> and <alpha_i, alpha^vee>
        int k = 0, kv = 0;
        for (int j = 0; j < n_; ++j) {
          k += a[j] * A_[i][j];
          kv += av[j] * A_[j][i];
        }
        auto b = a, bv = av;
        b[i] -= k;
        bv[i] -= kv;
        bool pos = std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
        if (!pos) continue;
        if (found.emplace(b, bv).second) q.emplace_back(b, bv);
      }
    }
    for (auto& [s, cv] : found) {
      Root r;
      r.simple = s;
      r.coroot = cv;
      r.weight = Weight(n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.weight.c[i] += A_[i][j] * s[j];
      roots_.push_back(r);
    }
    std::stable_sort(roots_.begin(), roots_.end(), [](const Root& x, const Root& y) {
      if (x.height() != y.height()) return x.height() < y.height();
      return x.simple < y.simple;
    });
    simple_idx_.assign(n_, -1);
    for (int k = 0; k < num_pos_roots(); ++k) {
      root_map_[roots_[k].weight] = k + 1;
      root_map_[-roots_[k].weight] = -(k + 1);
      if (roots_[k].height() == 1)
        for (int i = 0; i < n_; ++i)
          if (roots_[k].simple[i] == 1) simple_idx_[i] = k;
    }
    // phi: root whose coroot has maximal height
    phi_ = 0;
    auto cvh = [&](int k) { return std::accumulate(roots_[k].coroot.begin(), roots_[k].coroot.end(), 0); };
    for (int k = 1; k < num_pos_roots(); ++k)
      if (cvh(k) > cvh(phi_)) phi_ = k;
  }

  void build_inverse_cartan() {
    // Gauss-Jordan over the rationals, then clear denominators
    int n = n_;
    struct Q {
      long long p, q;
    };
    auto norm = [](Q x) {
      long long g = std::gcd(x.p < 0 ? -x.p : x.p, x.q);
      if (g == 0) g = 1;
      x.p /= g;
      x.q /= g;
      if (x.q < 0) x.p = -x.p, x.q = -x.q;
      return x;
    };
    auto sub = [&](Q a, Q b) { return norm({a.p * b.q - b.p * a.q, a.q * b.q}); };
    auto mul = [&](Q a, Q b) { return norm({a.p * b.p, a.q * b.q}); };
    auto div = [&](Q a, Q b) { return norm({a.p * b.q, a.q * b.p}); };
    std::vector<std::vector<Q>> M(n, std::vector<Q>(2 * n, Q{0, 1}));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) M[i][j] = {A_[i][j], 1};
      M[i][n + i] = {1, 1};
    }
    for (int k = 0; k < n; ++k) {
      int p = k;
      while (M[p][k].p == 0) ++p;
      std::swap(M[p], M[k]);
      Q piv = M[k][k];
      for (auto& x : M[k]) x = div(x, piv);
      for (int i = 0; i < n; ++i) {
        if (i == k || M[i][k].p == 0) continue;
        Q f = M[i][k];
        for (int j = 0; j < 2 * n; ++j) M[i][j] = sub(M[i][j], mul(f, M[k][j]));
      }
    }
    det_ = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) det_ = std::lcm(det_, M[i][n + j].q);
    adj_.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) adj_[i][j] = M[i][n + j].p * (det_ / M[i][n + j].q);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int k = 0; k < n; ++k) s += A_[i][k] * adj_[k][j];
        if (s != (i == j ? det_ : 0)) throw invariant_error("inverse Cartan matrix check failed");
      }
  }

  char family_;
  int n_;
  std::vector<std::vector<int>> A_;
  std::vector<Root> roots_;
  std::vector<int> simple_idx_;
  std::map<Weight, int> root_map_;
  int phi_ = 0;
  long long det_ = 1;
  std::vector<std::vector<long long>> adj_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace alcove
