#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "group_algebra.hpp"
#include "walks.hpp"

namespace alcove {

struct HeckeKey {
  Weight mu;
  WeylElt v;
  friend bool operator==(const HeckeKey& a, const HeckeKey& b) { return a.mu == b.mu && a.v == b.v; }
  friend bool operator<(const HeckeKey& a, const HeckeKey& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.v < b.v;
  }
};

// sum of c X^mu T_{v^{-1}}^{-1}
class HeckeElt {
 public:
  static HeckeElt basis(const Weight& mu, const WeylElt& v, const LaurentPoly& c = LaurentPoly(1)) {
    HeckeElt h;
    h.add_term(mu, v, c);
    return h;
  }
  const std::map<HeckeKey, LaurentPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  LaurentPoly coeff(const Weight& mu, const WeylElt& v) const {
    auto it = t_.find({mu, v});
    return it == t_.end() ? LaurentPoly() : it->second;
  }
  void add_term(const Weight& mu, const WeylElt& v, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, ins] = t_.try_emplace(HeckeKey{mu, v}, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  HeckeElt& operator+=(const HeckeElt& o) {
    for (auto& [k, c] : o.t_) add_term(k.mu, k.v, c);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    for (auto& [k, c] : o.t_) add_term(k.mu, k.v, -c);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& k, const HeckeElt& a) {
    HeckeElt r;
    for (auto& [key, c] : a.t_) r.add_term(key.mu, key.v, k * c);
    return r;
  }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.t_ == b.t_; }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

 private:
  std::map<HeckeKey, LaurentPoly> t_;
};

// Unnormalized symmetrizer e = sum_w q^{-l(w)} T_{w^{-1}}^{-1}; 1_0 = e / norm.
struct Symmetrizer {
  HeckeElt e;
  LaurentPoly norm;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(AffineWeyl W) : W_(std::move(W)) {}

  const AffineWeyl& affine() const { return W_; }
  const RootDatum& datum() const { return W_.datum(); }

  HeckeElt one() const { return HeckeElt::basis(datum().zero(), datum().identity()); }
  HeckeElt X(const Weight& mu) const { return HeckeElt::basis(mu, datum().identity()); }
  // T_{v^{-1}}^{-1}
  HeckeElt B(const WeylElt& v) const { return HeckeElt::basis(datum().zero(), v); }
  HeckeElt from(const GroupAlgElt& f) const {
    HeckeElt h;
    for (auto& [m, c] : f.terms()) h.add_term(m, datum().identity(), c);
    return h;
  }

  // T_i^{-1} h, finite i (0-based)
  HeckeElt left_Tinv(int i, const HeckeElt& h) const {
    const RootDatum& R = datum();
    const LaurentPoly z = LaurentPoly::q_minus_qinv();
    Weight a = R.alpha(i);
    HeckeElt r;
    for (auto& [key, c] : h.terms()) {
      const Weight& mu = key.mu;
      const WeylElt& v = key.v;
      Weight smu = R.reflect(mu, i);
      if (v.act(R.rho()).c[i] > 0) {
        r.add_term(smu, R.s(i) * v, c);
      } else {
        r.add_term(smu, R.s(i) * v, c);
        r.add_term(smu, v, -(z * c));
      }
      int k = mu.c[i];
      LaurentPoly zc = z * c;
      for (int j = 1; j <= k; ++j) r.add_term(mu - j * a, v, zc);
      for (int j = 0; j < -k; ++j) r.add_term(mu + j * a, v, -zc);
    }
    return r;
  }
  // T_{s_label} h, label 0..n
  HeckeElt left_T(int label, const HeckeElt& h) const {
    if (label == 0) return left_X(datum().phi().weight, left_B(datum().reflection(datum().phi_index()), h));
    return left_Tinv(label - 1, h) + LaurentPoly::q_minus_qinv() * h;
  }
  HeckeElt left_X(const Weight& mu, const HeckeElt& h) const {
    HeckeElt r;
    for (auto& [key, c] : h.terms()) r.add_term(key.mu + mu, key.v, c);
    return r;
  }
  HeckeElt left_B(const WeylElt& v, const HeckeElt& h) const {
    auto wd = datum().word(v);
    HeckeElt r = h;
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) r = left_Tinv(*it, r);
    return r;
  }
  // T_g h for g in Omega: T_g = X^mu T_{u^{-1}}^{-1}, g = t_mu u
  HeckeElt left_omega(int g, const HeckeElt& h) const {
    const ExtAffElt& x = W_.omega_group()[g];
    return left_X(x.trans, left_B(x.fin, h));
  }

  HeckeElt mult(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt r;
    std::map<WeylElt, HeckeElt> memo;
    for (auto& [key, c] : a.terms()) {
      auto it = memo.find(key.v);
      if (it == memo.end()) it = memo.emplace(key.v, left_B(key.v, b)).first;
      r += c * left_X(key.mu, it->second);
    }
    return r;
  }

  HeckeElt T(int label) const { return left_T(label, one()); }
  HeckeElt T_word(const AffineWord& w) const {
    HeckeElt r = one();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = left_T(*it, r);
    return left_omega(w.omega, r);
  }
  // T_x along a reduced expression of x
  HeckeElt T_x(const ExtAffElt& x, bool largest_first = false) const {
    return T_word(W_.reduced_expression(x, largest_first));
  }
  // finite T_w
  HeckeElt T_fin(const WeylElt& w) const {
    AffineWord aw;
    for (int i : datum().word(w)) aw.letters.push_back(i + 1);
    return T_word(aw);
  }

  Symmetrizer symmetrizer() const { return parabolic_symmetrizer(datum().all_indices()); }
  Symmetrizer parabolic_symmetrizer(const std::vector<int>& J) const {
    const RootDatum& R = datum();
    Symmetrizer s;
    for (auto& w : R.parabolic(J)) {
      int l = R.length(w);
      s.e.add_term(R.zero(), w, LaurentPoly::monomial(-l));
      s.norm.add_term(-2 * l, 1);
    }
    return s;
  }

  // T_{w^{-1}}^{-1} X^lambda by straightening walks.
  HeckeElt expand_TwX(const WeylElt& w, const Weight& l) const {
    Walk pre = finite_walk(W_, w);
    Walk tl = min_walk(W_, W_.translation(l));
    HeckeElt r;
    const LaurentPoly z = LaurentPoly::q_minus_qinv();
    for (auto& t : expand(W_, pre, tl.steps)) {
      WalkStats st = walk_stats(W_, t.walk);
      r.add_term(st.wt, st.phi, LaurentPoly(t.sign) * pow(z, st.folds()));
    }
    return r;
  }
  // the same product by the Bernstein relation
  HeckeElt product_TwX(const WeylElt& w, const Weight& l) const { return left_B(w, X(l)); }

 private:
  AffineWeyl W_;
};

// ---- Hall-Littlewood polynomials ----------------------------------------------

// q^{-(l(iota)+l(phi)-f)} (1-q^{-2})^{f-c}
inline LaurentPoly walk_weight(const AffineWeyl& W, const Walk& p, int c) {
  const RootDatum& R = W.datum();
  WalkStats st = walk_stats(W, p);
  int e = R.length(st.iota) + R.length(st.phi) - st.folds();
  if (e < 0 || e % 2) throw invariant_error("walk exponent l(iota)+l(phi)-f is not an even integer >= 0");
  if (c > st.folds()) throw invariant_error("more counted folds than folds");
  return LaurentPoly::monomial(-e) * pow(one_minus_t(), st.folds() - c);
}

namespace detail {
inline void check_hl(const RootDatum& R, const GroupAlgElt& P, const Weight& l) {
  if (P.coeff(l) != LaurentPoly(1)) throw invariant_error("P_lambda: coefficient of X^lambda is not 1");
  for (auto& [m, c] : P.terms()) c.in_power(-2);
  if (!P.is_invariant(R)) throw invariant_error("P_lambda is not W-invariant");
}
}  // namespace detail

inline GroupAlgElt hall_littlewood_walks(const AffineWeyl& W, const Weight& l) {
  const RootDatum& R = W.datum();
  if (!l.dominant()) throw usage_error("hall_littlewood: weight " + l.str() + " is not dominant");
  GroupAlgElt r;
  for (auto& p : qcrystal_walks(W, l)) r.add_term(walk_stats(W, p).wt, walk_weight(W, p, 0));
  detail::check_hl(R, r, l);
  return r;
}

// Stabilizer of mu in W_J.
inline LaurentPoly levi_stabilizer_poincare(const RootDatum& R, const std::vector<int>& J, const Weight& mu) {
  LaurentPoly p;
  for (auto& w : R.parabolic(J))
    if (w.act(mu) == mu) p.add_term(-2 * R.length(w), 1);
  return p;
}

// W_J(mu)^{-1} sum_{w in W_J} w( X^mu prod_{alpha in R_J^+} (1 - t X^{-alpha}) / (1 - X^{-alpha}) )
inline GroupAlgElt macdonald_formula(const RootDatum& R, const std::vector<int>& J, const Weight& mu) {
  for (int j : J)
    if (mu.c[j] < 0) throw usage_error("macdonald_formula: weight " + mu.str() + " is not dominant for the Levi");
  auto roots = levi_positive_roots(R, J);
  Weight two_rho = R.zero();
  for (int k : roots) two_rho += R.pos_roots()[k].weight;
  GroupAlgElt num = GroupAlgElt::monomial(mu);
  for (int k : roots) {
    const Weight& a = R.pos_roots()[k].weight;
    num = num * (GroupAlgElt::monomial(R.zero()) - GroupAlgElt::monomial(-a, t_poly()));
  }
  // w(prod (1 - X^{-a})) = det(w) X^{rho_J - w rho_J} prod (1 - X^{-a}), w in W_J
  GroupAlgElt alt;
  for (auto& w : R.parabolic(J)) {
    Weight d = two_rho - w.act(two_rho);
    for (int i = 0; i < R.rank(); ++i) d.c[i] /= 2;
    alt += GroupAlgElt::monomial(-d, LaurentPoly(R.det(w))) * num.act(w);
  }
  for (int k : roots) alt = divide_exact(alt, one_minus_neg<LaurentPoly>(R.pos_roots()[k].weight), R);
  LaurentPoly st = levi_stabilizer_poincare(R, J, mu);
  GroupAlgElt r;
  for (auto& [m, c] : alt.terms()) r.add_term(m, c.divide_exact(st));
  return r;
}
inline GroupAlgElt macdonald_formula(const RootDatum& R, const Weight& l) {
  if (!l.dominant()) throw usage_error("macdonald_formula: weight " + l.str() + " is not dominant");
  GroupAlgElt r = macdonald_formula(R, R.all_indices(), l);
  detail::check_hl(R, r, l);
  return r;
}

// P^J_mu from P^J_mu e_J = (sum_{w in W_J^mu} q^{-l(w)} T_{w^{-1}}^{-1}) X^mu e_J.
inline GroupAlgElt hall_littlewood_hecke(const HeckeAlgebra& H, const std::vector<int>& J, const Weight& mu) {
  const RootDatum& R = H.datum();
  for (int j : J)
    if (mu.c[j] < 0) throw usage_error("hall_littlewood_hecke: weight " + mu.str() + " is not dominant for the Levi");
  Symmetrizer s = H.parabolic_symmetrizer(J);
  HeckeElt left;
  for (auto& w : R.parabolic(J)) {
    bool minimal = true;
    for (int j : J)
      if (mu.c[j] == 0 && !R.maps_positive(w, R.simple_index(j))) minimal = false;
    if (minimal) left.add_term(R.zero(), w, LaurentPoly::monomial(-R.length(w)));
  }
  HeckeElt rhs = H.mult(left, H.mult(H.X(mu), s.e));
  GroupAlgElt P;
  for (auto& [k, c] : rhs.terms())
    if (k.v == R.identity()) P.add_term(k.mu, c);
  if (H.mult(H.from(P), s.e) != rhs) throw invariant_error("P_mu e is not of the form f e");
  return P;
}
inline GroupAlgElt hall_littlewood_hecke(const HeckeAlgebra& H, const Weight& l) {
  if (!l.dominant()) throw usage_error("hall_littlewood_hecke: weight " + l.str() + " is not dominant");
  return hall_littlewood_hecke(H, H.datum().all_indices(), l);
}

// q^{l(w0)} W_0(q^{-2}) P_lambda 1_0 == sum_{x in W t_lambda W} q^{l(x)-l(n_lambda)} T_x
inline bool double_coset_sum_check(const HeckeAlgebra& H, const Weight& l, bool largest_first = false) {
  const AffineWeyl& W = H.affine();
  const RootDatum& R = H.datum();
  auto [m, n] = W.double_coset_extremes(l);
  (void)m;
  int ln = W.length(n);
  Symmetrizer s = H.symmetrizer();
  HeckeElt lhs = LaurentPoly::monomial(R.length(R.longest())) * H.mult(H.from(hall_littlewood_walks(W, l)), s.e);
  HeckeElt rhs;
  for (auto& x : W.double_coset(l)) rhs += LaurentPoly::monomial(W.length(x) - ln) * H.T_x(x, largest_first);
  return lhs == rhs;
}

// ---- Demazure operators ---------------------------------------------------------

enum class DemazureKind { delta, tilde, C };

inline GroupAlgElt demazure(const RootDatum& R, int i, DemazureKind kind, const GroupAlgElt& f) {
  GroupAlgElt sf = f.reflect(R, i);
  GroupAlgElt d = divide_exact(f - sf, one_minus_neg<LaurentPoly>(R.alpha(i)), R);
  switch (kind) {
    case DemazureKind::delta: return d;
    case DemazureKind::tilde: return d + sf;
    case DemazureKind::C: return one_minus_t() * d + sf + t_poly() * f;
  }
  return d;
}

// ---- expansions in the P basis --------------------------------------------------

// Memoized P^J_mu (J = all: the Hall-Littlewood polynomials).
class HLTable {
 public:
  HLTable(const AffineWeyl& W, std::vector<int> J) : W_(W), J_(std::move(J)) {}
  explicit HLTable(const AffineWeyl& W) : W_(W), J_(W.datum().all_indices()) {}

  const std::vector<int>& levi() const { return J_; }
  bool full() const { return static_cast<int>(J_.size()) == W_.rank(); }

  GroupAlgElt get(const Weight& mu) {
    {
      std::lock_guard<std::mutex> g(m_);
      auto it = cache_.find(mu);
      if (it != cache_.end()) return it->second;
    }
    GroupAlgElt P = full() ? hall_littlewood_walks(W_, mu) : macdonald_formula(W_.datum(), J_, mu);
    std::lock_guard<std::mutex> g(m_);
    return cache_.emplace(mu, P).first->second;
  }

  bool dominant(const Weight& mu) const {
    for (int j : J_)
      if (mu.c[j] < 0) return false;
    return true;
  }

  // f = sum c_mu P^J_mu, by removing the highest J-dominant term.
  std::map<Weight, LaurentPoly> expand(GroupAlgElt f) {
    HeightLess less{&W_.datum()};
    std::map<Weight, LaurentPoly> out;
    while (!f.is_zero()) {
      const Weight* best = nullptr;
      for (auto& [m, c] : f.terms())
        if (dominant(m) && (!best || less(*best, m))) best = &m;
      if (!best) throw invariant_error("element is not invariant under the Levi Weyl group");
      Weight b = *best;
      LaurentPoly c = f.coeff(b);
      out[b] = c;
      f -= c * get(b);
    }
    return out;
  }

 private:
  const AffineWeyl& W_;
  std::vector<int> J_;
  std::mutex m_;
  std::map<Weight, GroupAlgElt> cache_;
};

using Decomposition = std::map<Weight, LaurentPoly>;

inline Decomposition hl_expand(const AffineWeyl& W, const GroupAlgElt& f) {
  HLTable T(W);
  return T.expand(f);
}

// ---- q-crystals -----------------------------------------------------------------

inline void check_qcrystal_closed(const AffineWeyl& W, const std::vector<Walk>& B) {
  std::set<Walk> S(B.begin(), B.end());
  for (auto& p : B)
    for (int i = 0; i < W.rank(); ++i)
      for (auto op : {root_e, root_f})
        if (auto q = op(W, i, p); q && !S.count(*q)) {
          std::string msg = "not a q-crystal: root operator " + std::to_string(i + 1) + " leaves B at walk starting at " +
                            p.start.trans.str();
          throw usage_error(msg);
        }
}

// char(B) = sum_p q^{-(l(iota)+l(phi)-f)} (1-q^{-2})^{f-c} X^{wt(p)}
inline GroupAlgElt qcrystal_char(const AffineWeyl& W, const std::vector<Walk>& B) {
  GroupAlgElt r;
  for (auto& p : B) {
    WalkStats st = walk_stats(W, p);
    r.add_term(st.wt, walk_weight(W, p, st.c));
  }
  return r;
}

inline Decomposition qchar_decompose(const AffineWeyl& W, const std::vector<Walk>& B) {
  check_qcrystal_closed(W, B);
  Decomposition out;
  for (auto& p : B)
    if (is_dominant(W, p)) {
      WalkStats st = walk_stats(W, p);
      out[st.wt] += walk_weight(W, p, st.c);
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// char(B) == sum over the decomposition of coeff * P
inline bool qchar_verify(const AffineWeyl& W, const std::vector<Walk>& B) {
  HLTable T(W);
  GroupAlgElt s;
  for (auto& [m, c] : qchar_decompose(W, B)) s += c * T.get(m);
  return s == qcrystal_char(W, B);
}

struct TensorWalk {
  Walk left, right, product;
};

inline std::vector<TensorWalk> tensor_qcrystal(const AffineWeyl& W, const std::vector<Walk>& B1,
                                               const std::vector<Walk>& B2) {
  std::vector<TensorWalk> out;
  for (auto& p1 : B1)
    for (auto& p2 : B2) out.push_back({p1, p2, walk_tensor(W, p1, p2)});
  return out;
}

// Folds of the right factor's portion of p1 (x) p2 on the linear simple walls.
inline int tensor_tail_count(const AffineWeyl& W, const TensorWalk& t) {
  const RootDatum& R = W.datum();
  auto al = walk_alcoves(W, t.product);
  std::size_t from = t.product.steps.size() - t.right.steps.size();
  int c = 0;
  for (std::size_t k = from; k < t.product.steps.size(); ++k) {
    const Step& s = t.product.steps[k];
    if (s.kind != StepKind::fold) continue;
    Hyperplane h = wall_hyperplane(W, al[k], s.label);
    if (h.level == 0)
      for (int j = 0; j < R.rank(); ++j)
        if (h.root == R.simple_index(j)) ++c;
  }
  return c;
}

// char(B1 (x) B2) taken over pairs: sum of the products of the factor weights.
inline GroupAlgElt tensor_char(const AffineWeyl& W, const std::vector<Walk>& B1, const std::vector<Walk>& B2) {
  return qcrystal_char(W, B1) * qcrystal_char(W, B2);
}

// Dominant tensor walks p1 (x) p2, each weighted by the weight of p1 times the weight of p2 with
// folds counted on the right factor's portion of the product walk.
inline Decomposition tensor_decompose(const AffineWeyl& W, const std::vector<Walk>& B1, const std::vector<Walk>& B2) {
  Decomposition out;
  for (auto& t : tensor_qcrystal(W, B1, B2)) {
    if (!is_dominant(W, t.product)) continue;
    WalkStats s1 = walk_stats(W, t.left);
    WalkStats s2 = walk_stats(W, t.right);
    out[s1.wt + s2.wt] += walk_weight(W, t.left, s1.c) * walk_weight(W, t.right, tensor_tail_count(W, t));
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// P_mu P_nu = sum_{p in B_q(p_nu), p_mu (x) p dominant} q^{-(l(iota)+l(phi)-f)} (1-q^{-2})^{f-c} P_{mu+wt(p)}
inline Decomposition hl_product(const AffineWeyl& W, const Weight& mu, const Weight& nu) {
  if (!mu.dominant() || !nu.dominant()) throw usage_error("hl_product: weights must be dominant");
  Walk pm = min_walk(W, W.translation(mu));
  return tensor_decompose(W, {pm}, qcrystal_walks(W, nu));
}
inline Decomposition hl_product_direct(const AffineWeyl& W, const Weight& mu, const Weight& nu) {
  HLTable T(W);
  return T.expand(T.get(mu) * T.get(nu));
}

// P_lambda = sum_{p in B_q(p_lambda), p in C_J - rho_J} q^{-(l(iota)+l(phi)-f)} (1-q^{-2})^{f-c_J} P^J_{wt(p)}
inline Decomposition hl_restrict(const AffineWeyl& W, const Weight& l, const std::vector<int>& J) {
  if (!l.dominant()) throw usage_error("hl_restrict: weight " + l.str() + " is not dominant");
  Decomposition out;
  for (auto& p : qcrystal_walks(W, l))
    if (is_dominant(W, p, J)) {
      WalkStats st = walk_stats(W, p, J);
      out[st.wt] += walk_weight(W, p, st.c);
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}
inline Decomposition hl_restrict_direct(const AffineWeyl& W, const Weight& l, const std::vector<int>& J) {
  HLTable T(W, J);
  return T.expand(hall_littlewood_walks(W, l));
}

}  // namespace alcove
