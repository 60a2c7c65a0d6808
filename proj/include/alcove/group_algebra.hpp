#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "root_data.hpp"

namespace alcove {

// Finite sums  sum_mu c_mu X^mu  with coefficients in C (int64 or LaurentPoly).
template <class C>
class GroupAlg {
 public:
  GroupAlg() = default;
  static GroupAlg monomial(const Weight& mu, C c = C(1)) {
    GroupAlg f;
    f.add_term(mu, c);
    return f;
  }

  const std::map<Weight, C>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  C coeff(const Weight& mu) const {
    auto it = t_.find(mu);
    return it == t_.end() ? C(0) : it->second;
  }

  void add_term(const Weight& mu, const C& c) {
    if (c == C(0)) return;
    auto [it, ins] = t_.try_emplace(mu, c);
    if (!ins) {
      it->second += c;
      if (it->second == C(0)) t_.erase(it);
    }
  }

  GroupAlg& operator+=(const GroupAlg& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  GroupAlg& operator-=(const GroupAlg& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend GroupAlg operator+(GroupAlg a, const GroupAlg& b) { return a += b; }
  friend GroupAlg operator-(GroupAlg a, const GroupAlg& b) { return a -= b; }
  friend GroupAlg operator-(const GroupAlg& a) {
    GroupAlg r;
    for (auto& [m, c] : a.t_) r.t_.emplace(m, -c);
    return r;
  }
  friend GroupAlg operator*(const GroupAlg& a, const GroupAlg& b) {
    GroupAlg r;
    for (auto& [m1, c1] : a.t_)
      for (auto& [m2, c2] : b.t_) r.add_term(m1 + m2, c1 * c2);
    return r;
  }
  friend GroupAlg operator*(const C& k, const GroupAlg& a) {
    GroupAlg r;
    for (auto& [m, c] : a.t_) r.add_term(m, k * c);
    return r;
  }
  friend bool operator==(const GroupAlg& a, const GroupAlg& b) { return a.t_ == b.t_; }
  friend bool operator!=(const GroupAlg& a, const GroupAlg& b) { return !(a == b); }

  // X^mu * f
  GroupAlg shift(const Weight& mu) const {
    GroupAlg r;
    for (auto& [m, c] : t_) r.t_.emplace(m + mu, c);
    return r;
  }
  GroupAlg act(const WeylElt& w) const {
    GroupAlg r;
    for (auto& [m, c] : t_) r.add_term(w.act(m), c);
    return r;
  }
  GroupAlg reflect(const RootDatum& R, int i) const {
    GroupAlg r;
    for (auto& [m, c] : t_) r.add_term(R.reflect(m, i), c);
    return r;
  }
  bool is_invariant(const RootDatum& R) const {
    for (int i = 0; i < R.rank(); ++i)
      if (reflect(R, i) != *this) return false;
    return true;
  }
  // coefficients on dominant weights only
  std::map<Weight, C> dominant_part() const {
    std::map<Weight, C> r;
    for (auto& [m, c] : t_)
      if (m.dominant()) r.emplace(m, c);
    return r;
  }

 private:
  std::map<Weight, C> t_;
};

using GroupAlgElt = GroupAlg<LaurentPoly>;
using IntGroupAlgElt = GroupAlg<std::int64_t>;

inline GroupAlgElt to_laurent(const IntGroupAlgElt& f) {
  GroupAlgElt r;
  for (auto& [m, c] : f.terms()) r.add_term(m, LaurentPoly(c));
  return r;
}

// Substitute t = q^{-2} := tv in a coefficient that is a polynomial in q^{-2}.
inline std::int64_t eval_at_t(const LaurentPoly& p, std::int64_t tv) {
  LaurentPoly pt = p.in_power(-2);
  if (pt.min_exp() < 0) throw invariant_error("coefficient is not a polynomial in q^-2");
  return pt.eval(tv);
}
inline IntGroupAlgElt eval_at_t(const GroupAlgElt& f, std::int64_t tv) {
  IntGroupAlgElt r;
  for (auto& [m, c] : f.terms()) r.add_term(m, eval_at_t(c, tv));
  return r;
}

inline IntGroupAlgElt orbit_sum(const RootDatum& R, const Weight& l) {
  IntGroupAlgElt r;
  for (auto& g : R.orbit(l)) r.add_term(g, 1);
  return r;
}

// Sum of the simple-root coordinates of l, scaled by a common denominator.
inline long long weight_height(const RootDatum& R, const Weight& l) {
  long long s = 0;
  for (int i = 0; i < R.rank(); ++i)
    for (int j = 0; j < R.rank(); ++j) s += R.inverse_cartan_num(i, j) * l.c[j];
  return s;
}
// Total order refining dominance: height, then lex.
struct HeightLess {
  const RootDatum* R;
  bool operator()(const Weight& a, const Weight& b) const {
    long long ha = weight_height(*R, a), hb = weight_height(*R, b);
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

// Exact quotient f / d by leading-term elimination in the height order.
// The leading coefficient of d must be +-1; a nonzero remainder throws.
template <class C>
GroupAlg<C> divide_exact(const GroupAlg<C>& f, const GroupAlg<C>& d, const RootDatum& R) {
  if (d.is_zero()) throw invariant_error("division by zero element");
  HeightLess less{&R};
  auto top = [&](const GroupAlg<C>& x) {
    auto it = x.terms().begin();
    for (auto jt = x.terms().begin(); jt != x.terms().end(); ++jt)
      if (less(it->first, jt->first)) it = jt;
    return it;
  };
  auto bottom_height = [&](const GroupAlg<C>& x) {
    long long h = weight_height(R, x.terms().begin()->first);
    for (auto& [m, c] : x.terms()) h = std::min(h, weight_height(R, m));
    return h;
  };
  auto dl = top(d);
  Weight dlead = dl->first;
  C dc = dl->second;
  if (!(dc == C(1)) && !(dc == C(-1))) throw invariant_error("divisor leading coefficient is not a unit");
  GroupAlg<C> rem = f, quo;
  if (rem.is_zero()) return quo;
  long long floor_h = bottom_height(f) - bottom_height(d);
  while (!rem.is_zero()) {
    auto it = top(rem);
    Weight m = it->first - dlead;
    if (weight_height(R, m) < floor_h) throw invariant_error("inexact division in the group algebra");
    C c = dc == C(1) ? it->second : -it->second;
    quo.add_term(m, c);
    rem -= GroupAlg<C>::monomial(m, c) * d;
  }
  return quo;
}

// Positive roots supported on J.
inline std::vector<int> levi_positive_roots(const RootDatum& R, const std::vector<int>& J) {
  std::vector<int> out;
  for (int k = 0; k < R.num_pos_roots(); ++k) {
    bool in = true;
    for (int i = 0; i < R.rank(); ++i)
      if (R.pos_roots()[k].simple[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) in = false;
    if (in) out.push_back(k);
  }
  return out;
}

// 1 - X^{-alpha}
template <class C>
GroupAlg<C> one_minus_neg(const Weight& alpha) {
  return GroupAlg<C>::monomial(alpha - alpha, C(1)) - GroupAlg<C>::monomial(-alpha, C(1));
}

}  // namespace alcove
