#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "group_algebra.hpp"

namespace alcove {

// a_lambda = sum_w det(w) X^{w lambda}
inline IntGroupAlgElt alternating_sum(const RootDatum& R, const Weight& l) {
  IntGroupAlgElt r;
  for (auto& w : R.weyl_group()) r.add_term(w.act(l), R.det(w));
  return r;
}

// s_lambda = a_{lambda+rho} / a_rho
inline IntGroupAlgElt schur(const RootDatum& R, const Weight& l) {
  if (!l.dominant()) throw usage_error("schur: weight " + l.str() + " is not dominant");
  IntGroupAlgElt s = divide_exact(alternating_sum(R, l + R.rho()), alternating_sum(R, R.rho()), R);
  if (s.coeff(l) != 1) throw invariant_error("s_lambda: coefficient of X^lambda is not 1");
  if (!s.is_invariant(R)) throw invariant_error("s_lambda is not W-invariant");
  return s;
}

// p(gamma): number of ways to write gamma as an N-combination of positive roots.
class KostantTable {
 public:
  explicit KostantTable(const RootDatum& R) : R_(R) {}

  std::int64_t operator()(const Weight& g) {
    auto c = R_.to_simple(g);
    if (!c) return 0;
    for (int x : *c)
      if (x < 0) return 0;
    std::lock_guard<std::mutex> lk(m_);
    return count(*c, 0);
  }

 private:
  std::int64_t count(const std::vector<int>& g, int k) {
    if (k == R_.num_pos_roots()) {
      for (int x : g)
        if (x != 0) return 0;
      return 1;
    }
    auto key = std::make_pair(g, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto& a = R_.pos_roots()[k].simple;
    std::int64_t s = 0;
    std::vector<int> h = g;
    while (true) {
      s += count(h, k + 1);
      bool ok = true;
      for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] -= a[i];
        if (h[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo_.emplace(key, s);
    return s;
  }

  const RootDatum& R_;
  std::mutex m_;
  std::map<std::pair<std::vector<int>, int>, std::int64_t> memo_;
};

inline std::int64_t kostant_partition(const RootDatum& R, const Weight& g) {
  KostantTable p(R);
  return p(g);
}

// K_{lambda mu} = sum_w det(w) p(w(lambda+rho) - (mu+rho))
inline std::int64_t weight_mult(const RootDatum& R, const Weight& l, const Weight& mu, KostantTable& p) {
  if (!l.dominant()) throw usage_error("weight_mult: weight " + l.str() + " is not dominant");
  std::int64_t s = 0;
  Weight lr = l + R.rho(), mr = mu + R.rho();
  for (auto& w : R.weyl_group()) s += R.det(w) * p(w.act(lr) - mr);
  return s;
}
inline std::int64_t weight_mult(const RootDatum& R, const Weight& l, const Weight& mu) {
  KostantTable p(R);
  return weight_mult(R, l, mu, p);
}

// c^lambda_{mu nu} = sum_{v,w} det(vw) p(v(mu+rho) + w(nu+rho) - (lambda+rho) - rho)
inline std::int64_t tensor_mult(const RootDatum& R, const Weight& mu, const Weight& nu, const Weight& l,
                                KostantTable& p) {
  if (!mu.dominant() || !nu.dominant() || !l.dominant()) throw usage_error("tensor_mult: weights must be dominant");
  std::int64_t s = 0;
  Weight mr = mu + R.rho(), nr = nu + R.rho(), base = l + R.rho() + R.rho();
  for (auto& v : R.weyl_group()) {
    Weight a = v.act(mr) - base;
    for (auto& w : R.weyl_group()) s += R.det(v) * R.det(w) * p(a + w.act(nr));
  }
  return s;
}
inline std::int64_t tensor_mult(const RootDatum& R, const Weight& mu, const Weight& nu, const Weight& l) {
  KostantTable p(R);
  return tensor_mult(R, mu, nu, l, p);
}

// f = sum eta^lambda s_lambda with eta^lambda = sum_w det(w) f_{lambda+rho-w rho}
inline std::map<Weight, std::int64_t> expand_in_schur(const RootDatum& R, const IntGroupAlgElt& f) {
  if (!f.is_invariant(R)) throw usage_error("expand_in_schur: input is not W-invariant");
  std::set<Weight> cand;
  for (auto& [m, c] : f.terms())
    for (auto& w : R.weyl_group()) {
      Weight l = m - R.rho() + w.act(R.rho());
      if (l.dominant()) cand.insert(l);
    }
  std::map<Weight, std::int64_t> out;
  for (auto& l : cand) {
    std::int64_t eta = 0;
    for (auto& w : R.weyl_group()) eta += R.det(w) * f.coeff(l + R.rho() - w.act(R.rho()));
    if (eta != 0) out.emplace(l, eta);
  }
  IntGroupAlgElt back;
  for (auto& [l, c] : out) back += IntGroupAlgElt::monomial(R.zero(), c) * schur(R, l);
  if (back != f) throw invariant_error("expansion in Weyl characters does not reconstruct the input");
  return out;
}

inline std::int64_t dim_classical(const RootDatum& R, const Weight& l) {
  if (!l.dominant()) throw usage_error("dims: weight " + l.str() + " is not dominant");
  std::int64_t num = 1, den = 1;
  for (int k = 0; k < R.num_pos_roots(); ++k) {
    num *= R.pair(l + R.rho(), k);
    den *= R.pair(R.rho(), k);
    std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw invariant_error("dimension formula is not an integer");
  return num;
}

// [k] = (q^k - 1)/(q - 1)
inline LaurentPoly quantum_int(int k) {
  if (k < 1) throw invariant_error("quantum integer [k] with k < 1");
  LaurentPoly p;
  for (int i = 0; i < k; ++i) p.add_term(i, 1);
  return p;
}

inline LaurentPoly dim_quantum(const RootDatum& R, const Weight& l) {
  if (!l.dominant()) throw usage_error("dims: weight " + l.str() + " is not dominant");
  LaurentPoly num(1), den(1);
  for (int k = 0; k < R.num_pos_roots(); ++k) {
    num *= quantum_int(R.pair(l + R.rho(), k));
    den *= quantum_int(R.pair(R.rho(), k));
  }
  LaurentPoly d = num.divide_exact(den);
  if (d.eval(1) != dim_classical(R, l)) throw invariant_error("quantum dimension at q=1 differs from the dimension");
  return d;
}

// s^J_lambda = sum_{w in W_J} w( X^lambda / prod_{alpha in R_J^+} (1 - X^{-alpha}) )
inline IntGroupAlgElt levi_schur(const RootDatum& R, const Weight& l, const std::vector<int>& J) {
  for (int j : J)
    if (l.c[j] < 0) throw usage_error("levi_schur: weight " + l.str() + " is not dominant for the Levi");
  auto roots = levi_positive_roots(R, J);
  Weight two_rho = R.zero();
  for (int k : roots) two_rho += R.pos_roots()[k].weight;
  IntGroupAlgElt num;
  for (auto& w : R.parabolic(J)) {
    Weight d = two_rho - w.act(two_rho);
    for (int i = 0; i < R.rank(); ++i) d.c[i] /= 2;
    num.add_term(w.act(l) - d, R.det(w));
  }
  for (int k : roots) num = divide_exact(num, one_minus_neg<std::int64_t>(R.pos_roots()[k].weight), R);
  if (num.coeff(l) != 1) throw invariant_error("s^J_lambda: coefficient of X^lambda is not 1");
  return num;
}

// s_lambda = sum_nu c^lambda_{J,nu} s^J_nu
inline std::map<Weight, std::int64_t> branch(const RootDatum& R, const Weight& l, const std::vector<int>& J) {
  IntGroupAlgElt f = schur(R, l);
  HeightLess less{&R};
  std::map<Weight, std::int64_t> out;
  auto jdom = [&](const Weight& m) {
    for (int j : J)
      if (m.c[j] < 0) return false;
    return true;
  };
  while (!f.is_zero()) {
    const Weight* best = nullptr;
    for (auto& [m, c] : f.terms())
      if (jdom(m) && (!best || less(*best, m))) best = &m;
    if (!best) throw invariant_error("branching: remainder has no Levi-dominant term");
    Weight b = *best;
    std::int64_t c = f.coeff(b);
    if (c < 0) throw invariant_error("branching: negative multiplicity");
    out[b] = c;
    f -= IntGroupAlgElt::monomial(R.zero(), c) * levi_schur(R, b, J);
  }
  return out;
}

inline std::int64_t levi_dim(const RootDatum& R, const Weight& l, const std::vector<int>& J) {
  std::int64_t s = 0;
  for (auto& [m, c] : levi_schur(R, l, J).terms()) s += c;
  return s;
}

}  // namespace alcove
