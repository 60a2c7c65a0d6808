#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "root_data.hpp"

namespace alcove {

// t_trans * fin, acting on h* by x -> trans + fin(x).
struct ExtAffElt {
  Weight trans;
  WeylElt fin;

  friend bool operator==(const ExtAffElt& a, const ExtAffElt& b) { return a.trans == b.trans && a.fin == b.fin; }
  friend bool operator!=(const ExtAffElt& a, const ExtAffElt& b) { return !(a == b); }
  friend bool operator<(const ExtAffElt& a, const ExtAffElt& b) {
    if (a.trans != b.trans) return a.trans < b.trans;
    return a.fin < b.fin;
  }
};

// g * s_{letters[0]} * s_{letters[1]} * ...
struct AffineWord {
  int omega = 0;  // index into AffineWeyl::omega_group()
  std::vector<int> letters;
};

class AffineWeyl {
 public:
  explicit AffineWeyl(RootDatum R) : R_(std::move(R)) {
    const Root& ph = R_.phi();
    s0_ = {ph.weight, R_.reflection(R_.phi_index())};
    build_omega();
  }

  const RootDatum& datum() const { return R_; }
  int rank() const { return R_.rank(); }

  ExtAffElt identity() const { return {R_.zero(), R_.identity()}; }
  ExtAffElt translation(const Weight& l) const { return {l, R_.identity()}; }
  ExtAffElt finite(const WeylElt& w) const { return {R_.zero(), w}; }
  // s_0 for i = 0, s_i (finite) for 1..n; labels are 0..n with finite i stored as i-1.
  ExtAffElt s(int label) const { return label == 0 ? s0_ : finite(R_.s(label - 1)); }

  ExtAffElt mult(const ExtAffElt& a, const ExtAffElt& b) const { return {a.trans + a.fin.act(b.trans), a.fin * b.fin}; }
  ExtAffElt inv(const ExtAffElt& a) const {
    WeylElt wi = R_.inverse(a.fin);
    return {-wi.act(a.trans), wi};
  }

  // Closed-form length.
  int length(const ExtAffElt& a) const {
    Weight wr = a.fin.act(R_.rho());
    int l = 0;
    for (int k = 0; k < R_.num_pos_roots(); ++k) {
      int m = R_.pair(a.trans, k);
      // w^{-1} alpha > 0  iff  <w rho, alpha^vee> > 0
      if (R_.pair(wr, k) > 0) l += std::abs(m);
      else l += std::abs(m - 1);
    }
    return l;
  }

  // Hyperplane count between A and aA using the rational sample point rho/h of A.
  int length_oracle(const ExtAffElt& a) const {
    int h = R_.pair(R_.rho(), R_.phi_index()) + 1;
    Weight num = h * a.trans + a.fin.act(R_.rho());
    int l = 0;
    for (int k = 0; k < R_.num_pos_roots(); ++k) {
      int x = R_.pair(R_.rho(), k), y = R_.pair(num, k);
      if (x % h == 0 || y % h == 0) throw invariant_error("sample point lies on a hyperplane");
      l += std::abs(floor_div(std::max(x, y), h) - floor_div(std::min(x, y), h));
    }
    return l;
  }

  // Peels right descents, smallest label first (or largest first).
  AffineWord reduced_expression(ExtAffElt a, bool largest_first = false) const {
    std::vector<int> rev;
    int l = length(a);
    while (l > 0) {
      bool found = false;
      for (int k = 0; k <= rank(); ++k) {
        int i = largest_first ? rank() - k : k;
        ExtAffElt b = mult(a, s(i));
        int lb = length(b);
        if (lb < l) {
          a = b;
          l = lb;
          rev.push_back(i);
          found = true;
          break;
        }
      }
      if (!found) throw invariant_error("no right descent for element of positive length");
    }
    AffineWord w;
    w.omega = omega_index(a);
    w.letters.assign(rev.rbegin(), rev.rend());
    return w;
  }

  ExtAffElt word_to_elt(const AffineWord& w) const {
    ExtAffElt a = omega_[w.omega];
    for (int i : w.letters) a = mult(a, s(i));
    return a;
  }

  const std::vector<ExtAffElt>& omega_group() const { return omega_; }
  // g s_i g^{-1} = s_{perm(g)[i]}
  const std::vector<int>& omega_perm(int g) const { return perm_[g]; }
  int omega_index(const ExtAffElt& g) const {
    for (std::size_t k = 0; k < omega_.size(); ++k)
      if (omega_[k] == g) return static_cast<int>(k);
    throw invariant_error("element of length 0 outside the computed Omega");
  }

  // The double coset W t_l W, as {(mu, w) : mu in W l, w in W}.
  std::vector<ExtAffElt> double_coset(const Weight& l) const {
    std::vector<ExtAffElt> out;
    for (auto& mu : R_.orbit(l))
      for (auto& w : R_.weyl_group()) out.push_back({mu, w});
    return out;
  }

  // (m_l, n_l): the unique elements of minimal and maximal length in W t_l W.
  std::pair<ExtAffElt, ExtAffElt> double_coset_extremes(const Weight& l) const {
    if (!l.dominant()) throw usage_error("double_coset_extremes: weight " + l.str() + " is not dominant");
    auto dc = double_coset(l);
    int lo = 1 << 30, hi = -1, nlo = 0, nhi = 0;
    ExtAffElt m, n;
    for (auto& x : dc) {
      int k = length(x);
      if (k < lo) lo = k, m = x, nlo = 0;
      if (k == lo) ++nlo;
      if (k > hi) hi = k, n = x, nhi = 0;
      if (k == hi) ++nhi;
    }
    if (nlo != 1 || nhi != 1) throw invariant_error("double coset extremes are not unique");
    if (hi != R_.length(R_.longest()) + length(translation(l)))
      throw invariant_error("l(n_lambda) != l(w0) + l(t_lambda)");
    return {m, n};
  }

 private:
  static int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

  void build_omega() {
    omega_.push_back(identity());
    auto add = [&](const ExtAffElt& g) {
      if (std::find(omega_.begin(), omega_.end(), g) == omega_.end()) omega_.push_back(g);
    };
    // strip the s_i letters off each t_{omega_i}
    for (int i = 0; i < rank(); ++i) {
      ExtAffElt a = translation(R_.omega(i));
      int l = length(a);
      while (l > 0) {
        for (int j = 0; j <= rank(); ++j) {
          ExtAffElt b = mult(a, s(j));
          if (length(b) < l) {
            a = b;
            --l;
            break;
          }
        }
      }
      add(a);
    }
    for (std::size_t k = 0; k < omega_.size(); ++k)
      for (std::size_t j = 0; j < omega_.size(); ++j) {
        ExtAffElt p = mult(omega_[k], omega_[j]);
        if (length(p) != 0) throw invariant_error("product of length-0 elements has positive length");
        add(p);
      }
    for (auto& g : omega_) {
      std::vector<int> pm(rank() + 1, -1);
      ExtAffElt gi = inv(g);
      for (int i = 0; i <= rank(); ++i) {
        ExtAffElt c = mult(mult(g, s(i)), gi);
        for (int j = 0; j <= rank(); ++j)
          if (s(j) == c) pm[i] = j;
        if (pm[i] < 0) throw invariant_error("Omega conjugation does not permute generators");
      }
      perm_.push_back(pm);
    }
  }

  RootDatum R_;
  ExtAffElt s0_;
  std::vector<ExtAffElt> omega_;
  std::vector<std::vector<int>> perm_;
};

}  // namespace alcove
