#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alcove {

// Raised when an identity that must hold exactly fails (remainder, oracle mismatch).
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised on malformed input (bad rank, non-dominant weight, ...).
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sparse Laurent polynomial in one variable with integer coefficients.
class LaurentPoly {
 public:
  using coef_t = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(coef_t c) {  // NOLINT: implicit constant
    if (c != 0) t_[0] = c;
  }

  static LaurentPoly monomial(int e, coef_t c = 1) {
    LaurentPoly p;
    if (c != 0) p.t_[e] = c;
    return p;
  }
  // q - q^{-1}
  static LaurentPoly q_minus_qinv() { return monomial(1) - monomial(-1); }

  bool is_zero() const { return t_.empty(); }
  const std::map<int, coef_t>& terms() const { return t_; }
  coef_t coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? 0 : it->second;
  }
  int min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
  int max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.t_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [e1, c1] : a.t_)
      for (auto& [e2, c2] : b.t_) {
        coef_t m;
        if (__builtin_mul_overflow(c1, c2, &m)) throw std::overflow_error("Laurent coefficient overflow");
        r.add_term(e1 + e2, m);
      }
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  void add_term(int e, coef_t c) {
    if (c == 0) return;
    auto [it, ins] = t_.try_emplace(e, c);
    if (!ins) {
      if (__builtin_add_overflow(it->second, c, &it->second)) throw std::overflow_error("Laurent coefficient overflow");
      if (it->second == 0) t_.erase(it);
    }
  }

  // x -> x^k
  LaurentPoly subs_pow(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : t_) r.add_term(e * k, c);
    return r;
  }
  LaurentPoly shift(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }
  coef_t eval(coef_t x) const {
    coef_t s = 0;
    for (auto& [e, c] : t_) {
      if (e < 0 && x != 1 && x != -1) throw usage_error("eval: negative exponent at non-unit");
      coef_t p = 1;
      int k = e < 0 ? -e : e;
      for (int i = 0; i < k; ++i) p *= x;
      s += c * p;
    }
    return s;
  }

  // Only exponents that are multiples of k, divided by k. Throws if any other exponent occurs.
  LaurentPoly in_power(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : t_) {
      if (e % k != 0) throw invariant_error("not a polynomial in q^" + std::to_string(k));
      r.t_[e / k] = c;
    }
    return r;
  }

  // Exact division; throws invariant_error on a nonzero remainder.
  LaurentPoly divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw invariant_error("division by zero polynomial");
    LaurentPoly rem = *this, quo;
    int dl = d.max_exp();
    coef_t dc = d.t_.rbegin()->second;
    while (!rem.is_zero()) {
      int e = rem.max_exp();
      coef_t c = rem.t_.rbegin()->second;
      if (c % dc != 0 || e - dl < rem.min_exp() - d.min_exp())
        throw invariant_error("inexact Laurent division");
      LaurentPoly m = monomial(e - dl, c / dc);
      quo += m;
      rem -= m * d;
    }
    return quo;
  }

  std::string str(const char* var = "q") const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      auto [e, c] = *it;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      coef_t a = c < 0 ? -c : c;
      if (e == 0) { os << a; continue; }
      if (a != 1) os << a << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  std::map<int, coef_t> t_;
};

inline LaurentPoly pow(const LaurentPoly& p, int k) {
  LaurentPoly r(1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

// t = q^{-2}
inline LaurentPoly t_poly(int k = 1) { return LaurentPoly::monomial(-2 * k); }
inline LaurentPoly one_minus_t() { return LaurentPoly(1) - t_poly(); }

}  // namespace alcove
