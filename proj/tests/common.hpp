#pragma once

#include <functional>
#include <random>
#include <vector>

#include "alcove/alcove.hpp"

namespace testutil {

using namespace alcove;

// All weights with coordinates in [lo, hi].
inline std::vector<Weight> box(int rank, int lo, int hi) {
  std::vector<Weight> out;
  std::vector<int> v;
  std::function<void(int)> rec = [&](int k) {
    if (k == rank) {
      out.push_back(Weight::from(v));
      return;
    }
    for (int a = lo; a <= hi; ++a) {
      v.push_back(a);
      rec(k + 1);
      v.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::vector<Weight> dominant_box(int rank, int hi) { return box(rank, 0, hi); }

// Partitions of k with at most n parts.
inline std::vector<Partition> partitions(int k, int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == n) return;
    for (int a = std::min(rem, mx); a >= 1; --a) {
      cur.push_back(a);
      rec(rem - a, a);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

// Random element of Z[q,q^-1][P] with small support.
inline GroupAlgElt random_element(const RootDatum& R, std::mt19937& g, int terms = 4, int range = 2) {
  std::uniform_int_distribution<int> coord(-range, range), coef(-3, 3), ex(-2, 2);
  GroupAlgElt f;
  for (int k = 0; k < terms; ++k) {
    Weight m(R.rank());
    for (int i = 0; i < R.rank(); ++i) m.c[i] = coord(g);
    LaurentPoly c;
    c.add_term(ex(g), coef(g));
    c.add_term(0, coef(g));
    f.add_term(m, c);
  }
  return f;
}

}  // namespace testutil
