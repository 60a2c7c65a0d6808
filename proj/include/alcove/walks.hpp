#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "affine_weyl.hpp"
#include "parallel.hpp"

namespace alcove {

enum class StepKind : std::uint8_t { cross, fold, omega };

// Wall label 0..n for crossings and folds; for omega steps, an index into the Omega group.
struct Step {
  int label = 0;
  StepKind kind = StepKind::cross;
  int sign = 0;  // +1 / -1; 0 for omega steps

  friend bool operator==(const Step& a, const Step& b) {
    return a.label == b.label && a.kind == b.kind && a.sign == b.sign;
  }
  friend bool operator<(const Step& a, const Step& b) {
    if (a.label != b.label) return a.label < b.label;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.sign < b.sign;
  }
};

struct Walk {
  ExtAffElt start;
  std::vector<Step> steps;

  friend bool operator==(const Walk& a, const Walk& b) { return a.start == b.start && a.steps == b.steps; }
  friend bool operator!=(const Walk& a, const Walk& b) { return !(a == b); }
  friend bool operator<(const Walk& a, const Walk& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.steps < b.steps;
  }
};

struct SignedWalkTerm {
  Walk walk;
  int sign = 1;
};

struct WalkStats {
  Weight wt;
  WeylElt iota, phi;
  int f_plus = 0, f_minus = 0, c = 0;
  ExtAffElt end;
  int folds() const { return f_plus + f_minus; }
};

// H_{alpha, level} with alpha a positive root (index into pos_roots).
struct Hyperplane {
  int root = 0;
  int level = 0;
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.root == b.root && a.level == b.level; }
};

inline Hyperplane wall_hyperplane(const AffineWeyl& W, const ExtAffElt& v, int label) {
  const RootDatum& R = W.datum();
  const Root& base = label == 0 ? R.phi() : R.pos_roots()[R.simple_index(label - 1)];
  int k = R.root_lookup(v.fin.act(base.weight));
  if (k == 0) throw invariant_error("wall normal is not a root");
  int r = (k > 0 ? k : -k) - 1;
  int lev = R.pair(v.trans, r) * (k > 0 ? 1 : -1) + (label == 0 ? 1 : 0);
  return {r, k > 0 ? lev : -lev};
}

// +1 when crossing wall `label` out of vA goes from the negative to the positive side.
inline int crossing_sign(const AffineWeyl& W, const ExtAffElt& v, int label) {
  const RootDatum& R = W.datum();
  const Root& base = label == 0 ? R.phi() : R.pos_roots()[R.simple_index(label - 1)];
  int k = R.root_lookup(v.fin.act(base.weight));
  if (k == 0) throw invariant_error("wall normal is not a root");
  if (label == 0) return k > 0 ? 1 : -1;
  return k > 0 ? -1 : 1;
}

inline ExtAffElt step_alcove(const AffineWeyl& W, const ExtAffElt& v, const Step& s) {
  switch (s.kind) {
    case StepKind::cross: return W.mult(v, W.s(s.label));
    case StepKind::fold: return v;
    case StepKind::omega: return W.mult(v, W.omega_group()[s.label]);
  }
  return v;
}

// Alcoves visited: entry k is the alcove before step k; the last entry is the end.
inline std::vector<ExtAffElt> walk_alcoves(const AffineWeyl& W, const Walk& p) {
  std::vector<ExtAffElt> out{p.start};
  for (auto& s : p.steps) out.push_back(step_alcove(W, out.back(), s));
  return out;
}

// Recompute all recorded signs from the orientation.
inline Walk normalize(const AffineWeyl& W, Walk p) {
  ExtAffElt v = p.start;
  for (auto& s : p.steps) {
    if (s.kind == StepKind::cross) s.sign = crossing_sign(W, v, s.label);
    else if (s.kind == StepKind::fold) s.sign = -crossing_sign(W, v, s.label);
    else s.sign = 0;
    v = step_alcove(W, v, s);
  }
  return p;
}

inline bool signs_consistent(const AffineWeyl& W, const Walk& p) { return normalize(W, p) == p; }

inline bool positively_folded(const AffineWeyl& W, const Walk& p) {
  Walk n = normalize(W, p);
  for (auto& s : n.steps)
    if (s.kind == StepKind::fold && s.sign < 0) return false;
  return true;
}

// Counted folds: those on H_{alpha_j, 0}, j in J (0-based finite indices).
inline WalkStats walk_stats(const AffineWeyl& W, const Walk& p, const std::vector<int>& J) {
  const RootDatum& R = W.datum();
  WalkStats st;
  ExtAffElt v = p.start;
  for (auto& s : p.steps) {
    if (s.kind == StepKind::fold) {
      int sg = -crossing_sign(W, v, s.label);
      (sg > 0 ? st.f_plus : st.f_minus)++;
      Hyperplane h = wall_hyperplane(W, v, s.label);
      if (h.level == 0)
        for (int j : J)
          if (h.root == R.simple_index(j)) ++st.c;
    }
    v = step_alcove(W, v, s);
  }
  st.end = v;
  st.wt = v.trans;
  st.phi = v.fin;
  st.iota = p.start.fin;
  return st;
}
inline WalkStats walk_stats(const AffineWeyl& W, const Walk& p) {
  return walk_stats(W, p, W.datum().all_indices());
}

inline Walk min_walk(const AffineWeyl& W, const ExtAffElt& target) {
  AffineWord rw = W.reduced_expression(target);
  Walk p{W.identity(), {}};
  if (rw.omega != 0) p.steps.push_back({rw.omega, StepKind::omega, 0});
  for (int i : rw.letters) p.steps.push_back({i, StepKind::cross, 0});
  return normalize(W, p);
}

// Walk from A along a reduced word of w using negative crossings.
inline Walk finite_walk(const AffineWeyl& W, const WeylElt& w) {
  Walk p{W.identity(), {}};
  for (int i : W.datum().word(w)) p.steps.push_back({i + 1, StepKind::cross, 0});
  return normalize(W, p);
}

// Straighten the product (prefix) * (type_seq) into genuine walks.
// Entries of type_seq with kind omega are copied; the others carry an intended sign.
inline std::vector<SignedWalkTerm> expand(const AffineWeyl& W, const Walk& prefix, const std::vector<Step>& type_seq) {
  std::vector<SignedWalkTerm> out;
  ExtAffElt v0 = walk_alcoves(W, prefix).back();
  Walk cur = prefix;
  std::function<void(std::size_t, const ExtAffElt&, int)> rec = [&](std::size_t k, const ExtAffElt& v, int sg) {
    if (k == type_seq.size()) {
      out.push_back({cur, sg});
      return;
    }
    const Step& t = type_seq[k];
    if (t.kind == StepKind::omega) {
      cur.steps.push_back(t);
      rec(k + 1, step_alcove(W, v, t), sg);
      cur.steps.pop_back();
      return;
    }
    int g = crossing_sign(W, v, t.label);
    Step c{t.label, StepKind::cross, g};
    cur.steps.push_back(c);
    rec(k + 1, step_alcove(W, v, c), sg);
    cur.steps.pop_back();
    if (g != t.sign) {
      Step f{t.label, StepKind::fold, t.sign};
      cur.steps.push_back(f);
      rec(k + 1, v, t.sign < 0 ? -sg : sg);
      cur.steps.pop_back();
    }
  };
  rec(0, v0, 1);
  return out;
}

// All positively folded walks of the given type starting at the alcoves wA, w in starts.
inline std::vector<Walk> enumerate_pos_folded(const AffineWeyl& W, const std::vector<Step>& type_seq,
                                              const std::vector<WeylElt>& starts) {
  auto parts = parallel_map<std::vector<Walk>>(starts.size(), [&](std::size_t idx) {
    std::vector<Walk> out;
    Walk cur{W.finite(starts[idx]), {}};
    std::function<void(std::size_t, const ExtAffElt&)> rec = [&](std::size_t k, const ExtAffElt& v) {
      if (k == type_seq.size()) {
        out.push_back(cur);
        return;
      }
      const Step& t = type_seq[k];
      if (t.kind == StepKind::omega) {
        cur.steps.push_back(t);
        rec(k + 1, step_alcove(W, v, t));
        cur.steps.pop_back();
        return;
      }
      int g = crossing_sign(W, v, t.label);
      Step c{t.label, StepKind::cross, g};
      cur.steps.push_back(c);
      rec(k + 1, step_alcove(W, v, c));
      cur.steps.pop_back();
      if (g < 0) {
        cur.steps.push_back({t.label, StepKind::fold, 1});
        rec(k + 1, v);
        cur.steps.pop_back();
      }
    };
    rec(0, cur.start);
    return out;
  });
  std::vector<Walk> out;
  for (auto& v : parts) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// B_q(p_lambda): positively folded walks of the type of min_walk(t_lambda) starting in W^lambda.
inline std::vector<Walk> qcrystal_walks(const AffineWeyl& W, const Weight& l) {
  const RootDatum& R = W.datum();
  Walk pl = min_walk(W, W.translation(l));
  return enumerate_pos_folded(W, pl.steps, R.min_coset_reps(l));
}

// ---- root operators ---------------------------------------------------------

// Contacts of p with hyperplanes parallel to H_{alpha_i} (i 0-based).
struct Contact {
  int step;   // index into p.steps
  char kind;  // 'U' up crossing, 'D' down crossing, 'F' fold
  int level;
};

inline std::vector<Contact> contacts(const AffineWeyl& W, const Walk& p, int i) {
  const RootDatum& R = W.datum();
  int ri = R.simple_index(i);
  std::vector<Contact> out;
  ExtAffElt v = p.start;
  for (int k = 0; k < static_cast<int>(p.steps.size()); ++k) {
    const Step& s = p.steps[k];
    if (s.kind != StepKind::omega) {
      Hyperplane h = wall_hyperplane(W, v, s.label);
      if (h.root == ri) {
        int g = crossing_sign(W, v, s.label);
        char kd = s.kind == StepKind::fold ? 'F' : (g > 0 ? 'U' : 'D');
        out.push_back({k, kd, h.level});
      }
    }
    v = step_alcove(W, v, s);
  }
  return out;
}

namespace detail {
inline Walk toggle(Walk p, int k) {
  auto& s = p.steps[k];
  s.kind = s.kind == StepKind::cross ? StepKind::fold : StepKind::cross;
  return p;
}
}  // namespace detail

// Lowering operator: weight goes down by alpha_i; nullopt when undefined.
inline std::optional<Walk> root_f(const AffineWeyl& W, int i, const Walk& p) {
  const RootDatum& R = W.datum();
  auto ev = contacts(W, p, i);
  int E = walk_stats(W, p).wt.c[i];
  std::vector<int> H{0};
  for (auto& e : ev) H.push_back(e.level);
  H.push_back(E);
  int N = static_cast<int>(H.size());
  int m = *std::min_element(H.begin(), H.end());
  if (E - m < 1) return std::nullopt;
  int t0 = N - 1;
  while (H[t0] != m) --t0;
  int t1 = t0 + 1;
  while (H[t1] != m + 1) ++t1;
  Walk q = p;
  if (t0 == 0) {
    if (m != 0) return std::nullopt;
    q.start = W.mult(W.finite(R.s(i)), q.start);
  } else {
    if (ev[t0 - 1].kind != 'F') return std::nullopt;
    q = detail::toggle(q, ev[t0 - 1].step);
  }
  if (t1 < N - 1) {
    if (ev[t1 - 1].kind != 'U') return std::nullopt;
    q = detail::toggle(q, ev[t1 - 1].step);
  }
  return normalize(W, q);
}

// Raising operator: weight goes up by alpha_i; nullopt when undefined.
inline std::optional<Walk> root_e(const AffineWeyl& W, int i, const Walk& p) {
  const RootDatum& R = W.datum();
  auto ev = contacts(W, p, i);
  int E = walk_stats(W, p).wt.c[i];
  std::vector<int> H{0};
  for (auto& e : ev) H.push_back(e.level);
  H.push_back(E);
  int N = static_cast<int>(H.size());
  int m = *std::min_element(H.begin(), H.end());
  if (m > -1) return std::nullopt;
  int t1 = 0;
  while (H[t1] != m) ++t1;
  int t0 = t1 - 1;
  while (H[t0] != m + 1) --t0;
  Walk q = p;
  if (t1 < N - 1) {
    if (ev[t1 - 1].kind != 'F') return std::nullopt;
    q = detail::toggle(q, ev[t1 - 1].step);
  }
  if (t0 == 0) {
    if (m != -1) return std::nullopt;
    q.start = W.mult(W.finite(R.s(i)), q.start);
  } else {
    if (ev[t0 - 1].kind != 'D') return std::nullopt;
    q = detail::toggle(q, ev[t0 - 1].step);
  }
  return normalize(W, q);
}

inline int d_plus(const AffineWeyl& W, int i, Walk p) {
  int k = 0;
  while (auto q = root_f(W, i, p)) p = *q, ++k;
  return k;
}
inline int d_minus(const AffineWeyl& W, int i, Walk p) {
  int k = 0;
  while (auto q = root_e(W, i, p)) p = *q, ++k;
  return k;
}

// p inside C - rho (J-version: only the walls alpha_j, j in J).
inline bool is_dominant(const AffineWeyl& W, const Walk& p, const std::vector<int>& J) {
  const RootDatum& R = W.datum();
  ExtAffElt v = p.start;
  auto ok = [&](const ExtAffElt& a) {
    Weight wr = a.fin.act(R.rho());
    for (int j : J) {
      int lo = a.trans.c[j] - (wr.c[j] < 0 ? 1 : 0);
      if (lo < -1) return false;
    }
    return true;
  };
  if (!ok(v)) return false;
  for (auto& s : p.steps) {
    if (s.kind == StepKind::fold) {
      Hyperplane h = wall_hyperplane(W, v, s.label);
      if (h.level == -1)
        for (int j : J)
          if (h.root == R.simple_index(j)) return false;
    }
    v = step_alcove(W, v, s);
    if (!ok(v)) return false;
  }
  return true;
}
inline bool is_dominant(const AffineWeyl& W, const Walk& p) { return is_dominant(W, p, W.datum().all_indices()); }

// p1 (x) p2: concatenation after repairing the gap between phi(p1) and iota(p2).
inline Walk walk_tensor(const AffineWeyl& W, const Walk& p1, const Walk& p2) {
  const RootDatum& R = W.datum();
  Walk p = normalize(W, p1);
  ExtAffElt end = walk_alcoves(W, p).back();
  WeylElt gap = R.inverse(end.fin) * p2.start.fin;
  for (int i : R.word(gap)) {
    int lab = i + 1;
    if (crossing_sign(W, end, lab) < 0) {
      p.steps.push_back({lab, StepKind::cross, -1});
    } else {
      Hyperplane h = wall_hyperplane(W, end, lab);
      auto al = walk_alcoves(W, p);
      int found = -1;
      for (int k = static_cast<int>(p.steps.size()) - 1; k >= 0 && found < 0; --k) {
        const Step& s = p.steps[k];
        if (s.kind == StepKind::cross && s.sign < 0 && wall_hyperplane(W, al[k], s.label) == h) found = k;
      }
      if (found < 0) throw invariant_error("tensor product repair: no negative crossing to fold");
      p = normalize(W, detail::toggle(p, found));
    }
    end = walk_alcoves(W, p).back();
  }
  if (end.fin != p2.start.fin) throw invariant_error("tensor product repair did not reach iota(p2)");
  for (auto& s : p2.steps) p.steps.push_back(s);
  return normalize(W, p);
}

}  // namespace alcove
