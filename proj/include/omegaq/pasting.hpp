#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omegaq/globset.hpp"

namespace omegaq {

struct Unit {
  auto operator<=>(const Unit &) const = default;
};

// A cell of T(X). dim 0: verts = {label}, no kids. dim k >= 1: vertices
// v0..vm (labels one level down) and m kids of dim k-1, where kid i lives
// in the hom between v(i-1) and v(i). Labels at recursion depth d are
// d-cells of X.
template <class L> struct Pasting {
  int dim = 0;
  std::vector<L> verts;
  std::vector<Pasting> kids;

  bool operator==(const Pasting &o) const {
    return dim == o.dim && verts == o.verts && kids == o.kids;
  }
  bool operator<(const Pasting &o) const {
    if (dim != o.dim)
      return dim < o.dim;
    if (verts != o.verts)
      return verts < o.verts;
    return kids < o.kids;
  }
};

using Scheme = Pasting<Unit>;
using Diagram = Pasting<int>;

template <class L> Pasting<L> point(L x) { return Pasting<L>{0, {std::move(x)}, {}}; }

template <class L> int size(const Pasting<L> &p) {
  if (p.dim == 0)
    return 1;
  int n = 1;
  for (auto &k : p.kids)
    n += size(k);
  return n;
}

template <class L> Pasting<L> boundary(const Pasting<L> &p, Side side) {
  if (p.dim < 1)
    throw Error("boundary: dimension underflow");
  if (p.dim == 1)
    return point(side == Side::Source ? p.verts.front() : p.verts.back());
  Pasting<L> out{p.dim - 1, p.verts, {}};
  out.kids.reserve(p.kids.size());
  for (auto &k : p.kids)
    out.kids.push_back(boundary(k, side));
  return out;
}

template <class L> Pasting<L> iterated_boundary(const Pasting<L> &p, Side side, int j) {
  if (j < 0 || j > p.dim)
    throw Error("iterated_boundary: dimension out of range");
  Pasting<L> out = p;
  while (out.dim > j)
    out = boundary(out, side);
  return out;
}

template <class L> Pasting<L> identity_lift(const Pasting<L> &p, int k) {
  if (k < p.dim)
    throw Error("identity_lift: target dimension below source");
  if (p.dim == 0)
    return k == 0 ? p : Pasting<L>{k, p.verts, {}};
  Pasting<L> out{k, p.verts, {}};
  for (auto &c : p.kids)
    out.kids.push_back(identity_lift(c, k - 1));
  return out;
}

template <class L>
Pasting<L> compose_along(const Pasting<L> &x, const Pasting<L> &y, int j) {
  if (x.dim != y.dim || x.dim <= j || j < 0)
    throw Error("compose_along: dimension mismatch");
  if (j == 0) {
    if (x.verts.back() != y.verts.front())
      throw Error("compose_along: boundary mismatch");
    Pasting<L> out = x;
    out.verts.insert(out.verts.end(), y.verts.begin() + 1, y.verts.end());
    out.kids.insert(out.kids.end(), y.kids.begin(), y.kids.end());
    return out;
  }
  if (x.verts != y.verts)
    throw Error("compose_along: boundary mismatch");
  Pasting<L> out{x.dim, x.verts, {}};
  for (size_t i = 0; i < x.kids.size(); ++i)
    out.kids.push_back(compose_along(x.kids[i], y.kids[i], j - 1));
  return out;
}

// Structural recursion of mu. leaf(label) must return a cell of the target
// of the same dimension as the label's depth; the fold evaluates every
// indicated composite with compose_along.
template <class L, class M, class F>
Pasting<M> fold(const Pasting<L> &p, F &&leaf, int depth = 0) {
  if (p.dim == 0)
    return leaf(p.verts[0]);
  int k = depth + p.dim;
  if (p.kids.empty())
    return identity_lift(leaf(p.verts[0]), k);
  Pasting<M> acc = fold<L, M>(p.kids[0], leaf, depth + 1);
  for (size_t i = 1; i < p.kids.size(); ++i)
    acc = compose_along(acc, fold<L, M>(p.kids[i], leaf, depth + 1), depth);
  return acc;
}

template <class L> Pasting<L> mu(const Pasting<Pasting<L>> &dd) {
  return fold<Pasting<L>, L>(dd, [](const Pasting<L> &c) { return c; });
}

// T(f) on labels: f(depth, label).
template <class L, class M, class F>
Pasting<M> map_labels(const Pasting<L> &p, F &&f, int depth = 0) {
  Pasting<M> out{p.dim, {}, {}};
  out.verts.reserve(p.verts.size());
  for (auto &v : p.verts)
    out.verts.push_back(f(depth, v));
  for (auto &k : p.kids)
    out.kids.push_back(map_labels<L, M>(k, f, depth + 1));
  return out;
}

template <class L> Scheme shape(const Pasting<L> &p) {
  return map_labels<L, Unit>(p, [](int, const L &) { return Unit{}; });
}

template <class L> Pasting<Pasting<L>> eta_outer(const Pasting<L> &p);

// Single-globe diagram on a k-cell x; bnd(dim, x, side) gives boundaries.
template <class L, class B> Pasting<L> eta(const L &x, int k, B &&bnd) {
  std::vector<L> src(k + 1), tgt(k + 1);
  src[k] = tgt[k] = x;
  for (int d = k; d > 0; --d) {
    src[d - 1] = bnd(d, src[d], Side::Source);
    tgt[d - 1] = bnd(d, tgt[d], Side::Target);
  }
  Pasting<L> out = point(x);
  for (int d = k - 1; d >= 0; --d)
    out = Pasting<L>{k - d, {src[d], tgt[d]}, {std::move(out)}};
  return out;
}

Diagram eta(const GlobSet &g, int dim, int idx);

// eta of T(X) at a cell of T(X): the single globe labelled by the cell.
template <class L> Pasting<Pasting<L>> eta_outer(const Pasting<L> &p) {
  return eta<Pasting<L>>(p, p.dim, [](int, const Pasting<L> &c, Side s) {
    return boundary(c, s);
  });
}

// T(eta) at a cell of T(X): every label becomes its own single globe.
template <class L, class B> Pasting<Pasting<L>> eta_inner(const Pasting<L> &p, B &&bnd) {
  return map_labels<L, Pasting<L>>(
      p, [&](int depth, const L &x) { return eta<L>(x, depth, bnd); });
}

// Labellings of a fixed shape. cand(depth, lo, hi) lists the depth-cells
// whose source is lo and target is hi (no constraint at depth 0).
template <class L>
using Candidates = std::function<std::vector<L>(int, const L *, const L *)>;

template <class L>
void labellings(const Scheme &s, const Candidates<L> &cand, int depth, const L *lo,
                const L *hi, const std::function<void(Pasting<L> &&)> &emit) {
  auto cs = cand(depth, lo, hi);
  if (s.dim == 0) {
    for (auto &c : cs)
      emit(point(c));
    return;
  }
  size_t m = s.kids.size();
  Pasting<L> cur{s.dim, {}, {}};
  cur.verts.reserve(m + 1); // kids hold pointers into verts
  std::function<void(size_t)> step = [&](size_t i) {
    if (i == m) {
      emit(Pasting<L>(cur));
      return;
    }
    for (auto &v : cs) {
      cur.verts.push_back(v);
      labellings<L>(s.kids[i], cand, depth + 1, &cur.verts[i], &cur.verts[i + 1],
                    [&](Pasting<L> &&k) {
                      cur.kids.push_back(std::move(k));
                      step(i + 1);
                      cur.kids.pop_back();
                    });
      cur.verts.pop_back();
    }
  };
  for (auto &v0 : cs) {
    cur.verts = {v0};
    cur.kids.clear();
    step(0);
  }
}

template <class L> std::vector<Pasting<L>> labellings(const Scheme &s, const Candidates<L> &cand) {
  std::vector<Pasting<L>> out;
  labellings<L>(s, cand, 0, nullptr, nullptr, [&](Pasting<L> &&p) { out.push_back(std::move(p)); });
  return out;
}

Candidates<int> candidates(const GlobSet &g);

// Enumeration of diagrams whose labels carry their own size: a kid point
// counts the size of its label, a sequence counts 1 plus its kids.
template <class L>
using SizedCandidates =
    std::function<std::vector<std::pair<L, int>>(int, const L *, const L *)>;

template <class L>
void enumerate_sized(int depth, int r, int budget, const SizedCandidates<L> &cand,
                     const L *lo, const L *hi,
                     const std::function<void(const Pasting<L> &, int)> &emit) {
  auto cs = cand(depth, lo, hi);
  if (r == 0) {
    for (auto &[y, s] : cs)
      if (s <= budget)
        emit(point(y), s);
    return;
  }
  if (budget < 1)
    return;
  Pasting<L> cur{r, {}, {}};
  std::vector<L> vs;
  for (auto &c : cs)
    vs.push_back(c.first);
  std::function<void(int)> rec = [&](int used) {
    emit(cur, used);
    if (used >= budget)
      return;
    for (auto &v : vs) {
      L prev = cur.verts.back();
      cur.verts.push_back(v);
      enumerate_sized<L>(depth + 1, r - 1, budget - used, cand, &prev, &v,
                         [&](const Pasting<L> &k, int ks) {
                           cur.kids.push_back(k);
                           rec(used + ks);
                           cur.kids.pop_back();
                         });
      cur.verts.pop_back();
    }
  };
  for (auto &v0 : vs) {
    cur.verts = {v0};
    rec(1);
  }
}

template <class L>
std::vector<std::pair<Pasting<L>, int>> enumerate_sized(int k, int budget,
                                                        const SizedCandidates<L> &cand) {
  std::vector<std::pair<Pasting<L>, int>> out;
  enumerate_sized<L>(0, k, budget, cand, nullptr, nullptr,
                     [&](const Pasting<L> &p, int s) { out.emplace_back(p, s); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Scheme> enumerate_schemes(int k, int max_size);
std::vector<Diagram> enumerate_diagrams(const GlobSet &g, int k, int max_size);

Scheme globe(int k);         // single k-globe
Scheme iterated_identity(int k); // empty sequence at each level
Scheme path(int n);          // 1-dim scheme with n edges

Scheme parse_scheme(const std::string &text);
std::string print_scheme(const Scheme &s);
std::string print_diagram(const Diagram &d, const GlobSet &g);

// Validates boundary compatibility of a labelled diagram against g.
bool well_formed(const Diagram &d, const GlobSet &g);

// Unit laws on every cell of T(X), associativity on every cell of T^3(X),
// exhaustive up to the dimension and total size given.
struct MonadReport {
  long unit_checked = 0, assoc_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
MonadReport check_monad_laws(const GlobSet &g, int max_dim, int max_size);

} // namespace omegaq
