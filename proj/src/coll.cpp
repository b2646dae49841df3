#include "omegaq/coll.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace omegaq {

int Collection::add(int dim, const std::string &name, int src, int tgt, Scheme a,
                    std::vector<Scheme> st) {
  int idx = carrier.add(dim, name, src, tgt);
  if (st.empty())
    st.push_back(a);
  arity[dim].push_back(std::move(a));
  stages[dim].push_back(std::move(st));
  return idx;
}

std::vector<Violation> Collection::validate() const {
  std::vector<Violation> out = carrier.validate();
  for (int d = 0; d <= max_dim(); ++d)
    for (int i = 0; i < count(d); ++i) {
      if (arity[d][i].dim != d) {
        out.push_back({{d, i}, "arity has the wrong dimension"});
        continue;
      }
      if (d == 0)
        continue;
      if (boundary(arity[d][i], Side::Source) != arity[d - 1][carrier.src(d, i)])
        out.push_back({{d, i}, "arity does not commute with src"});
      if (boundary(arity[d][i], Side::Target) != arity[d - 1][carrier.tgt(d, i)])
        out.push_back({{d, i}, "arity does not commute with tgt"});
    }
  return out;
}

std::vector<Violation> validate_map(const Collection &dom, const Collection &cod,
                                    const CollMap &f) {
  GlobMap g{&dom.carrier, &cod.carrier, f};
  auto out = g.validate();
  if (!out.empty())
    return out;
  for (int d = 0; d <= dom.max_dim(); ++d)
    for (int i = 0; i < dom.count(d); ++i)
      if (dom.ar(d, i) != cod.ar(d, f[d][i]))
        out.push_back({{d, i}, "arity not preserved"});
  return out;
}

CollMap identity_cmap(const Collection &x) { return identity_map(x.carrier).comp; }

CollMap compose_cmap(const CollMap &g, const CollMap &f) {
  CollMap out(f.size());
  for (size_t d = 0; d < f.size(); ++d)
    for (int y : f[d])
      out[d].push_back(g.at(d).at(y));
  return out;
}

std::vector<Violation> compare_maps(const CollMap &f, const CollMap &g) {
  std::vector<Violation> out;
  for (size_t d = 0; d < std::max(f.size(), g.size()); ++d) {
    size_t n = std::max(d < f.size() ? f[d].size() : 0, d < g.size() ? g[d].size() : 0);
    for (size_t i = 0; i < n; ++i) {
      int a = d < f.size() && i < f[d].size() ? f[d][i] : -1;
      int b = d < g.size() && i < g[d].size() ? g[d][i] : -1;
      if (a != b)
        out.push_back({{int(d), int(i)}, "maps differ"});
    }
  }
  return out;
}

Collection unit_I(int max_dim) {
  Collection c(max_dim);
  for (int d = 0; d <= max_dim; ++d)
    c.add(d, "i" + std::to_string(d), 0, 0, globe(d));
  return c;
}

Collection terminal_coll(int max_size, int max_dim) {
  Collection c(max_dim);
  std::map<Scheme, int> prev;
  for (int d = 0; d <= max_dim; ++d) {
    std::map<Scheme, int> cur;
    for (auto &s : enumerate_schemes(d, max_size)) {
      int src = 0, tgt = 0;
      if (d > 0) {
        src = prev.at(boundary(s, Side::Source));
        tgt = prev.at(boundary(s, Side::Target));
      }
      cur[s] = c.add(d, print_scheme(s), src, tgt, s);
    }
    prev = std::move(cur);
  }
  return c;
}

Collection initial_coll(int max_dim) { return Collection(max_dim); }

Collection id_coll(int max_dim) {
  Collection c(max_dim);
  for (int d = 0; d <= max_dim; ++d)
    c.add(d, "id" + std::to_string(d), 0, 0, iterated_identity(d));
  return c;
}

Collection degenerate(const GlobSet &g) {
  Collection c(g.max_dim());
  for (int d = 0; d <= g.max_dim(); ++d)
    for (int i = 0; i < g.count(d); ++i)
      c.add(d, g.name({d, i}), d ? g.src(d, i) : -1, d ? g.tgt(d, i) : -1,
            iterated_identity(d));
  return c;
}

namespace {

int scheme_index(const Collection &terminal, int d, const Scheme &s) {
  // terminal_coll lists schemes in sorted order per dimension
  auto &v = terminal.arity[d];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s)
    return -1;
  return static_cast<int>(it - v.begin());
}

Scheme stage_of(const Collection &y, const Diagram &word, size_t j) {
  return mu(map_labels<int, Scheme>(
      word, [&](int d, int l) { return y.stages[d][l].at(j); }));
}

Scheme arity_of(const Collection &y, const Diagram &word) {
  return mu(map_labels<int, Scheme>(word, [&](int d, int l) { return y.arity[d][l]; }));
}

int leaf(const Diagram &d) {
  const Diagram *p = &d;
  while (p->dim > 0)
    p = &p->kids.at(0);
  return p->verts[0];
}

} // namespace

CollMap to_terminal(const Collection &x, const Collection &terminal) {
  CollMap f(x.max_dim() + 1);
  for (int d = 0; d <= x.max_dim(); ++d)
    for (int i = 0; i < x.count(d); ++i) {
      int t = scheme_index(terminal, d, x.ar(d, i));
      if (t < 0)
        throw Error("to_terminal: arity " + print_scheme(x.ar(d, i)) +
                    " exceeds the terminal collection bound");
      f[d].push_back(t);
    }
  return f;
}

int Box::find(int dim, const BoxCell &c) const {
  if (dim < 0 || dim >= static_cast<int>(index.size()))
    return -1;
  auto it = index[dim].find(c);
  return it == index[dim].end() ? -1 : it->second;
}

namespace {

// Labellings of a shape by cells of y whose composite stage arities stay
// within the bound. With F the size of mu of a word, F(point l) = |l|,
// F(empty sequence on v) = |v| and F(kids) = sum F(kid) - sum |inner vertex|;
// every partial sum is a lower bound of the final size, so branches are cut
// as soon as one exceeds the bound.
struct WordSearch {
  const Collection &y;
  size_t ny;
  int bound;
  std::vector<std::vector<std::vector<int>>> ssz; // [dim][cell][stage]
  std::vector<int> all0;
  std::vector<std::vector<std::vector<int>>> between; // [dim][src * n + tgt]

  const std::vector<int> &cand(int depth, const int *lo, const int *hi) const {
    if (!lo)
      return all0;
    return between[depth][*lo * y.count(depth - 1) + *hi];
  }

  WordSearch(const Collection &y, size_t ny, int bound) : y(y), ny(ny), bound(bound) {
    for (int i = 0; i < y.count(0); ++i)
      all0.push_back(i);
    between.resize(y.max_dim() + 1);
    for (int d = 1; d <= y.max_dim(); ++d) {
      int n = y.count(d - 1);
      between[d].resize(size_t(n) * n);
      for (int i = 0; i < y.count(d); ++i)
        between[d][y.carrier.src(d, i) * n + y.carrier.tgt(d, i)].push_back(i);
    }
    for (int d = 0; d <= y.max_dim(); ++d) {
      ssz.emplace_back();
      for (int i = 0; i < y.count(d); ++i) {
        ssz[d].emplace_back();
        for (size_t j = 0; j < ny; ++j)
          ssz[d][i].push_back(size(y.stages[d][i][j]));
      }
    }
  }

  using Emit = std::function<void(Diagram &&, const std::vector<int> &)>;

  void run(const Scheme &s, int depth, const int *lo, const int *hi, const Emit &emit) {
    if (depth > y.max_dim())
      return;
    auto &cs = cand(depth, lo, hi);
    if (s.dim == 0 || s.kids.empty()) {
      for (int c : cs) {
        auto &f = ssz[depth][c];
        if (std::all_of(f.begin(), f.end(), [&](int v) { return v <= bound; }))
          emit(s.dim == 0 ? point(c) : Diagram{s.dim, {c}, {}}, f);
      }
      return;
    }
    size_t m = s.kids.size();
    Diagram cur{s.dim, {}, {}};
    cur.verts.reserve(m + 1);
    std::function<void(size_t, const std::vector<int> &)> step =
        [&](size_t i, const std::vector<int> &part) {
          if (i == m) {
            emit(Diagram(cur), part);
            return;
          }
          for (int v : cs) {
            cur.verts.push_back(v);
            run(s.kids[i], depth + 1, &cur.verts[i], &cur.verts[i + 1],
                [&](Diagram &&k, const std::vector<int> &fk) {
                  std::vector<int> f(ny);
                  for (size_t j = 0; j < ny; ++j) {
                    f[j] = i == 0 ? fk[j] : part[j] + fk[j] - ssz[depth][cur.verts[i]][j];
                    if (f[j] > bound)
                      return;
                  }
                  cur.kids.push_back(std::move(k));
                  step(i + 1, f);
                  cur.kids.pop_back();
                });
            cur.verts.pop_back();
          }
        };
    for (int v0 : cs) {
      cur.verts = {v0};
      cur.kids.clear();
      step(0, {});
    }
  }
};

} // namespace

Box box(const Collection &x, const Collection &y, int max_size) {
  int top = std::min(x.max_dim(), y.max_dim());
  Box out{Collection(top), std::vector<std::vector<BoxCell>>(top + 1),
          std::vector<std::map<BoxCell, int>>(top + 1), max_size};
  size_t ny = 1;
  for (int d = 0; d <= y.max_dim(); ++d)
    if (y.count(d) > 0) {
      ny = y.stages[d][0].size();
      break;
    }
  WordSearch search(y, ny, max_size);
  for (int k = 0; k <= top; ++k) {
    struct Found {
      BoxCell cell;
      std::vector<Scheme> stages;
    };
    std::vector<Found> found;
    for (int a = 0; a < x.count(k); ++a) {
      auto &sa = x.stages[k][a];
      if (std::any_of(sa.begin(), sa.end(), [&](const Scheme &s) { return size(s) > max_size; }))
        continue;
      search.run(x.ar(k, a), 0, nullptr, nullptr, [&](Diagram &&w, const std::vector<int> &f) {
        std::vector<Scheme> st = sa;
        for (size_t j = 0; j < ny; ++j) {
          st.push_back(stage_of(y, w, j));
          if (size(st.back()) != f[j])
            throw Error("box: size bookkeeping disagrees with mu");
        }
        found.push_back({{a, std::move(w)}, std::move(st)});
      });
    }
    std::sort(found.begin(), found.end(),
              [](const Found &p, const Found &q) { return p.cell < q.cell; });
    for (auto &f : found) {
      int src = -1, tgt = -1;
      if (k > 0) {
        src = out.find(k - 1, {x.carrier.src(k, f.cell.left), boundary(f.cell.word, Side::Source)});
        tgt = out.find(k - 1, {x.carrier.tgt(k, f.cell.left), boundary(f.cell.word, Side::Target)});
        if (src < 0 || tgt < 0)
          throw Error("box: truncation not closed under boundary");
      }
      std::string name = "b" + std::to_string(k) + "_" + std::to_string(out.cells[k].size());
      Scheme ar = ny ? f.stages.back() : arity_of(y, f.cell.word);
      int idx = out.coll.add(k, name, src, tgt, ar, f.stages);
      out.index[k][f.cell] = idx;
      out.cells[k].push_back(std::move(f.cell));
    }
  }
  return out;
}

MapResult box_map(const Box &from, const Box &to, const CollMap &f, const CollMap &g) {
  MapResult r;
  r.map.resize(from.cells.size());
  for (size_t k = 0; k < from.cells.size(); ++k)
    for (size_t i = 0; i < from.cells[k].size(); ++i) {
      auto &c = from.cells[k][i];
      BoxCell img{f[k][c.left],
                  map_labels<int, int>(c.word, [&](int d, int l) { return g[d][l]; })};
      int j = to.find(static_cast<int>(k), img);
      if (j < 0)
        r.problems.push_back({{int(k), int(i)}, "image outside the target bound"});
      r.map[k].push_back(j);
    }
  return r;
}

namespace {

void finish(Bijection &b, const Collection &dom, const Collection &cod) {
  if (!b.ok())
    return;
  for (size_t d = 0; d < b.fwd.size(); ++d)
    for (size_t i = 0; i < b.fwd[d].size(); ++i)
      if (b.fwd[d][i] < 0 || b.inv.at(d).at(b.fwd[d][i]) != int(i))
        b.problems.push_back({{int(d), int(i)}, "not a bijection"});
  for (size_t d = 0; d < b.inv.size(); ++d)
    for (size_t i = 0; i < b.inv[d].size(); ++i)
      if (b.inv[d][i] < 0 || b.fwd.at(d).at(b.inv[d][i]) != int(i))
        b.problems.push_back({{int(d), int(i)}, "inverse not a bijection"});
  if (!b.ok())
    return;
  for (auto &v : validate_map(dom, cod, b.fwd))
    b.problems.push_back({v.cell, "forward map: " + v.what});
  for (auto &v : validate_map(cod, dom, b.inv))
    b.problems.push_back({v.cell, "inverse map: " + v.what});
}

} // namespace

Bijection left_unitor(const Box &ix, const Collection &x) {
  Bijection b;
  int top = ix.coll.max_dim();
  b.fwd.resize(top + 1);
  b.inv.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (auto &c : ix.cells[k])
      b.fwd[k].push_back(leaf(c.word));
    for (int i = 0; i < x.count(k); ++i) {
      int j = ix.find(k, {0, eta(x.carrier, k, i)});
      if (j < 0)
        b.problems.push_back({{k, i}, "no preimage in I box X"});
      b.inv[k].push_back(j);
    }
  }
  finish(b, ix.coll, x);
  return b;
}

Bijection right_unitor(const Box &xi, const Collection &x) {
  Bijection b;
  int top = xi.coll.max_dim();
  b.fwd.resize(top + 1);
  b.inv.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (auto &c : xi.cells[k])
      b.fwd[k].push_back(c.left);
    for (int i = 0; i < x.count(k); ++i) {
      Diagram w = map_labels<Unit, int>(x.ar(k, i), [](int, Unit) { return 0; });
      int j = xi.find(k, {i, w});
      if (j < 0)
        b.problems.push_back({{k, i}, "no preimage in X box I"});
      b.inv[k].push_back(j);
    }
  }
  finish(b, xi.coll, x);
  return b;
}

Bijection associator(const Box &xy_z, const Box &xy, const Box &x_yz, const Box &yz) {
  Bijection b;
  int top = std::min(xy_z.coll.max_dim(), x_yz.coll.max_dim());
  b.fwd.resize(top + 1);
  b.inv.resize(top + 1);
  using Key = std::tuple<int, Diagram, Diagram>;
  for (int k = 0; k <= top; ++k) {
    std::map<Key, int> lhs, rhs;
    for (size_t i = 0; i < xy_z.cells[k].size(); ++i) {
      auto &c = xy_z.cells[k][i];
      auto &inner = xy.cells[k][c.left];
      lhs[{inner.left, inner.word, c.word}] = int(i);
    }
    for (size_t i = 0; i < x_yz.cells[k].size(); ++i) {
      auto &c = x_yz.cells[k][i];
      Diagram psi = map_labels<int, int>(c.word, [&](int d, int l) { return yz.cells[d][l].left; });
      Diagram phi = mu(map_labels<int, Diagram>(
          c.word, [&](int d, int l) { return yz.cells[d][l].word; }));
      rhs[{c.left, psi, phi}] = int(i);
    }
    b.fwd[k].assign(xy_z.cells[k].size(), -1);
    b.inv[k].assign(x_yz.cells[k].size(), -1);
    for (auto &[key, i] : lhs) {
      auto it = rhs.find(key);
      if (it == rhs.end()) {
        b.problems.push_back({{k, i}, "no image in X box (Y box Z)"});
        continue;
      }
      b.fwd[k][i] = it->second;
      b.inv[k][it->second] = i;
    }
    for (auto &[key, i] : rhs)
      if (!lhs.count(key))
        b.problems.push_back({{k, i}, "no preimage in (X box Y) box Z"});
  }
  finish(b, xy_z.coll, x_yz.coll);
  return b;
}

int Product::find(int dim, std::pair<int, int> p) const {
  if (dim < 0 || dim >= static_cast<int>(index.size()))
    return -1;
  auto it = index[dim].find(p);
  return it == index[dim].end() ? -1 : it->second;
}

Product product(const Collection &x, const Collection &y) {
  int top = std::min(x.max_dim(), y.max_dim());
  Product p{Collection(top), std::vector<std::vector<std::pair<int, int>>>(top + 1),
            std::vector<std::map<std::pair<int, int>, int>>(top + 1)};
  for (int k = 0; k <= top; ++k)
    for (int a = 0; a < x.count(k); ++a)
      for (int b = 0; b < y.count(k); ++b) {
        if (x.ar(k, a) != y.ar(k, b))
          continue;
        int src = -1, tgt = -1;
        if (k > 0) {
          src = p.find(k - 1, {x.carrier.src(k, a), y.carrier.src(k, b)});
          tgt = p.find(k - 1, {x.carrier.tgt(k, a), y.carrier.tgt(k, b)});
        }
        std::string name = "<" + x.carrier.name({k, a}) + "," + y.carrier.name({k, b}) + ">";
        int idx = p.coll.add(k, name, src, tgt, x.ar(k, a));
        p.index[k][{a, b}] = idx;
        p.pairs[k].emplace_back(a, b);
      }
  return p;
}

MapResult product_map(const Product &from, const Product &to, const CollMap &f,
                      const CollMap &g) {
  MapResult r;
  r.map.resize(from.pairs.size());
  for (size_t k = 0; k < from.pairs.size(); ++k)
    for (size_t i = 0; i < from.pairs[k].size(); ++i) {
      auto [a, b] = from.pairs[k][i];
      int j = to.find(int(k), {f[k][a], g[k][b]});
      if (j < 0)
        r.problems.push_back({{int(k), int(i)}, "image pair missing"});
      r.map[k].push_back(j);
    }
  return r;
}

CollMap projection(const Product &p, int which) {
  CollMap f(p.pairs.size());
  for (size_t k = 0; k < p.pairs.size(); ++k)
    for (auto &pr : p.pairs[k])
      f[k].push_back(which == 0 ? pr.first : pr.second);
  return f;
}

MapResult interchange(const Box &abcd, const Product &ab, const Product &cd,
                      const Box &ac, const Box &bd, const Product &acbd) {
  MapResult r;
  r.map.resize(abcd.cells.size());
  for (size_t k = 0; k < abcd.cells.size(); ++k)
    for (size_t i = 0; i < abcd.cells[k].size(); ++i) {
      auto &c = abcd.cells[k][i];
      auto [a, b] = ab.pairs[k][c.left];
      Diagram w1 = map_labels<int, int>(c.word, [&](int d, int l) { return cd.pairs[d][l].first; });
      Diagram w2 = map_labels<int, int>(c.word, [&](int d, int l) { return cd.pairs[d][l].second; });
      int x = ac.find(int(k), {a, w1});
      int y = bd.find(int(k), {b, w2});
      int j = x < 0 || y < 0 ? -1 : acbd.find(int(k), {x, y});
      if (j < 0)
        r.problems.push_back({{int(k), int(i)}, "interchange image missing"});
      r.map[k].push_back(j);
    }
  return r;
}

CollMap delta_map(const Collection &unit, const Product &unit_sq) {
  CollMap f(unit.max_dim() + 1);
  for (int k = 0; k <= unit.max_dim(); ++k)
    for (int i = 0; i < unit.count(k); ++i)
      f[k].push_back(unit_sq.find(k, {i, i}));
  return f;
}

MapResult phi_map(const Box &tt, const Collection &terminal) {
  MapResult r;
  r.map.resize(tt.cells.size());
  for (size_t k = 0; k < tt.cells.size(); ++k)
    for (size_t i = 0; i < tt.cells[k].size(); ++i) {
      int j = scheme_index(terminal, int(k), tt.coll.ar(int(k), int(i)));
      if (j < 0)
        r.problems.push_back({{int(k), int(i)}, "composite outside the terminal bound"});
      r.map[k].push_back(j);
    }
  return r;
}

CollMap theta_map(const Collection &unit, const Collection &terminal) {
  return to_terminal(unit, terminal);
}

namespace {

void report(std::vector<std::string> &out, const std::string &what,
            const std::vector<Violation> &vs) {
  for (auto &v : vs)
    out.push_back(what + " at (" + std::to_string(v.cell.dim) + "," +
                  std::to_string(v.cell.idx) + "): " + v.what);
}

} // namespace

std::vector<std::string> check_unitors(const Collection &x, int max_size) {
  std::vector<std::string> out;
  Collection i = unit_I(x.max_dim());
  Box ix = box(i, x, max_size), xi = box(x, i, max_size);
  report(out, "left unitor", left_unitor(ix, x).problems);
  report(out, "right unitor", right_unitor(xi, x).problems);
  return out;
}

std::vector<std::string> check_triangle(const Collection &x, const Collection &y, int max_size) {
  std::vector<std::string> out;
  Collection i = unit_I(std::min(x.max_dim(), y.max_dim()));
  Box xi = box(x, i, max_size), iy = box(i, y, max_size), xy = box(x, y, max_size);
  Box xi_y = box(xi.coll, y, max_size), x_iy = box(x, iy.coll, max_size);
  Bijection a = associator(xi_y, xi, x_iy, iy);
  Bijection l = left_unitor(iy, y), r = right_unitor(xi, x);
  report(out, "associator", a.problems);
  report(out, "left unitor", l.problems);
  report(out, "right unitor", r.problems);
  if (!out.empty())
    return out;
  MapResult one_l = box_map(x_iy, xy, identity_cmap(x), l.fwd);
  MapResult r_one = box_map(xi_y, xy, r.fwd, identity_cmap(y));
  report(out, "1 box lambda", one_l.problems);
  report(out, "rho box 1", r_one.problems);
  if (out.empty())
    report(out, "triangle", compare_maps(compose_cmap(one_l.map, a.fwd), r_one.map));
  return out;
}

std::vector<std::string> check_pentagon(const Collection &w, const Collection &x,
                                        const Collection &y, const Collection &z,
                                        int max_size) {
  std::vector<std::string> out;
  int B = max_size;
  Box wx = box(w, x, B), xy = box(x, y, B), yz = box(y, z, B);
  Box wx_y = box(wx.coll, y, B), wxy_z = box(wx_y.coll, z, B);
  Box wx_yz = box(wx.coll, yz.coll, B);
  Box x_yz = box(x, yz.coll, B), w_xyz = box(w, x_yz.coll, B);
  Box w_xy = box(w, xy.coll, B), w_xy__z = box(w_xy.coll, z, B);
  Box xy_z = box(xy.coll, z, B), w_xy_z = box(w, xy_z.coll, B);
  Bijection a1 = associator(wxy_z, wx_y, wx_yz, yz);
  Bijection a2 = associator(wx_yz, wx, w_xyz, x_yz);
  Bijection a3 = associator(wx_y, wx, w_xy, xy);
  Bijection a4 = associator(w_xy__z, w_xy, w_xy_z, xy_z);
  Bijection a5 = associator(xy_z, xy, x_yz, yz);
  const Bijection *all[] = {&a1, &a2, &a3, &a4, &a5};
  for (int k = 0; k < 5; ++k)
    report(out, "associator " + std::to_string(k + 1), all[k]->problems);
  if (!out.empty())
    return out;
  MapResult a3z = box_map(wxy_z, w_xy__z, a3.fwd, identity_cmap(z));
  MapResult wa5 = box_map(w_xy_z, w_xyz, identity_cmap(w), a5.fwd);
  report(out, "alpha box 1", a3z.problems);
  report(out, "1 box alpha", wa5.problems);
  if (!out.empty())
    return out;
  CollMap lhs = compose_cmap(a2.fwd, a1.fwd);
  CollMap rhs = compose_cmap(wa5.map, compose_cmap(a4.fwd, a3z.map));
  report(out, "pentagon", compare_maps(lhs, rhs));
  return out;
}

std::vector<std::string> check_interchange_naturality(const CollArrow &fa, const CollArrow &fb,
                                                      const CollArrow &fc, const CollArrow &fd,
                                                      int max_size) {
  std::vector<std::string> out;
  int B = max_size;
  auto side = [&](const Collection &a, const Collection &b, const Collection &c,
                  const Collection &d) {
    struct S {
      Product ab, cd;
      Box abcd, ac, bd;
      Product acbd;
    };
    Product ab = product(a, b), cd = product(c, d);
    Box abcd = box(ab.coll, cd.coll, B), ac = box(a, c, B), bd = box(b, d, B);
    Product acbd = product(ac.coll, bd.coll);
    return S{std::move(ab), std::move(cd), std::move(abcd), std::move(ac), std::move(bd),
             std::move(acbd)};
  };
  auto s = side(*fa.dom, *fb.dom, *fc.dom, *fd.dom);
  auto t = side(*fa.cod, *fb.cod, *fc.cod, *fd.cod);
  MapResult xs = interchange(s.abcd, s.ab, s.cd, s.ac, s.bd, s.acbd);
  MapResult xt = interchange(t.abcd, t.ab, t.cd, t.ac, t.bd, t.acbd);
  report(out, "interchange (source)", xs.problems);
  report(out, "interchange (target)", xt.problems);
  MapResult fab = product_map(s.ab, t.ab, fa.map, fb.map);
  MapResult fcd = product_map(s.cd, t.cd, fc.map, fd.map);
  MapResult fac = box_map(s.ac, t.ac, fa.map, fc.map);
  MapResult fbd = box_map(s.bd, t.bd, fb.map, fd.map);
  report(out, "f_A x f_B", fab.problems);
  report(out, "f_C x f_D", fcd.problems);
  report(out, "f_A box f_C", fac.problems);
  report(out, "f_B box f_D", fbd.problems);
  if (!out.empty())
    return out;
  MapResult left = box_map(s.abcd, t.abcd, fab.map, fcd.map);
  MapResult right = product_map(s.acbd, t.acbd, fac.map, fbd.map);
  report(out, "(f_A x f_B) box (f_C x f_D)", left.problems);
  report(out, "(f_A box f_C) x (f_B box f_D)", right.problems);
  if (out.empty())
    report(out, "naturality", compare_maps(compose_cmap(xt.map, left.map),
                                           compose_cmap(right.map, xs.map)));
  return out;
}

Collection parse_collection(const std::string &text, int max_dim) {
  auto lines = read_cell_lines(text);
  std::map<std::string, std::pair<Scheme, int>> ar;
  for (auto &c : lines) {
    if (c.rest.rfind("arity=", 0) != 0)
      throw ParseError(c.line, "cell " + c.id + " needs arity=@k[...]");
    try {
      ar[c.id] = {parse_scheme(c.rest.substr(6)), c.line};
    } catch (const Error &e) {
      throw ParseError(c.line, e.what());
    }
    if (ar[c.id].first.dim != c.dim)
      throw ParseError(c.line, "arity of " + c.id + " has the wrong dimension");
  }
  GlobSet g = build_globset(lines, max_dim);
  Collection out(g.max_dim());
  for (int d = 0; d <= g.max_dim(); ++d)
    for (int i = 0; i < g.count(d); ++i) {
      auto &name = g.name({d, i});
      auto &[s, line] = ar.at(name);
      if (d > 0 && (boundary(s, Side::Source) != out.ar(d - 1, g.src(d, i)) ||
                    boundary(s, Side::Target) != out.ar(d - 1, g.tgt(d, i))))
        throw ParseError(line, "arity of " + name + " does not commute with its boundary");
      out.add(d, name, d ? g.src(d, i) : -1, d ? g.tgt(d, i) : -1, s);
    }
  return out;
}

std::string print_collection(const Collection &c) {
  std::ostringstream out;
  for (int d = 0; d <= c.max_dim(); ++d)
    for (int i = 0; i < c.count(d); ++i) {
      out << "cell " << d << ' ' << c.carrier.name({d, i});
      if (d > 0)
        out << " src=" << c.carrier.name({d - 1, c.carrier.src(d, i)})
            << " tgt=" << c.carrier.name({d - 1, c.carrier.tgt(d, i)});
      out << " arity=" << print_scheme(c.ar(d, i)) << '\n';
    }
  return out.str();
}

} // namespace omegaq
