#include "omegaq/operad.hpp"

#include <algorithm>
#include <optional>

namespace omegaq {

namespace {

void report(std::vector<std::string> &out, const std::string &what,
            const std::vector<Violation> &vs) {
  for (auto &v : vs)
    out.push_back(what + " at (" + std::to_string(v.cell.dim) + "," +
                  std::to_string(v.cell.idx) + "): " + v.what);
}

} // namespace

GlobOperad terminal_operad(int max_size, int max_dim) {
  GlobOperad o{terminal_coll(max_size, max_dim), max_size, {}, unit_I(max_dim), {}, {}};
  o.oo = box(o.coll, o.coll, max_size);
  MapResult m = phi_map(o.oo, o.coll);
  if (!m.ok())
    throw Error("terminal_operad: composite outside bound");
  o.m = m.map;
  o.e = theta_map(o.unit, o.coll);
  return o;
}

GlobOperad unit_operad(int max_size, int max_dim) {
  GlobOperad o{unit_I(max_dim), max_size, {}, unit_I(max_dim), {}, {}};
  o.oo = box(o.coll, o.coll, max_size);
  Bijection l = left_unitor(o.oo, o.coll);
  if (!l.ok())
    throw Error("unit_operad: bound too small for the unitor");
  o.m = l.fwd;
  o.e = identity_cmap(o.unit);
  return o;
}

CollMap inclusion(const Box &small, const Box &big) {
  CollMap f(small.cells.size());
  for (size_t k = 0; k < small.cells.size(); ++k)
    for (auto &c : small.cells[k])
      f[k].push_back(big.find(int(k), c));
  return f;
}

namespace {

bool complete(const CollMap &f) {
  for (auto &v : f)
    for (int x : v)
      if (x < 0)
        return false;
  return true;
}

// Cells of c whose stages and unit globe fit the bound; boundaries of such
// cells fit too, so this is a subcollection. emb[k][i] is the index in c, back is
// the partial inverse.
struct Restricted {
  Collection coll;
  CollMap emb, back;
};

Restricted restrict_coll(const Collection &c, int bound) {
  Restricted r{Collection(c.max_dim()), CollMap(c.max_dim() + 1), CollMap(c.max_dim() + 1)};
  for (int k = 0; k <= c.max_dim(); ++k) {
    r.back[k].assign(c.count(k), -1);
    for (int i = 0; i < c.count(k); ++i) {
      bool fits = k + 1 <= bound;
      for (auto &s : c.stages[k][i])
        fits = fits && size(s) <= bound;
      if (!fits)
        continue;
      int s = k ? r.back[k - 1][c.carrier.src(k, i)] : -1;
      int t = k ? r.back[k - 1][c.carrier.tgt(k, i)] : -1;
      r.back[k][i] = r.coll.add(k, c.carrier.name({k, i}), s, t, c.ar(k, i), c.stages[k][i]);
      r.emb[k].push_back(i);
    }
  }
  return r;
}

CollMap reindex(const CollMap &f, const CollMap &back, std::vector<std::string> &out,
                const char *what) {
  CollMap g(f.size());
  for (size_t k = 0; k < f.size(); ++k)
    for (size_t i = 0; i < f[k].size(); ++i) {
      int j = f[k][i] < 0 ? -1 : back[k][f[k][i]];
      if (j < 0)
        out.push_back(std::string(what) + " at (" + std::to_string(k) + "," +
                      std::to_string(i) + "): image exceeds the check bound");
      g[k].push_back(j);
    }
  return g;
}

bool fits(const Collection &c, int bound) {
  for (int k = bound; k <= c.max_dim(); ++k)
    if (c.count(k) > 0)
      return false;
  for (auto &dim : c.stages)
    for (auto &st : dim)
      for (auto &s : st)
        if (size(s) > bound)
          return false;
  return true;
}

// Cells of a box over subcollections, located in the box over the full ones.
CollMap embed(const Box &small, const Box &big, const CollMap &el, const CollMap &er) {
  CollMap in(small.cells.size());
  for (size_t k = 0; k < small.cells.size(); ++k)
    for (auto &cell : small.cells[k]) {
      BoxCell b{el[k][cell.left],
                map_labels<int, int>(cell.word, [&](int d, int x) { return er[d][x]; })};
      in[k].push_back(big.find(int(k), b));
    }
  return in;
}

std::optional<GlobOperad> restrict_operad(const GlobOperad &o, int bound,
                                          std::vector<std::string> &out) {
  Restricted r = restrict_coll(o.coll, bound);
  Restricted ru = restrict_coll(o.unit, bound);
  GlobOperad sub{r.coll, bound, box(r.coll, r.coll, bound), ru.coll, {}, {}};
  CollMap in = embed(sub.oo, o.oo, r.emb, r.emb);
  if (!complete(in)) {
    out.push_back("box(O,O) at the check bound is not contained in the materialized one");
    return std::nullopt;
  }
  sub.m = reindex(compose_cmap(o.m, in), r.back, out, "m");
  sub.e = reindex(compose_cmap(o.e, ru.emb), r.back, out, "e");
  if (!out.empty())
    return std::nullopt;
  return sub;
}

} // namespace

std::vector<std::string> check_operad_laws(const GlobOperad &o, int max_size) {
  std::vector<std::string> out;
  if (max_size > o.max_size)
    return {"check bound exceeds the operad's materialized bound"};
  report(out, "m", validate_map(o.oo.coll, o.coll, o.m));
  report(out, "e", validate_map(o.unit, o.coll, o.e));
  if (!out.empty())
    return out;
  if (max_size < o.max_size) {
    std::optional<GlobOperad> sub = restrict_operad(o, max_size, out);
    if (!sub)
      return out;
    return check_operad_laws(*sub, max_size);
  }
  const Collection &c = o.coll;
  int B = max_size;
  Box oo = box(c, c, B);
  CollMap in = inclusion(oo, o.oo);
  if (!complete(in))
    return {"box(O,O) at the check bound is not contained in the materialized one"};
  CollMap m = compose_cmap(o.m, in);
  Box oo_o = box(oo.coll, c, B), o_oo = box(c, oo.coll, B);
  Bijection a = associator(oo_o, oo, o_oo, oo);
  report(out, "associator", a.problems);
  MapResult m1 = box_map(oo_o, oo, m, identity_cmap(c));
  MapResult m2 = box_map(o_oo, oo, identity_cmap(c), m);
  report(out, "m box 1", m1.problems);
  report(out, "1 box m", m2.problems);
  if (out.empty())
    report(out, "associativity",
           compare_maps(compose_cmap(m, m1.map), compose_cmap(m, compose_cmap(m2.map, a.fwd))));
  Box io = box(o.unit, c, B), oi = box(c, o.unit, B);
  Bijection l = left_unitor(io, c), r = right_unitor(oi, c);
  report(out, "left unitor", l.problems);
  report(out, "right unitor", r.problems);
  MapResult e1 = box_map(io, oo, o.e, identity_cmap(c));
  MapResult e2 = box_map(oi, oo, identity_cmap(c), o.e);
  report(out, "e box 1", e1.problems);
  report(out, "1 box e", e2.problems);
  if (l.ok() && e1.ok())
    report(out, "left unit law", compare_maps(compose_cmap(m, e1.map), l.fwd));
  if (r.ok() && e2.ok())
    report(out, "right unit law", compare_maps(compose_cmap(m, e2.map), r.fwd));
  return out;
}

OperadAlgebra make_algebra(const GlobOperad &o, GlobSet carrier, int max_size,
                           const std::function<int(int, const BoxCell &)> &act) {
  OperadAlgebra a{std::move(carrier), Collection(0), {}, {}};
  a.deg = degenerate(a.carrier);
  a.oa = box(o.coll, a.deg, max_size);
  a.omega.resize(a.oa.cells.size());
  for (size_t k = 0; k < a.oa.cells.size(); ++k)
    for (auto &c : a.oa.cells[k])
      a.omega[k].push_back(act(int(k), c));
  return a;
}

std::vector<std::string> check_algebra(const GlobOperad &o, const OperadAlgebra &a,
                                       int max_size) {
  std::vector<std::string> out;
  report(out, "omega", validate_map(a.oa.coll, a.deg, a.omega));
  if (!out.empty())
    return out;
  if (max_size > o.max_size || max_size > a.oa.max_size)
    return {"check bound exceeds the materialized bound"};
  if (max_size < o.max_size || !fits(a.deg, max_size)) {
    std::optional<GlobOperad> so = restrict_operad(o, max_size, out);
    if (!so)
      return out;
    Restricted rc = restrict_coll(o.coll, max_size), rx = restrict_coll(a.deg, max_size);
    OperadAlgebra sa{rx.coll.carrier, rx.coll, box(so->coll, rx.coll, max_size), {}};
    CollMap in = embed(sa.oa, a.oa, rc.emb, rx.emb);
    if (!complete(in))
      return {"box(O,A) at the check bound is not contained in the action's domain"};
    sa.omega = reindex(compose_cmap(a.omega, in), rx.back, out, "omega");
    if (!out.empty())
      return out;
    return check_algebra(*so, sa, max_size);
  }
  const Collection &c = o.coll, &x = a.deg;
  int B = max_size;
  Box ox = box(c, x, B);
  CollMap in = inclusion(ox, a.oa);
  if (!complete(in))
    return {"box(O,A) at the check bound is not contained in the action's domain"};
  CollMap w = compose_cmap(a.omega, in);
  Box oo = box(c, c, B);
  CollMap inm = inclusion(oo, o.oo);
  if (!complete(inm))
    return {"box(O,O) at the check bound is not contained in the operad's domain"};
  CollMap m = compose_cmap(o.m, inm);
  Box oo_x = box(oo.coll, x, B), o_ox = box(c, ox.coll, B);
  Bijection al = associator(oo_x, oo, o_ox, ox);
  report(out, "associator", al.problems);
  MapResult m1 = box_map(oo_x, ox, m, identity_cmap(x));
  MapResult w1 = box_map(o_ox, ox, identity_cmap(c), w);
  report(out, "m box 1", m1.problems);
  report(out, "1 box omega", w1.problems);
  if (out.empty())
    report(out, "action square",
           compare_maps(compose_cmap(w, m1.map), compose_cmap(w, compose_cmap(w1.map, al.fwd))));
  Box ix = box(o.unit, x, B);
  Bijection l = left_unitor(ix, x);
  MapResult e1 = box_map(ix, ox, o.e, identity_cmap(x));
  report(out, "left unitor", l.problems);
  report(out, "e box 1", e1.problems);
  if (l.ok() && e1.ok())
    report(out, "unit triangle", compare_maps(compose_cmap(w, e1.map), l.fwd));
  return out;
}

std::vector<CollMap> find_coll_maps(const Collection &dom, const Collection &cod, size_t limit) {
  std::vector<CollMap> out;
  int top = dom.max_dim();
  CollMap cur(top + 1);
  for (int d = 0; d <= top; ++d)
    cur[d].assign(dom.count(d), -1);
  std::function<void(int, int)> go = [&](int d, int i) {
    if (out.size() >= limit)
      return;
    if (d > top) {
      out.push_back(cur);
      return;
    }
    if (i == dom.count(d)) {
      go(d + 1, 0);
      return;
    }
    for (int y = 0; y < cod.count(d); ++y) {
      if (cod.ar(d, y) != dom.ar(d, i))
        continue;
      if (d > 0 && (cur[d - 1][dom.carrier.src(d, i)] != cod.carrier.src(d, y) ||
                    cur[d - 1][dom.carrier.tgt(d, i)] != cod.carrier.tgt(d, y)))
        continue;
      cur[d][i] = y;
      go(d, i + 1);
    }
    cur[d][i] = -1;
  };
  if (top > cod.max_dim()) {
    for (int d = cod.max_dim() + 1; d <= top; ++d)
      if (dom.count(d) > 0)
        return out;
  }
  go(0, 0);
  return out;
}

} // namespace omegaq
