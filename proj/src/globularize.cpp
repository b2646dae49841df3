#include "omegaq/globularize.hpp"

#include <algorithm>

namespace omegaq {

int GlobularizedPro::intern(const ProTerm &t) {
  std::string key = normal_form_key(pro, t);
  auto it = by_key.find(key);
  if (it != by_key.end())
    return it->second;
  classes.push_back({typecheck(pro, t), t, key});
  by_key[key] = int(classes.size()) - 1;
  return int(classes.size()) - 1;
}

int GlobularizedPro::identity(int n) { return intern(ProTerm::id(n)); }

int GlobularizedPro::compose(int first, int then) {
  if (auto it = corrupted.find({first, then}); it != corrupted.end())
    return it->second;
  if (classes[first].type.coarity != classes[then].type.arity)
    throw Error("composing classes of mismatched types");
  return intern(ProTerm::comp({classes[first].rep, classes[then].rep}));
}

int GlobularizedPro::plus(int a, int b) {
  return intern(ProTerm::par({classes[a].rep, classes[b].rep}));
}

GlobularizedPro globularize(const ProPresentation &p, int max_size, int max_dim) {
  if (p.theory == Theory::None)
    throw Error("presentation " + p.name + " has no equality procedure");
  GlobularizedPro g{p, max_size, max_dim, terminal_coll(max_size, max_dim), {}, {}, {}};
  return g;
}

int Hom::find(int dim, int shape, int cls) const {
  auto it = std::find(classes.begin(), classes.end(), cls);
  if (it == classes.end() || shape < 0)
    return -1;
  return int(it - classes.begin()) * per_dim[dim] + shape;
}

Hom hom(const GlobularizedPro &g, const std::vector<int> &classes) {
  const Collection &t = g.shapes;
  Hom h{Collection(t.max_dim()), classes, {}};
  for (int k = 0; k <= t.max_dim(); ++k) {
    int s = t.count(k);
    h.per_dim.push_back(s);
    for (size_t c = 0; c < classes.size(); ++c)
      for (int j = 0; j < s; ++j) {
        int src = k ? int(c) * h.per_dim[k - 1] + t.carrier.src(k, j) : -1;
        int tgt = k ? int(c) * h.per_dim[k - 1] + t.carrier.tgt(k, j) : -1;
        h.coll.add(k, t.carrier.name({k, j}) + "#" + std::to_string(classes[c]), src, tgt,
                   t.ar(k, j));
      }
  }
  return h;
}

namespace {

int scheme_cell(const Collection &t, int k, const Scheme &s) {
  auto &v = t.arity[k];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  return it == v.end() || *it != s ? -1 : int(it - v.begin());
}

void report(std::vector<std::string> &out, const std::string &what,
            const std::vector<Violation> &vs, size_t limit = 1) {
  for (size_t k = 0; k < vs.size() && k < limit; ++k)
    out.push_back(what + " at (" + std::to_string(vs[k].cell.dim) + "," +
                  std::to_string(vs[k].cell.idx) + "): " + vs[k].what);
}

} // namespace

MapResult compose_map(GlobularizedPro &g, const Box &b, const Hom &left, const Hom &right,
                      const Hom &target) {
  MapResult r;
  r.map.resize(b.cells.size());
  for (size_t k = 0; k < b.cells.size(); ++k)
    for (size_t i = 0; i < b.cells[k].size(); ++i) {
      const BoxCell &c = b.cells[k][i];
      int inner = -1;
      bool single = true;
      map_labels<int, int>(c.word, [&](int d, int l) {
        int x = right.cls(d, l);
        single = single && (inner < 0 || inner == x);
        inner = x;
        return l;
      });
      int j = -1;
      if (!single) {
        r.problems.push_back({{int(k), int(i)}, "word spans several summands"});
      } else {
        int cls = g.compose(inner, left.cls(int(k), c.left));
        j = target.find(int(k), scheme_cell(g.shapes, int(k), b.coll.ar(int(k), int(i))), cls);
        if (j < 0)
          r.problems.push_back({{int(k), int(i)}, "composite " + g.classes[cls].key +
                                                      " is not in the target"});
      }
      r.map[k].push_back(j);
    }
  return r;
}

MapResult plus_map(GlobularizedPro &g, const Product &p, const Hom &a, const Hom &b,
                   const Hom &target) {
  MapResult r;
  r.map.resize(p.pairs.size());
  for (size_t k = 0; k < p.pairs.size(); ++k)
    for (size_t i = 0; i < p.pairs[k].size(); ++i) {
      auto [x, y] = p.pairs[k][i];
      int s = a.shape(int(k), x);
      int j = -1;
      if (s != b.shape(int(k), y)) {
        r.problems.push_back({{int(k), int(i)}, "summands have different schemes"});
      } else {
        int cls = g.plus(a.cls(int(k), x), b.cls(int(k), y));
        j = target.find(int(k), s, cls);
        if (j < 0)
          r.problems.push_back({{int(k), int(i)}, "sum is not in the target"});
      }
      r.map[k].push_back(j);
    }
  return r;
}

CollMap unit_map(GlobularizedPro &g, int n, const Hom &target) {
  CollMap f(g.max_dim + 1);
  int id = g.identity(n);
  for (int k = 0; k <= g.max_dim; ++k)
    f[k].push_back(target.find(k, scheme_cell(g.shapes, k, globe(k)), id));
  return f;
}

std::vector<int> default_seeds(GlobularizedPro &g) {
  std::vector<int> s;
  for (int n = 0; n <= 2; ++n)
    s.push_back(g.identity(n));
  for (auto &x : g.pro.gens)
    s.push_back(g.intern(ProTerm::gen(x.name)));
  return s;
}

std::vector<std::string> check_globular_pro_laws(GlobularizedPro &g, int max_size,
                                                 std::vector<int> seeds) {
  std::vector<std::string> out;
  if (max_size > g.max_size)
    return {"check bound exceeds the globularization bound"};
  if (seeds.empty())
    seeds = default_seeds(g);
  // Copowers by a single class all have the indexing of the terminal
  // collection, so the boxes below serve every choice of classes.
  const Collection &t = g.shapes;
  int B = max_size;
  Collection unit = unit_I(g.max_dim);
  Box tt = box(t, t, B), tt_t = box(tt.coll, t, B), t_tt = box(t, tt.coll, B);
  Bijection a = associator(tt_t, tt, t_tt, tt);
  Box it = box(unit, t, B), ti = box(t, unit, B);
  Bijection l = left_unitor(it, t), r = right_unitor(ti, t);
  report(out, "associator", a.problems);
  report(out, "left unitor", l.problems);
  report(out, "right unitor", r.problems);
  if (!out.empty())
    return out;
  auto H = [&](int c) { return hom(g, {c}); };
  auto type = [&](int c) { return g.classes[c].type; };
  auto name = [&](int c) { return print_term(g.classes[c].rep); };
  CollMap id = identity_cmap(t);

  // associativity over composable triples first ; second ; third
  for (int c1 : seeds)
    for (int c2 : seeds)
      for (int c3 : seeds) {
        if (type(c1).coarity != type(c2).arity || type(c2).coarity != type(c3).arity)
          continue;
        int c12 = g.compose(c1, c2), c23 = g.compose(c2, c3);
        Hom h1 = H(c1), h2 = H(c2), h3 = H(c3), h12 = H(c12), h23 = H(c23);
        MapResult m23 = compose_map(g, tt, h3, h2, h23);
        MapResult m12 = compose_map(g, tt, h2, h1, h12);
        std::string at = " for " + name(c1) + " ; " + name(c2) + " ; " + name(c3);
        report(out, "composition" + at, m23.problems);
        report(out, "composition" + at, m12.problems);
        if (!m23.ok() || !m12.ok())
          continue;
        MapResult lb = box_map(tt_t, tt, m23.map, id);
        MapResult rb = box_map(t_tt, tt, id, m12.map);
        report(out, "m box 1" + at, lb.problems);
        report(out, "1 box m" + at, rb.problems);
        if (!lb.ok() || !rb.ok())
          continue;
        int x = g.compose(c1, c23), y = g.compose(c12, c3);
        Hom hx = H(x), hy = H(y);
        MapResult lm = compose_map(g, tt, h23, h1, hx);
        MapResult rm = compose_map(g, tt, h3, h12, hy);
        std::vector<Violation> bad;
        for (size_t k = 0; k < tt_t.cells.size() && bad.empty(); ++k)
          for (size_t i = 0; i < tt_t.cells[k].size(); ++i) {
            int p = lm.map[k][lb.map[k][i]];
            int q = rm.map[k][rb.map[k][a.fwd[k][i]]];
            if (x != y || p != q) {
              bad.push_back({{int(k), int(i)}, g.classes[x].key + " vs " + g.classes[y].key});
              break;
            }
          }
        report(out, "associativity" + at, bad);
      }

  // unit laws
  for (int c : seeds) {
    int n = type(c).arity, m = type(c).coarity;
    int in = g.identity(n), im = g.identity(m);
    Hom hc = H(c), hin = H(in), him = H(im);
    std::string at = " for " + name(c);
    MapResult e1 = box_map(it, tt, unit_map(g, m, him), id);
    MapResult e2 = box_map(ti, tt, id, unit_map(g, n, hin));
    report(out, "e box 1" + at, e1.problems);
    report(out, "1 box e" + at, e2.problems);
    if (!e1.ok() || !e2.ok())
      continue;
    MapResult lm = compose_map(g, tt, him, hc, H(g.compose(c, im)));
    MapResult rm = compose_map(g, tt, hc, hin, H(g.compose(in, c)));
    std::vector<Violation> lv, rv;
    if (g.compose(c, im) != c)
      lv.push_back({{0, 0}, "composite class " + g.classes[g.compose(c, im)].key});
    if (g.compose(in, c) != c)
      rv.push_back({{0, 0}, "composite class " + g.classes[g.compose(in, c)].key});
    if (lv.empty())
      lv = compare_maps(compose_cmap(lm.map, e1.map), l.fwd);
    if (rv.empty())
      rv = compare_maps(compose_cmap(rm.map, e2.map), r.fwd);
    report(out, "left unit law" + at, lv);
    report(out, "right unit law" + at, rv);
  }

  // strict monoid laws of +
  Product tp = product(t, t);
  int zero = g.identity(0);
  for (int c1 : seeds) {
    for (int c2 : seeds)
      for (int c3 : seeds) {
        int lhs = g.plus(g.plus(c1, c2), c3), rhs = g.plus(c1, g.plus(c2, c3));
        if (lhs != rhs)
          out.push_back("plus associativity for " + name(c1) + " + " + name(c2) + " + " +
                        name(c3));
      }
    Hom hc = H(c1), h0 = H(zero);
    MapResult lz = plus_map(g, tp, h0, hc, hc), rz = plus_map(g, tp, hc, h0, hc);
    report(out, "plus left unit for " + name(c1), lz.problems);
    report(out, "plus right unit for " + name(c1), rz.problems);
    if (lz.ok() && rz.ok()) {
      std::vector<Violation> v;
      for (int k = 0; k <= g.max_dim && v.empty(); ++k)
        for (int i = 0; i < tp.coll.count(k); ++i)
          if (lz.map[k][i] != tp.pairs[k][i].second || rz.map[k][i] != tp.pairs[k][i].first) {
            v.push_back({{k, i}, "unit sum moves the cell"});
            break;
          }
      report(out, "plus unit for " + name(c1), v);
    }
  }

  // + commutes with composition through the interchange map
  std::vector<std::pair<int, int>> chains;
  for (int c1 : seeds)
    for (int c2 : seeds)
      if (type(c1).coarity == type(c2).arity)
        chains.emplace_back(c1, c2);
  Box pp = box(tp.coll, tp.coll, B);
  Product ttp = product(tt.coll, tt.coll);
  MapResult ic = interchange(pp, tp, tp, tt, tt, ttp);
  report(out, "interchange", ic.problems);
  if (!ic.ok())
    return out;
  for (auto [c1, c2] : chains)
    for (auto [d1, d2] : chains) {
      std::string at = " for (" + name(c1) + " ; " + name(c2) + ") + (" + name(d1) + " ; " +
                       name(d2) + ")";
      int s1 = g.plus(c1, d1), s2 = g.plus(c2, d2);
      int x = g.compose(s1, s2), y = g.plus(g.compose(c1, c2), g.compose(d1, d2));
      Hom hc1 = H(c1), hc2 = H(c2), hd1 = H(d1), hd2 = H(d2), hs1 = H(s1), hs2 = H(s2);
      Hom hx = H(x), hy = H(y), hc = H(g.compose(c1, c2)), hd = H(g.compose(d1, d2));
      MapResult p2 = plus_map(g, tp, hc2, hd2, hs2), p1 = plus_map(g, tp, hc1, hd1, hs1);
      if (!p1.ok() || !p2.ok()) {
        report(out, "plus" + at, p1.ok() ? p2.problems : p1.problems);
        continue;
      }
      MapResult bp = box_map(pp, tt, p2.map, p1.map);
      MapResult cx = compose_map(g, tt, hs2, hs1, hx);
      MapResult cc = compose_map(g, tt, hc2, hc1, hc), cd = compose_map(g, tt, hd2, hd1, hd);
      if (!bp.ok() || !cx.ok() || !cc.ok() || !cd.ok()) {
        report(out, "interchange maps" + at, bp.problems);
        continue;
      }
      MapResult sum = product_map(ttp, tp, cc.map, cd.map);
      MapResult py = plus_map(g, tp, hc, hd, hy);
      std::vector<Violation> v;
      if (x != y)
        v.push_back({{0, 0}, g.classes[x].key + " vs " + g.classes[y].key});
      for (size_t k = 0; k < pp.cells.size() && v.empty(); ++k)
        for (size_t i = 0; i < pp.cells[k].size(); ++i) {
          int p = cx.map[k][bp.map[k][i]];
          int q = py.map[k][sum.map[k][ic.map[k][i]]];
          if (p != q) {
            v.push_back({{int(k), int(i)}, "paths differ"});
            break;
          }
        }
      report(out, "plus interchange" + at, v);
    }
  return out;
}

} // namespace omegaq
