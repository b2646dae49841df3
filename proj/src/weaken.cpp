#include "omegaq/weaken.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace omegaq {

std::vector<CellPair> par_f(const GlobMap &f, int dim, int nu) {
  if (dim < 1)
    throw Error("par_f: nu must have dimension at least 1");
  const GlobSet &d = *f.dom, &c = *f.cod;
  int s = c.src(dim, nu), t = c.tgt(dim, nu);
  std::vector<int> over_s, over_t;
  for (int a = 0; a < d.count(dim - 1); ++a) {
    if (f(dim - 1, a) == s)
      over_s.push_back(a);
    if (f(dim - 1, a) == t)
      over_t.push_back(a);
  }
  std::vector<CellPair> out;
  for (int a : over_s)
    for (int b : over_t)
      if (dim - 1 == 0 || d.parallel(dim - 1, a, b))
        out.emplace_back(a, b);
  return out;
}

ContractionReport check_contraction(const GlobMap &f, const Contraction &k) {
  ContractionReport r;
  const GlobSet &d = *f.dom, &c = *f.cod;
  int top = std::min(d.max_dim(), c.max_dim());
  for (int n = 1; n <= top; ++n)
    for (int nu = 0; nu < c.count(n); ++nu)
      for (auto [a, b] : par_f(f, n, nu)) {
        std::string at = "at nu=" + c.name({n, nu}) + " pair (" + d.name({n - 1, a}) + "," +
                         d.name({n - 1, b}) + ")";
        auto it = k.kappa.find({n, nu, a, b});
        if (it == k.kappa.end()) {
          r.missing.push_back("missing kappa " + at);
          continue;
        }
        ++r.checked;
        int x = it->second;
        if (x < 0 || x >= d.count(n)) {
          r.violations.push_back("kappa " + at + " is not an " + std::to_string(n) + "-cell");
          continue;
        }
        std::string got = " (kappa = " + d.name({n, x}) + ")";
        if (d.src(n, x) != a)
          r.violations.push_back("equation 1 (source) " + at + got);
        if (d.tgt(n, x) != b)
          r.violations.push_back("equation 2 (target) " + at + got);
        if (f(n, x) != nu)
          r.violations.push_back("equation 3 (image) " + at + got);
      }
  return r;
}

namespace {

using Kind = FreeCell::Kind;

std::vector<Word> identity_nf(int n) {
  std::vector<Word> w;
  for (int k = 1; k <= n; ++k)
    w.push_back({k});
  return w;
}

bool left_of(const Layer &a, const Layer &b, const GenTypes &t) {
  return b.offset + t[b.gen].arity <= a.offset;
}

std::vector<Word> run(const TruncatedSP &sp, const Circuit &c) {
  std::vector<Word> w = identity_nf(c.in);
  for (auto &l : c.layers) {
    const ProType &ty = sp.types[l.gen];
    std::vector<Word> in(w.begin() + l.offset, w.begin() + l.offset + ty.arity);
    auto out = apply_normal_form(sp.base->pro, sp.seeds[l.gen], in);
    w.erase(w.begin() + l.offset, w.begin() + l.offset + ty.arity);
    w.insert(w.begin() + l.offset, out.begin(), out.end());
  }
  return w;
}

bool key_less(const std::string &a, const std::string &b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

const Circuit &as_zero(const FreeCell &c) {
  if (c.kind != Kind::Zero)
    throw Error("expected a 0-cell");
  return c.zero;
}

bool empty_circuit(const FreeCell &c) {
  return c.kind == Kind::Zero && c.zero.in == 0 && c.zero.layers.empty();
}

bool identity_circuit(const FreeCell &c) { return c.kind == Kind::Zero && c.zero.layers.empty(); }

// Identity cells on the empty wiring: units for the monoidal sum.
bool sum_unit(const FreeCell &c) {
  if (c.kind == Kind::Unit)
    return c.wires == 0;
  if (c.kind == Kind::IdOf)
    return sum_unit(c.args[0]);
  return empty_circuit(c);
}

std::uint64_t fnv(std::uint64_t h, const std::string &s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace

int cell_size(const Circuit &c) { return std::max(1, node_count(c)); }

int TruncatedSP::find_zero(const Circuit &c) const {
  std::string k = pack(c);
  auto it = std::lower_bound(zero.begin(), zero.end(), k, key_less);
  return it != zero.end() && *it == k ? int(it - zero.begin()) : -1;
}

int TruncatedSP::zero_size(int i) const { return std::max(1, int(zero[i].size() - 1) / 2); }

std::vector<Scheme> TruncatedSP::shapes(int dim) const {
  std::vector<Scheme> out;
  if (dim > base->shapes.max_dim())
    return out;
  for (int i = 0; i < base->shapes.count(dim); ++i)
    out.push_back(base->shapes.ar(dim, i));
  return out;
}

BaseCell TruncatedSP::class_cell(int cls, Scheme shape) const {
  return {std::move(shape), classes[cls].type, classes[cls].nf};
}

TruncatedSP generate_truncated_sp(const GlobularizedPro &base, std::vector<std::string> seeds,
                                  const GenerateOptions &opt) {
  if (opt.dim_bound < 0 || opt.dim_bound > 2)
    throw Error("dimension bound must be 0, 1 or 2");
  if (opt.size_bound < 1 || opt.width_bound < 0 || opt.width_bound > 250)
    throw Error("size bound must be positive and width bound in 0..250");
  TruncatedSP sp;
  sp.base = &base;
  sp.opt = opt;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  for (auto &s : seeds) {
    const ProGenerator *g = base.pro.find(s);
    if (!g)
      throw Error("unknown seed " + s);
    sp.types.push_back({g->arity, g->coarity});
  }
  if (seeds.size() > 250)
    throw Error("too many seeds");
  sp.seeds = seeds;
  sp.zero_bound = opt.dim_bound >= 1 ? std::max(0, opt.size_bound - 2) : opt.size_bound;
  const int W = opt.width_bound;

  // Appending a layer to a canonical circuit keeps it canonical unless the
  // last two layers commute, and every canonical circuit arises from its
  // prefix exactly once, so the levels need no deduplication.
  std::vector<TruncatedSP::Class> tmp;
  std::unordered_map<std::string, int> tmp_index;
  auto intern = [&](ProType ty, std::vector<Word> nf) {
    std::string k = nf_key(ty, nf);
    auto [it, fresh] = tmp_index.emplace(k, int(tmp.size()));
    if (fresh)
      tmp.push_back({ty, std::move(nf)});
    return it->second;
  };
  struct Node {
    std::string key;
    int cls;
  };
  std::vector<std::vector<Node>> levels(1);
  for (int n = 0; n <= W; ++n)
    levels[0].push_back({pack(Circuit{n, {}}), intern({n, n}, identity_nf(n))});
  std::mt19937 rng(opt.shuffle);
  for (int L = 0; L < sp.zero_bound && !levels[L].empty(); ++L) {
    std::vector<Node> next;
    std::vector<Node> &cur = levels[L];
    if (opt.shuffle)
      std::shuffle(cur.begin(), cur.end(), rng);
    for (size_t i = 0; i < cur.size(); ++i) {
      Circuit c = unpack(cur[i].key);
      int w = out_width(c, sp.types), mw = max_width(c, sp.types);
      const auto parent = tmp[cur[i].cls];
      for (int g = 0; g < int(seeds.size()); ++g) {
        const ProType &ty = sp.types[g];
        for (int off = 0; off + ty.arity <= w; ++off) {
          Layer l{g, off};
          if (!c.layers.empty() && left_of(c.layers.back(), l, sp.types))
            continue;
          int nw = w - ty.arity + ty.coarity;
          if (std::max(mw, nw) > W) {
            ++sp.cut_by_width;
            continue;
          }
          std::vector<Word> nf = parent.nf;
          std::vector<Word> in(nf.begin() + off, nf.begin() + off + ty.arity);
          auto out = apply_normal_form(base.pro, seeds[g], in);
          nf.erase(nf.begin() + off, nf.begin() + off + ty.arity);
          nf.insert(nf.begin() + off, out.begin(), out.end());
          Circuit d = c;
          d.layers.push_back(l);
          next.push_back({pack(d), intern({c.in, nw}, std::move(nf))});
        }
      }
    }
    levels.push_back(std::move(next));
  }
  if (int(levels.size()) == sp.zero_bound + 1)
    sp.cut_by_size = long(levels.back().size());

  std::vector<Node> all;
  for (auto &lv : levels)
    for (auto &n : lv)
      all.push_back(std::move(n));
  levels.clear();
  std::sort(all.begin(), all.end(),
            [](const Node &a, const Node &b) { return key_less(a.key, b.key); });
  std::vector<int> remap(tmp.size(), -1);
  sp.zero.reserve(all.size());
  sp.zero_class.reserve(all.size());
  for (auto &n : all) {
    int &r = remap[n.cls];
    if (r < 0) {
      r = int(sp.classes.size());
      sp.class_index[nf_key(tmp[n.cls].type, tmp[n.cls].nf)] = r;
      sp.classes.push_back(std::move(tmp[n.cls]));
      sp.fiber.emplace_back();
    }
    sp.fiber[r].push_back(int(sp.zero.size()));
    sp.zero.push_back(std::move(n.key));
    sp.zero_class.push_back(r);
  }
  return sp;
}

FreeCell normalize(const TruncatedSP &sp, FreeCell c) {
  for (auto &a : c.args)
    a = normalize(sp, std::move(a));
  switch (c.kind) {
  case Kind::Zero:
    canonicalize(c.zero, sp.types);
    return c;
  case Kind::Unit:
  case Kind::IdOf:
  case Kind::Lift:
    return c;
  case Kind::Comp: {
    const FreeCell &x = c.args[0];
    if (c.args.size() == 2 && x.kind == Kind::Unit && c.args[1].kind != Kind::Zero)
      return c.args[1];
    bool units = c.args.size() >= 2;
    for (size_t i = 1; i < c.args.size(); ++i)
      units = units && (c.args[i].kind == Kind::Unit || identity_circuit(c.args[i]));
    if (units)
      return x;
    if (c.args.size() == 2 && x.kind == Kind::IdOf && x.args[0].kind == Kind::Zero &&
        c.args[1].kind == Kind::Zero)
      return FreeCell::id_of(FreeCell::of(then(c.args[1].zero, x.args[0].zero, sp.types)));
    return c;
  }
  case Kind::Mon: {
    FreeCell a = c.args[0], b = c.args[1];
    if (a.kind == Kind::Zero && b.kind == Kind::Zero)
      return FreeCell::of(juxtapose(a.zero, b.zero, sp.types));
    if (a.kind == Kind::Unit && b.kind == Kind::Unit)
      return FreeCell::unit(a.wires + b.wires);
    if (a.kind == Kind::IdOf && b.kind == Kind::IdOf)
      return FreeCell::id_of(normalize(sp, FreeCell::mon(a.args[0], b.args[0])));
    if (a.kind == Kind::Mon)
      return normalize(sp, FreeCell::mon(a.args[0], FreeCell::mon(a.args[1], b)));
    if (sum_unit(a) || sum_unit(b)) {
      CellInfo ia = describe(sp, a), ib = describe(sp, b);
      if (ia.image.shape == ib.image.shape)
        return sum_unit(a) ? b : a;
    }
    return c;
  }
  }
  return c;
}

CellInfo describe(const TruncatedSP &sp, const FreeCell &c0) {
  FreeCell c = normalize(sp, c0);
  CellInfo r;
  switch (c.kind) {
  case Kind::Zero: {
    if (!well_typed(c.zero, sp.types))
      throw Error("ill-typed circuit");
    r.type = {c.zero.in, out_width(c.zero, sp.types)};
    int i = sp.find_zero(c.zero);
    r.image = {point(Unit{}), r.type, i >= 0 ? sp.classes[sp.zero_class[i]].nf : run(sp, c.zero)};
    r.size = cell_size(c.zero);
    return r;
  }
  case Kind::Unit: {
    if (c.wires < 0)
      throw Error("negative unit");
    if (sp.opt.dim_bound < 1)
      throw Error("unit 1-cell beyond the dimension bound");
    FreeCell id = FreeCell::of(Circuit{c.wires, {}});
    r.dim = 1;
    r.type = {c.wires, c.wires};
    r.boundary = {id, id};
    r.image = {globe(1), r.type, identity_nf(c.wires)};
    r.size = 1;
    return r;
  }
  case Kind::IdOf: {
    CellInfo x = describe(sp, c.args[0]);
    if (x.dim + 1 > sp.opt.dim_bound)
      throw Error("identity beyond the dimension bound");
    r.dim = x.dim + 1;
    r.type = x.type;
    r.boundary = {c.args[0], c.args[0]};
    r.image = {identity_lift(x.image.shape, r.dim), x.type, x.image.nf};
    r.size = 1 + x.size;
    return r;
  }
  case Kind::Lift: {
    const BaseCell &nu = c.nu;
    if (nu.shape.dim < 1 || nu.shape.dim > sp.opt.dim_bound)
      throw Error("lift over a cell outside dimensions 1.." + std::to_string(sp.opt.dim_bound));
    if (size(nu.shape) > sp.base->max_size)
      throw Error("lift over a scheme beyond the base bound");
    CellInfo a = describe(sp, c.args[0]), b = describe(sp, c.args[1]);
    if (a.dim != nu.shape.dim - 1 || b.dim != a.dim)
      throw Error("lift ends have the wrong dimension");
    if (a.dim >= 1 && a.boundary != b.boundary)
      throw Error("lift ends are not parallel");
    if (!(a.image == BaseCell{boundary(nu.shape, Side::Source), nu.type, nu.nf}) ||
        !(b.image == BaseCell{boundary(nu.shape, Side::Target), nu.type, nu.nf}))
      throw Error("lift ends do not lie over the boundary of " + print_base(nu));
    r.dim = nu.shape.dim;
    r.type = nu.type;
    r.boundary = {c.args[0], c.args[1]};
    r.image = nu;
    r.size = 1 + a.size + b.size;
    return r;
  }
  case Kind::Comp: {
    CellInfo x = describe(sp, c.args[0]);
    if (x.dim != 1)
      throw Error("composition is defined on 1-cells");
    int k = int(x.image.shape.kids.size());
    int len = int(c.args.size()) - 1;
    if (len != std::max(k, 1))
      throw Error("word length does not match the arity of the operation");
    std::vector<CellInfo> ws;
    for (int i = 1; i <= len; ++i)
      ws.push_back(describe(sp, c.args[i]));
    for (auto &w : ws)
      if (w.type.coarity != x.type.arity || w.type.arity != ws[0].type.arity)
        throw Error("word does not type against the operation");
    std::vector<Word> nf = nf_compose(ws[0].image.nf, x.image.nf);
    const Circuit &xs = as_zero(x.boundary[0]), &xt = as_zero(x.boundary[1]);
    r.dim = 1;
    r.type = {ws[0].type.arity, x.type.coarity};
    r.size = 1 + x.size;
    int edges = 0;
    if (k == 0) {
      if (ws[0].dim != 0)
        throw Error("an identity-shaped operation takes a single 0-cell");
      const Circuit &v = as_zero(c.args[1]);
      r.boundary = {FreeCell::of(then(v, xs, sp.types)), FreeCell::of(then(v, xt, sp.types))};
      r.size += ws[0].size;
    } else {
      for (int i = 0; i < len; ++i) {
        if (ws[i].dim != 1 || ws[i].image.nf != ws[0].image.nf)
          throw Error("word is not a path of 1-cells in one summand");
        if (i && !(ws[i].boundary[0] == ws[i - 1].boundary[1]))
          throw Error("word is not composable at position " + std::to_string(i));
        edges += int(ws[i].image.shape.kids.size());
        r.size += ws[i].size;
      }
      r.boundary = {FreeCell::of(then(as_zero(ws[0].boundary[0]), xs, sp.types)),
                    FreeCell::of(then(as_zero(ws.back().boundary[1]), xt, sp.types))};
    }
    for (auto &b : r.boundary)
      b = normalize(sp, b);
    r.image = {path(edges), r.type, nf};
    return r;
  }
  case Kind::Mon: {
    CellInfo a = describe(sp, c.args[0]), b = describe(sp, c.args[1]);
    if (a.dim != b.dim || !(a.image.shape == b.image.shape))
      throw Error("sum of cells of different shapes");
    r.dim = a.dim;
    r.type = {a.type.arity + b.type.arity, a.type.coarity + b.type.coarity};
    for (int s = 0; s < 2 && r.dim >= 1; ++s)
      r.boundary.push_back(normalize(sp, FreeCell::mon(a.boundary[s], b.boundary[s])));
    r.image = {a.image.shape, r.type, nf_plus(a.image.nf, a.type.arity, b.image.nf)};
    r.size = 1 + a.size + b.size;
    return r;
  }
  }
  throw Error("unknown cell");
}

std::string print_base(const BaseCell &b) {
  std::string s = "(" + print_scheme(b.shape) + ",";
  for (size_t i = 0; i < b.nf.size(); ++i)
    s += (i ? "|" : "") + print_word(b.nf[i]);
  return s + ")";
}

std::string print_cell(const TruncatedSP &sp, const FreeCell &c) {
  switch (c.kind) {
  case Kind::Zero:
    return print_term(to_term(c.zero, sp.seeds, sp.types));
  case Kind::Unit:
    return "unit(" + std::to_string(c.wires) + ")";
  case Kind::IdOf:
    return "idof(" + print_cell(sp, c.args[0]) + ")";
  case Kind::Lift:
    return "lift" + print_base(c.nu) + "(" + print_cell(sp, c.args[0]) + " => " +
           print_cell(sp, c.args[1]) + ")";
  case Kind::Comp: {
    std::string s = "comp(" + print_cell(sp, c.args[0]) + ";";
    for (size_t i = 1; i < c.args.size(); ++i)
      s += (i > 1 ? ", " : " ") + print_cell(sp, c.args[i]);
    return s + ")";
  }
  case Kind::Mon:
    return "mon(" + print_cell(sp, c.args[0]) + ", " + print_cell(sp, c.args[1]) + ")";
  }
  return "?";
}

std::string dump_line(const TruncatedSP &sp, const FreeCell &c) {
  CellInfo i = describe(sp, c);
  return "cell " + std::to_string(i.dim) + " " + std::to_string(i.type.arity) + "->" +
         std::to_string(i.type.coarity) + " " + print_cell(sp, normalize(sp, c)) +
         " image=" + print_base(i.image);
}

FreeCell canonical_lift(const BaseCell &nu, const FreeCell &a, const FreeCell &b) {
  return FreeCell::lift(nu, a, b);
}

LiftResult find_lift(const TruncatedSP &sp, const ProTerm &t1, const ProTerm &t2) {
  const ProPresentation &p = sp.base->pro;
  ProType ty = typecheck(p, t1);
  if (!(typecheck(p, t2) == ty))
    throw Error("terms have different types");
  std::vector<Word> nf = normal_form(p, t1);
  if (normal_form(p, t2) != nf)
    throw Error("terms have different images: " + nf_key(ty, nf) + " vs " +
                normal_form_key(p, t2));
  Circuit a = from_term(p, t1, sp.seeds), b = from_term(p, t2, sp.seeds);
  canonicalize(a, sp.types);
  canonicalize(b, sp.types);
  LiftResult r;
  r.degenerate = a == b;
  r.size = 1 + cell_size(a) + cell_size(b);
  if (sp.opt.dim_bound < 1)
    r.reason = "dimension bound 0 has no 1-cells";
  else if (sp.find_zero(a) < 0 || sp.find_zero(b) < 0)
    r.reason = "a 0-cell lies outside the generated bound";
  else if (r.size > sp.opt.size_bound)
    r.reason = "lift of size " + std::to_string(r.size) + " exceeds the size bound";
  else
    r.cell = canonical_lift({globe(1), ty, nf}, FreeCell::of(a), FreeCell::of(b));
  return r;
}

namespace {

struct OneCell {
  Scheme shape;
  int src, tgt; // 0-cell indices
  int size;
  FreeCell cell;
};

// 1-cells over a class built from one generator: units, identities on
// 0-cells and lifts between 0-cells.
std::vector<OneCell> one_cells(const TruncatedSP &sp, int cls, int max_size) {
  std::vector<OneCell> out;
  const auto &k = sp.classes[cls];
  const auto &fib = sp.fiber[cls];
  if (k.type.arity == k.type.coarity && k.nf == identity_nf(k.type.arity) && max_size >= 1) {
    int id = sp.find_zero(Circuit{k.type.arity, {}});
    if (id >= 0)
      out.push_back({globe(1), id, id, 1, FreeCell::unit(k.type.arity)});
  }
  for (int z : fib)
    if (1 + sp.zero_size(z) <= max_size)
      out.push_back({path(0), z, z, 1 + sp.zero_size(z), FreeCell::id_of(FreeCell::of(sp.circuit(z)))});
  for (auto &tau : sp.shapes(1))
    for (int a : fib)
      for (int b : fib) {
        int s = 1 + sp.zero_size(a) + sp.zero_size(b);
        if (s <= max_size)
          out.push_back({tau, a, b, s,
                         FreeCell::lift(sp.class_cell(cls, tau), FreeCell::of(sp.circuit(a)),
                                        FreeCell::of(sp.circuit(b)))});
      }
  return out;
}

// Every nonzero base cell nu within the bounds and every pair of Par(nu)
// whose lift fits the size bound.
template <class F> void for_each_par(const TruncatedSP &sp, int dim, F &&f) {
  const int S = sp.opt.size_bound;
  if (dim == 1) {
    auto taus = sp.shapes(1);
    for (int c = 0; c < int(sp.classes.size()); ++c) {
      const auto &fib = sp.fiber[c];
      std::vector<FreeCell> cells;
      for (int z : fib)
        cells.push_back(FreeCell::of(sp.circuit(z)));
      for (auto &tau : taus) {
        BaseCell nu = sp.class_cell(c, tau);
        // fibres are in size order
        for (size_t i = 0; i < fib.size(); ++i)
          for (size_t j = 0; j < fib.size(); ++j) {
            if (1 + sp.zero_size(fib[i]) + sp.zero_size(fib[j]) > S)
              break;
            f(nu, cells[i], cells[j]);
          }
      }
    }
    return;
  }
  auto sigmas = sp.shapes(2);
  for (int c = 0; c < int(sp.classes.size()); ++c) {
    auto ones = one_cells(sp, c, S - 2);
    std::map<std::tuple<Scheme, int, int>, std::vector<const OneCell *>> bucket;
    for (auto &o : ones)
      bucket[{o.shape, o.src, o.tgt}].push_back(&o);
    for (auto &sigma : sigmas) {
      BaseCell nu = sp.class_cell(c, sigma);
      Scheme s = boundary(sigma, Side::Source), t = boundary(sigma, Side::Target);
      for (auto &[key, lo] : bucket) {
        if (!(std::get<0>(key) == s))
          continue;
        auto hi = bucket.find({t, std::get<1>(key), std::get<2>(key)});
        if (hi == bucket.end())
          continue;
        for (auto *a : lo)
          for (auto *b : hi->second)
            if (1 + a->size + b->size <= S)
              f(nu, a->cell, b->cell);
      }
    }
  }
}

} // namespace

ContractionReport check_contraction(const TruncatedSP &sp, const KappaFn &kappa) {
  ContractionReport r;
  for (int dim = 1; dim <= sp.opt.dim_bound; ++dim)
    for_each_par(sp, dim, [&](const BaseCell &nu, const FreeCell &a, const FreeCell &b) {
      auto at = [&] {
        return "at nu=" + print_base(nu) + " pair (" + print_cell(sp, a) + ", " +
               print_cell(sp, b) + ")";
      };
      std::optional<FreeCell> k = kappa ? kappa(nu, a, b) : canonical_lift(nu, a, b);
      if (!k) {
        r.missing.push_back("missing kappa " + at());
        return;
      }
      ++r.checked;
      CellInfo i;
      try {
        i = describe(sp, *k);
      } catch (const Error &e) {
        r.violations.push_back("kappa " + at() + " is ill-formed: " + e.what());
        return;
      }
      if (i.dim != dim) {
        r.violations.push_back("kappa " + at() + " has dimension " + std::to_string(i.dim));
        return;
      }
      if (!(i.boundary[0] == normalize(sp, a)))
        r.violations.push_back("equation 1 (source) " + at());
      if (!(i.boundary[1] == normalize(sp, b)))
        r.violations.push_back("equation 2 (target) " + at());
      if (!(i.image == nu))
        r.violations.push_back("equation 3 (image) " + at());
    });
  return r;
}

Inventory inventory(const TruncatedSP &sp) {
  Inventory inv;
  inv.zero = long(sp.zero.size());
  inv.classes = long(sp.classes.size());
  inv.zero_by_size.assign(sp.zero_bound + 1, 0);
  std::uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < sp.zero.size(); ++i) {
    ++inv.zero_by_size[std::min(sp.zero_bound, sp.zero_size(int(i)))];
    const auto &k = sp.classes[sp.zero_class[i]];
    h = fnv(fnv(h, sp.zero[i]), nf_key(k.type, k.nf));
  }
  inv.digest = h;
  inv.lifts.assign(sp.opt.dim_bound + 1, 0);
  inv.degenerate.assign(sp.opt.dim_bound + 1, 0);
  const int S = sp.opt.size_bound;
  if (sp.opt.dim_bound >= 1) {
    long taus = long(sp.shapes(1).size());
    for (auto &fib : sp.fiber) {
      std::vector<long> by(S + 1, 0);
      for (int z : fib)
        if (sp.zero_size(z) <= S)
          ++by[sp.zero_size(z)];
      for (int s = 1; s <= S; ++s)
        for (int t = 1; 1 + s + t <= S; ++t)
          inv.lifts[1] += taus * by[s] * by[t];
      for (int s = 1; 1 + 2 * s <= S; ++s)
        inv.degenerate[1] += taus * by[s];
    }
  }
  if (sp.opt.dim_bound >= 2)
    for_each_par(sp, 2, [&](const BaseCell &, const FreeCell &a, const FreeCell &b) {
      ++inv.lifts[2];
      if (a == b)
        ++inv.degenerate[2];
    });
  return inv;
}

} // namespace omegaq
