#include "omegaq/circuit.hpp"

#include <algorithm>

namespace omegaq {

int out_width(const Circuit &c, const GenTypes &t) {
  int w = c.in;
  for (auto &l : c.layers)
    w += t[l.gen].coarity - t[l.gen].arity;
  return w;
}

int max_width(const Circuit &c, const GenTypes &t) {
  int w = c.in, m = w;
  for (auto &l : c.layers) {
    w += t[l.gen].coarity - t[l.gen].arity;
    m = std::max(m, w);
  }
  return m;
}

int node_count(const Circuit &c) { return int(c.layers.size()); }

bool well_typed(const Circuit &c, const GenTypes &t) {
  int w = c.in;
  if (w < 0)
    return false;
  for (auto &l : c.layers) {
    if (l.gen < 0 || l.gen >= int(t.size()) || l.offset < 0 || l.offset + t[l.gen].arity > w)
      return false;
    w += t[l.gen].coarity - t[l.gen].arity;
  }
  return true;
}

namespace {

bool left_of(const Layer &a, const Layer &b, const GenTypes &t) {
  // b (coming after a) acts only on wires left of a's outputs
  return b.offset + t[b.gen].arity <= a.offset;
}

} // namespace

void canonicalize(Circuit &c, const GenTypes &t) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < c.layers.size(); ++i) {
      Layer a = c.layers[i], b = c.layers[i + 1];
      if (!left_of(a, b, t))
        continue;
      c.layers[i] = b;
      c.layers[i + 1] = {a.gen, a.offset - t[b.gen].arity + t[b.gen].coarity};
      changed = true;
    }
  }
}

bool is_canonical(const Circuit &c, const GenTypes &t) {
  for (size_t i = 0; i + 1 < c.layers.size(); ++i)
    if (left_of(c.layers[i], c.layers[i + 1], t))
      return false;
  return true;
}

Circuit then(const Circuit &a, const Circuit &b, const GenTypes &t) {
  if (out_width(a, t) != b.in)
    throw Error("circuits do not compose");
  Circuit c = a;
  c.layers.insert(c.layers.end(), b.layers.begin(), b.layers.end());
  canonicalize(c, t);
  return c;
}

Circuit juxtapose(const Circuit &a, const Circuit &b, const GenTypes &t) {
  Circuit c{a.in + b.in, a.layers};
  int shift = out_width(a, t);
  for (auto l : b.layers)
    c.layers.push_back({l.gen, l.offset + shift});
  canonicalize(c, t);
  return c;
}

namespace {

void lay(const ProPresentation &p, const ProTerm &term, const std::vector<std::string> &gens,
         int offset, std::vector<Layer> &out) {
  switch (term.kind) {
  case ProTerm::Kind::Gen: {
    auto it = std::find(gens.begin(), gens.end(), term.name);
    if (it == gens.end())
      throw Error("generator " + term.name + " is not a seed");
    out.push_back({int(it - gens.begin()), offset});
    return;
  }
  case ProTerm::Kind::Id:
    return;
  case ProTerm::Kind::Comp:
    for (auto &a : term.args)
      lay(p, a, gens, offset, out);
    return;
  case ProTerm::Kind::Par: {
    // right to left: a factor never shifts the wires to its left
    std::vector<int> starts;
    int at = offset;
    for (auto &a : term.args) {
      starts.push_back(at);
      at += typecheck(p, a).arity;
    }
    for (size_t k = term.args.size(); k-- > 0;)
      lay(p, term.args[k], gens, starts[k], out);
    return;
  }
  }
}

} // namespace

Circuit from_term(const ProPresentation &p, const ProTerm &term,
                  const std::vector<std::string> &gens) {
  GenTypes t;
  for (auto &g : gens) {
    const ProGenerator *x = p.find(g);
    if (!x)
      throw Error("unknown generator " + g);
    t.push_back({x->arity, x->coarity});
  }
  Circuit c{typecheck(p, term).arity, {}};
  lay(p, term, gens, 0, c.layers);
  canonicalize(c, t);
  return c;
}

ProTerm to_term(const Circuit &c, const std::vector<std::string> &gens, const GenTypes &t) {
  if (c.layers.empty())
    return ProTerm::id(c.in);
  std::vector<ProTerm> steps;
  int w = c.in;
  for (auto &l : c.layers) {
    std::vector<ProTerm> f;
    if (l.offset > 0)
      f.push_back(ProTerm::id(l.offset));
    f.push_back(ProTerm::gen(gens[l.gen]));
    int rest = w - l.offset - t[l.gen].arity;
    if (rest > 0)
      f.push_back(ProTerm::id(rest));
    steps.push_back(f.size() == 1 ? f[0] : ProTerm::par(f));
    w += t[l.gen].coarity - t[l.gen].arity;
  }
  return steps.size() == 1 ? steps[0] : ProTerm::comp(steps);
}

std::string pack(const Circuit &c) {
  std::string s(1, char(c.in));
  for (auto &l : c.layers) {
    s += char(l.gen);
    s += char(l.offset);
  }
  return s;
}

Circuit unpack(const std::string &s) {
  Circuit c{s.empty() ? 0 : int(s[0]), {}};
  for (size_t i = 1; i + 1 < s.size(); i += 2)
    c.layers.push_back({int(s[i]), int(s[i + 1])});
  return c;
}

} // namespace omegaq
