#include "omegaq/pro.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "omegaq/group.hpp"
#include "omegaq/quandle.hpp"

namespace omegaq {

namespace {

struct TermParser {
  const std::string &s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i]))
      ++i;
  }
  [[noreturn]] void fail(const std::string &what) {
    throw Error("term: " + what + " at column " + std::to_string(i + 1));
  }
  std::string ident() {
    skip();
    size_t b = i;
    while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
      ++i;
    if (b == i)
      fail("expected a name");
    return s.substr(b, i - b);
  }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c)
      fail(std::string("expected '") + c + "'");
    ++i;
  }
  ProTerm term() {
    std::string w = ident();
    skip();
    if (w == "id") {
      expect('(');
      std::string n = ident();
      for (char c : n)
        if (!std::isdigit((unsigned char)c))
          fail("id expects a number");
      expect(')');
      return ProTerm::id(std::stoi(n));
    }
    if (w == "comp" || w == "par") {
      expect('(');
      std::vector<ProTerm> args{term()};
      skip();
      while (i < s.size() && s[i] == ',') {
        ++i;
        args.push_back(term());
        skip();
      }
      expect(')');
      return w == "comp" ? ProTerm::comp(std::move(args)) : ProTerm::par(std::move(args));
    }
    if (std::isdigit((unsigned char)w[0]))
      fail("generator names start with a letter");
    return ProTerm::gen(w);
  }
};

ProType check(const ProPresentation &p, const ProTerm &t, const std::string &at) {
  switch (t.kind) {
  case ProTerm::Kind::Gen: {
    const ProGenerator *g = p.find(t.name);
    if (!g)
      throw Error("unknown generator " + t.name + " at " + at);
    return {g->arity, g->coarity};
  }
  case ProTerm::Kind::Id:
    if (t.n < 0)
      throw Error("negative identity at " + at);
    return {t.n, t.n};
  case ProTerm::Kind::Par: {
    ProType r;
    for (size_t k = 0; k < t.args.size(); ++k) {
      ProType a = check(p, t.args[k], at + "." + std::to_string(k + 1));
      r.arity += a.arity;
      r.coarity += a.coarity;
    }
    return r;
  }
  case ProTerm::Kind::Comp: {
    ProType r = check(p, t.args.at(0), at + ".1");
    for (size_t k = 1; k < t.args.size(); ++k) {
      ProType a = check(p, t.args[k], at + "." + std::to_string(k + 1));
      if (a.arity != r.coarity)
        throw Error("composition mismatch at " + at + ": coarity " +
                    std::to_string(r.coarity) + " into arity " + std::to_string(a.arity));
      r.coarity = a.coarity;
    }
    return r;
  }
  }
  return {};
}

std::string tuple(const std::vector<int> &v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

ProPresentation presentation(std::string name, std::vector<ProGenerator> gens,
                             const std::vector<std::array<const char *, 3>> &rels, Theory th) {
  ProPresentation p{std::move(name), std::move(gens), {}, th};
  for (auto &r : rels)
    p.rels.push_back({r[0], parse_term(r[1]), parse_term(r[2])});
  return p;
}

// Comonoid and symmetry laws plus naturality of dup, drop and swap for a
// generator with one output.
void add_naturality(std::vector<std::string> &keep, const ProGenerator &g) {
  static const char *dup_n[] = {"id(0)", "dup", "comp(par(dup,dup),par(id(1),swap,id(1)))"};
  static const char *drop_n[] = {"id(0)", "drop", "par(drop,drop)"};
  static const char *across_l[] = {"id(1)", "swap", "comp(par(id(1),swap),par(swap,id(1)))"};
  static const char *across_r[] = {"id(1)", "swap", "comp(par(swap,id(1)),par(id(1),swap))"};
  const std::string &x = g.name;
  int n = g.arity;
  auto add = [&](std::string name, std::string l, std::string r) {
    keep.push_back(name);
    keep.push_back(l);
    keep.push_back(r);
  };
  add("dup_natural_" + x, "comp(" + x + ",dup)", "comp(" + std::string(dup_n[n]) + ",par(" + x + "," + x + "))");
  add("drop_natural_" + x, "comp(" + x + ",drop)", drop_n[n]);
  add("swap_natural_left_" + x, "comp(par(" + x + ",id(1)),swap)",
      "comp(" + std::string(across_l[n]) + ",par(id(1)," + x + "))");
  add("swap_natural_right_" + x, "comp(par(id(1)," + x + "),swap)",
      "comp(" + std::string(across_r[n]) + ",par(" + x + ",id(1)))");
}

const std::vector<std::array<const char *, 3>> &comonoid_laws() {
  static const std::vector<std::array<const char *, 3>> r = {
      {"coassociativity", "comp(dup,par(dup,id(1)))", "comp(dup,par(id(1),dup))"},
      {"counit_left", "comp(dup,par(drop,id(1)))", "id(1)"},
      {"counit_right", "comp(dup,par(id(1),drop))", "id(1)"},
      {"cocommutativity", "comp(dup,swap)", "dup"},
      {"swap_involution", "comp(swap,swap)", "id(2)"},
      {"yang_baxter", "comp(par(swap,id(1)),par(id(1),swap),par(swap,id(1)))",
       "comp(par(id(1),swap),par(swap,id(1)),par(id(1),swap))"},
  };
  return r;
}

ProPresentation with_cartesian(std::string name, std::vector<ProGenerator> ops,
                               std::vector<std::array<const char *, 3>> rels, Theory th) {
  std::vector<ProGenerator> gens = ops;
  gens.push_back({"dup", 1, 2});
  gens.push_back({"swap", 2, 2});
  gens.push_back({"drop", 1, 0});
  for (auto &r : comonoid_laws())
    rels.push_back(r);
  ProPresentation p = presentation(std::move(name), gens, rels, th);
  for (auto &g : ops) {
    std::vector<std::string> s;
    add_naturality(s, g);
    for (size_t k = 0; k < s.size(); k += 3)
      p.rels.push_back({s[k], parse_term(s[k + 1]), parse_term(s[k + 2])});
  }
  return p;
}

} // namespace

ProTerm parse_term(const std::string &text) {
  TermParser p{text};
  ProTerm t = p.term();
  p.skip();
  if (p.i != text.size())
    p.fail("trailing input");
  return t;
}

std::string print_term(const ProTerm &t) {
  switch (t.kind) {
  case ProTerm::Kind::Gen:
    return t.name;
  case ProTerm::Kind::Id:
    return "id(" + std::to_string(t.n) + ")";
  default: {
    std::string s = t.kind == ProTerm::Kind::Par ? "par(" : "comp(";
    for (size_t k = 0; k < t.args.size(); ++k)
      s += (k ? "," : "") + print_term(t.args[k]);
    return s + ")";
  }
  }
}

int term_size(const ProTerm &t) {
  int n = t.kind == ProTerm::Kind::Gen;
  for (auto &a : t.args)
    n += term_size(a);
  return n;
}

const ProGenerator *ProPresentation::find(const std::string &g) const {
  for (auto &x : gens)
    if (x.name == g)
      return &x;
  return nullptr;
}

ProType typecheck(const ProPresentation &p, const ProTerm &t) { return check(p, t, "root"); }

std::vector<std::string> validate(const ProPresentation &p) {
  std::vector<std::string> out;
  for (size_t i = 0; i < p.gens.size(); ++i) {
    if (p.gens[i].arity < 0 || p.gens[i].coarity < 0)
      out.push_back("generator " + p.gens[i].name + " has a negative type");
    for (size_t j = 0; j < i; ++j)
      if (p.gens[j].name == p.gens[i].name)
        out.push_back("duplicate generator " + p.gens[i].name);
  }
  for (auto &r : p.rels) {
    try {
      ProType a = typecheck(p, r.lhs), b = typecheck(p, r.rhs);
      if (!(a == b))
        out.push_back("relation " + r.name + ": sides have types " + std::to_string(a.arity) +
                      "->" + std::to_string(a.coarity) + " and " + std::to_string(b.arity) +
                      "->" + std::to_string(b.coarity));
    } catch (const Error &e) {
      out.push_back("relation " + r.name + ": " + e.what());
    }
  }
  return out;
}

ProPresentation quandle_pro() {
  return with_cartesian(
      "quandle", {{"tri", 2, 1}, {"tri_inv", 2, 1}},
      {
          {"idempotence", "comp(dup,tri)", "id(1)"},
          {"right_inverse", "comp(par(id(1),dup),par(tri,id(1)),tri_inv)", "par(id(1),drop)"},
          {"left_inverse", "comp(par(id(1),dup),par(tri_inv,id(1)),tri)", "par(id(1),drop)"},
          {"self_distributivity", "comp(par(tri,id(1)),tri)",
           "comp(par(id(1),id(1),dup),par(id(1),swap,id(1)),par(tri,tri),tri)"},
      },
      Theory::Quandle);
}

ProPresentation group_pro() {
  return with_cartesian(
      "group", {{"mul", 2, 1}, {"unit", 0, 1}, {"inv", 1, 1}},
      {
          {"associativity", "comp(par(mul,id(1)),mul)", "comp(par(id(1),mul),mul)"},
          {"left_unit", "comp(par(unit,id(1)),mul)", "id(1)"},
          {"right_unit", "comp(par(id(1),unit),mul)", "id(1)"},
          {"left_inverse", "comp(dup,par(inv,id(1)),mul)", "comp(drop,unit)"},
          {"right_inverse", "comp(dup,par(id(1),inv),mul)", "comp(drop,unit)"},
      },
      Theory::Group);
}

ProPresentation parse_presentation(const std::string &text) {
  ProPresentation p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<int> rel_lines;
  int theory_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw))
      continue;
    if (kw == "name") {
      if (!(ls >> p.name))
        throw ParseError(lineno, "expected a presentation name");
    } else if (kw == "theory") {
      std::string t;
      ls >> t;
      if (t == "quandle")
        p.theory = Theory::Quandle;
      else if (t == "group")
        p.theory = Theory::Group;
      else
        throw ParseError(lineno, "expected 'theory quandle' or 'theory group'");
      theory_line = lineno;
    } else if (kw == "gen") {
      ProGenerator g;
      std::string extra;
      if (!(ls >> g.name >> g.arity >> g.coarity) || (ls >> extra))
        throw ParseError(lineno, "expected 'gen NAME ARITY COARITY'");
      if (g.arity < 0 || g.coarity < 0)
        throw ParseError(lineno, "negative arity");
      if (p.find(g.name))
        throw ParseError(lineno, "duplicate generator " + g.name);
      p.gens.push_back(g);
    } else if (kw == "rel") {
      std::string name, rest;
      if (!(ls >> name))
        throw ParseError(lineno, "expected 'rel NAME LHS = RHS'");
      std::getline(ls, rest);
      auto eq = rest.find('=');
      if (eq == std::string::npos)
        throw ParseError(lineno, "relation without '='");
      try {
        p.rels.push_back({name, parse_term(rest.substr(0, eq)), parse_term(rest.substr(eq + 1))});
      } catch (const ParseError &) {
        throw;
      } catch (const Error &e) {
        throw ParseError(lineno, e.what());
      }
      rel_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown keyword " + kw);
    }
  }
  for (size_t k = 0; k < p.rels.size(); ++k) {
    auto &r = p.rels[k];
    try {
      if (!(typecheck(p, r.lhs) == typecheck(p, r.rhs)))
        throw ParseError(rel_lines[k], "relation " + r.name + ": sides have different types");
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(rel_lines[k], e.what());
    }
  }
  // the decision procedure is only sound on the built-in signature
  if (p.theory != Theory::None) {
    ProPresentation ref = p.theory == Theory::Quandle ? quandle_pro() : group_pro();
    bool same = ref.gens.size() == p.gens.size();
    for (auto &g : ref.gens) {
      auto *h = p.find(g.name);
      same = same && h && h->arity == g.arity && h->coarity == g.coarity;
    }
    if (!same)
      throw ParseError(theory_line, "generators differ from the " + ref.name + " signature");
    for (size_t k = 0; k < p.rels.size(); ++k)
      if (normal_form_key(p, p.rels[k].lhs) != normal_form_key(p, p.rels[k].rhs))
        throw ParseError(rel_lines[k], "relation " + p.rels[k].name + " fails in the " +
                                           ref.name + " theory");
  }
  return p;
}

std::string print_presentation(const ProPresentation &p) {
  std::string s;
  if (!p.name.empty())
    s += "name " + p.name + "\n";
  if (p.theory != Theory::None)
    s += std::string("theory ") + (p.theory == Theory::Quandle ? "quandle" : "group") + "\n";
  for (auto &g : p.gens)
    s += "gen " + g.name + " " + std::to_string(g.arity) + " " + std::to_string(g.coarity) + "\n";
  for (auto &r : p.rels)
    s += "rel " + r.name + " " + print_term(r.lhs) + " = " + print_term(r.rhs) + "\n";
  return s;
}

bool is_cartesian(const std::string &name, ProType t) {
  return (name == "dup" && t == ProType{1, 2}) || (name == "swap" && t == ProType{2, 2}) ||
         (name == "drop" && t == ProType{1, 0});
}

int encode(const std::vector<int> &in, int carrier) {
  int c = 0;
  for (int x : in)
    c = c * carrier + x;
  return c;
}

std::vector<int> decode(int code, int len, int carrier) {
  std::vector<int> v(len);
  for (int k = len - 1; k >= 0; --k) {
    v[k] = code % carrier;
    code /= carrier;
  }
  return v;
}

std::vector<int> FiniteModel::apply(const ProPresentation &p, const std::string &g,
                                    const std::vector<int> &in) const {
  auto it = table.find(g);
  if (it != table.end())
    return it->second.at(encode(in, carrier));
  const ProGenerator *gen = p.find(g);
  if (gen && is_cartesian(g, {gen->arity, gen->coarity}))
    return cartesian(g, in);
  throw Error("model " + name + " has no table for " + g);
}

std::vector<int> eval(const ProPresentation &p, const ProTerm &t, const FiniteModel &m,
                      const std::vector<int> &input) {
  ProType ty = typecheck(p, t);
  if (int(input.size()) != ty.arity)
    throw Error("eval: term has arity " + std::to_string(ty.arity) + ", input has " +
                std::to_string(input.size()) + " entries");
  for (int x : input)
    if (x < 0 || x >= m.carrier)
      throw Error("eval: input outside the carrier");
  return interpret<int>(p, t, input, [&](const std::string &g, const std::vector<int> &in) {
    return m.apply(p, g, in);
  });
}

std::vector<std::string> check_model(const ProPresentation &p, const FiniteModel &m) {
  std::vector<std::string> out;
  for (auto &g : p.gens) {
    auto it = m.table.find(g.name);
    if (it == m.table.end()) {
      if (!is_cartesian(g.name, {g.arity, g.coarity}))
        out.push_back("generator " + g.name + " has no table");
      continue;
    }
    if (long(it->second.size()) != ipow(m.carrier, g.arity)) {
      out.push_back("table " + g.name + " is not total");
      continue;
    }
    for (auto &row : it->second) {
      bool ok = int(row.size()) == g.coarity;
      for (int x : row)
        ok = ok && x >= 0 && x < m.carrier;
      if (!ok) {
        out.push_back("table " + g.name + " has a malformed row");
        break;
      }
    }
  }
  if (!out.empty())
    return out;
  for (auto &r : p.rels) {
    int n = typecheck(p, r.lhs).arity;
    long total = ipow(m.carrier, n);
    for (long c = 0; c < total; ++c) {
      std::vector<int> in = decode(int(c), n, m.carrier);
      auto a = eval(p, r.lhs, m, in), b = eval(p, r.rhs, m, in);
      if (a != b) {
        out.push_back("relation " + r.name + " at " + tuple(in) + ": " + tuple(a) + " vs " +
                      tuple(b));
        break;
      }
    }
  }
  return out;
}

FiniteModel parse_model(const ProPresentation &p, const std::string &text) {
  FiniteModel m;
  std::istringstream in(text);
  std::string line;
  int lineno = 0, table_line = 0;
  const ProGenerator *cur = nullptr;
  std::vector<bool> seen;
  auto close = [&]() {
    if (!cur)
      return;
    for (bool b : seen)
      if (!b)
        throw ParseError(table_line, "table " + cur->name + " is not total");
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw))
      continue;
    if (kw == "carrier") {
      if (m.carrier || !(ls >> m.carrier) || m.carrier < 1)
        throw ParseError(lineno, "expected 'carrier N' once");
      continue;
    }
    if (kw == "name") {
      ls >> m.name;
      continue;
    }
    if (kw == "table") {
      close();
      std::string g;
      if (!(ls >> g) || !(cur = p.find(g)))
        throw ParseError(lineno, "unknown generator in table header");
      if (!m.carrier)
        throw ParseError(lineno, "table before carrier");
      if (m.table.count(g))
        throw ParseError(lineno, "second table for " + g);
      table_line = lineno;
      long rows = ipow(m.carrier, cur->arity);
      m.table[g].assign(rows, {});
      seen.assign(rows, false);
      continue;
    }
    if (!cur)
      throw ParseError(lineno, "row outside a table");
    std::vector<int> ins, outs;
    bool after = false;
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      if (tok == ":") {
        if (after)
          throw ParseError(lineno, "two ':' in a row");
        after = true;
        continue;
      }
      int v;
      try {
        size_t used;
        v = std::stoi(tok, &used);
        if (used != tok.size())
          throw std::invalid_argument(tok);
      } catch (const std::exception &) {
        throw ParseError(lineno, "bad entry " + tok);
      }
      if (v < 0 || v >= m.carrier)
        throw ParseError(lineno, "entry outside the carrier");
      (after ? outs : ins).push_back(v);
    }
    if (!after || int(ins.size()) != cur->arity || int(outs.size()) != cur->coarity)
      throw ParseError(lineno, "row does not match the type of " + cur->name);
    int c = encode(ins, m.carrier);
    if (seen[c])
      throw ParseError(lineno, "repeated input row");
    seen[c] = true;
    m.table[cur->name][c] = outs;
  }
  close();
  if (!m.carrier)
    throw ParseError(lineno, "missing carrier line");
  return m;
}

std::string print_model(const ProPresentation &p, const FiniteModel &m) {
  std::string s;
  if (!m.name.empty())
    s += "name " + m.name + "\n";
  s += "carrier " + std::to_string(m.carrier) + "\n";
  for (auto &g : p.gens) {
    auto it = m.table.find(g.name);
    if (it == m.table.end())
      continue;
    s += "table " + g.name + "\n";
    for (size_t c = 0; c < it->second.size(); ++c) {
      std::string r;
      for (int x : decode(int(c), g.arity, m.carrier))
        r += std::to_string(x) + " ";
      r += ":";
      for (int x : it->second[c])
        r += " " + std::to_string(x);
      s += r + "\n";
    }
  }
  return s;
}

FiniteModel quandle_model(const Quandle &q, const std::string &name) {
  FiniteModel m{name, q.n, {}};
  auto &t = m.table["tri"], &u = m.table["tri_inv"];
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b) {
      t.push_back({q.tri(a, b)});
      u.push_back({q.tri_inv(a, b)});
    }
  return m;
}

FiniteModel group_model(const Group &g) {
  FiniteModel m{g.name, g.n, {}};
  m.table["unit"] = {{g.e}};
  for (int a = 0; a < g.n; ++a) {
    m.table["inv"].push_back({g.inv(a)});
    for (int b = 0; b < g.n; ++b)
      m.table["mul"].push_back({g.mul(a, b)});
  }
  return m;
}

std::vector<FiniteModel> separating_models(const ProPresentation &p) {
  std::vector<FiniteModel> out;
  if (p.theory == Theory::Quandle)
    for (int n = 1; n <= 4; ++n) {
      auto qs = enumerate_quandles(n);
      for (size_t k = 0; k < qs.size(); ++k)
        out.push_back(quandle_model(qs[k], "Q" + std::to_string(n) + "." + std::to_string(k)));
    }
  if (p.theory == Theory::Group)
    for (auto &g : small_groups(8))
      out.push_back(group_model(g));
  return out;
}

std::vector<Word> apply_normal_form(const ProPresentation &p, const std::string &g,
                                    const std::vector<Word> &x) {
  bool q = p.theory == Theory::Quandle;
  if (p.theory == Theory::None)
    throw Error("no equality procedure for presentation " + p.name);
  if (q && g == "tri")
    return {fg_mul(fg_inv(x[1]), fg_mul(x[0], x[1]))};
  if (q && g == "tri_inv")
    return {fg_mul(x[1], fg_mul(x[0], fg_inv(x[1])))};
  if (!q && g == "mul")
    return {fg_mul(x[0], x[1])};
  if (!q && g == "unit")
    return {Word{}};
  if (!q && g == "inv")
    return {fg_inv(x[0])};
  if (g == "dup" || g == "swap")
    return cartesian(g, x);
  if (g == "drop")
    return {};
  throw Error("generator " + g + " is outside the decided theory");
}

std::vector<Word> normal_form(const ProPresentation &p, const ProTerm &t) {
  if (p.theory == Theory::None)
    throw Error("no equality procedure for presentation " + p.name);
  int n = typecheck(p, t).arity;
  std::vector<Word> in;
  for (int k = 1; k <= n; ++k)
    in.push_back({k});
  return interpret<Word>(p, t, in, [&](const std::string &g, const std::vector<Word> &x) {
    return apply_normal_form(p, g, x);
  });
}

std::string nf_key(ProType ty, const std::vector<Word> &nf) {
  std::string s = std::to_string(ty.arity) + "->" + std::to_string(ty.coarity) + ":";
  for (size_t k = 0; k < nf.size(); ++k)
    s += (k ? " | " : " ") + print_word(nf[k]);
  return s;
}

std::string normal_form_key(const ProPresentation &p, const ProTerm &t) {
  return nf_key(typecheck(p, t), normal_form(p, t));
}

std::vector<Word> nf_compose(const std::vector<Word> &first, const std::vector<Word> &then) {
  std::vector<Word> out;
  for (auto &w : then) {
    Word r;
    for (int x : w) {
      const Word &s = first.at(size_t(x > 0 ? x : -x) - 1);
      Word piece = x > 0 ? s : fg_inv(s);
      r.insert(r.end(), piece.begin(), piece.end());
    }
    out.push_back(reduce(std::move(r)));
  }
  return out;
}

std::vector<Word> nf_plus(const std::vector<Word> &a, int arity_a, const std::vector<Word> &b) {
  std::vector<Word> out = a;
  for (auto w : b) {
    for (int &x : w)
      x += x > 0 ? arity_a : -arity_a;
    out.push_back(w);
  }
  return out;
}

std::string verdict_name(Verdict::Kind k) {
  switch (k) {
  case Verdict::Kind::Equal:
    return "equal";
  case Verdict::Kind::Distinct:
    return "distinct";
  default:
    return "unknown";
  }
}

Verdict terms_equal(const ProPresentation &p, const ProTerm &a, const ProTerm &b, long budget) {
  ProType ta = typecheck(p, a), tb = typecheck(p, b);
  if (!(ta == tb))
    throw Error("terms have different types");
  Verdict v;
  if (a == b) {
    v.kind = Verdict::Kind::Equal;
    v.method = "syntactic";
    return v;
  }
  for (auto &r : p.rels)
    if ((r.lhs == a && r.rhs == b) || (r.lhs == b && r.rhs == a)) {
      v.kind = Verdict::Kind::Equal;
      v.method = "relation " + r.name;
      return v;
    }
  bool decided = p.theory != Theory::None;
  if (decided && normal_form(p, a) == normal_form(p, b)) {
    v.kind = Verdict::Kind::Equal;
    v.method = "normal form";
    return v;
  }
  for (auto &m : separating_models(p)) {
    long total = ipow(m.carrier, ta.arity);
    for (long c = 0; c < total; ++c) {
      if (budget-- <= 0)
        goto exhausted;
      std::vector<int> in = decode(int(c), ta.arity, m.carrier);
      auto x = eval(p, a, m, in), y = eval(p, b, m, in);
      if (x != y) {
        v.kind = Verdict::Kind::Distinct;
        v.method = "model " + m.name;
        v.model = m;
        v.input = in;
        v.lhs = x;
        v.rhs = y;
        return v;
      }
    }
  }
exhausted:
  if (decided) {
    v.kind = Verdict::Kind::Distinct;
    v.method = "normal form";
  }
  return v;
}

ProTerm apply_hom(const ProHom &h, const ProTerm &t) {
  if (t.kind == ProTerm::Kind::Gen) {
    auto it = h.find(t.name);
    if (it == h.end())
      throw Error("homomorphism has no image for " + t.name);
    return it->second;
  }
  ProTerm r = t;
  for (auto &a : r.args)
    a = apply_hom(h, a);
  return r;
}

ProHom conj_homomorphism() {
  return {
      {"tri", parse_term("comp(par(id(1),dup),par(swap,id(1)),par(inv,id(1),id(1)),"
                         "par(mul,id(1)),mul)")},
      {"tri_inv", parse_term("comp(par(id(1),dup),par(swap,id(1)),par(id(1),id(1),inv),"
                             "par(mul,id(1)),mul)")},
      {"dup", ProTerm::gen("dup")},
      {"swap", ProTerm::gen("swap")},
      {"drop", ProTerm::gen("drop")},
  };
}

std::vector<std::string> check_hom_relations(const ProPresentation &from,
                                             const ProPresentation &to, const ProHom &h) {
  std::vector<std::string> out;
  for (auto &g : from.gens) {
    auto it = h.find(g.name);
    if (it == h.end()) {
      out.push_back("generator " + g.name + " has no image");
      continue;
    }
    try {
      if (!(typecheck(to, it->second) == ProType{g.arity, g.coarity}))
        out.push_back("image of " + g.name + " has the wrong type");
    } catch (const Error &e) {
      out.push_back("image of " + g.name + ": " + e.what());
    }
  }
  if (!out.empty())
    return out;
  for (auto &r : from.rels) {
    Verdict v = terms_equal(to, apply_hom(h, r.lhs), apply_hom(h, r.rhs), 0);
    if (v.kind != Verdict::Kind::Equal)
      out.push_back("relation " + r.name + " is not preserved (" + verdict_name(v.kind) + ")");
  }
  return out;
}

} // namespace omegaq
