#include "omegaq/pasting.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace omegaq {

Diagram eta(const GlobSet &g, int dim, int idx) {
  return eta<int>(idx, dim, [&](int d, int x, Side s) { return g.boundary(d, x, s); });
}

Candidates<int> candidates(const GlobSet &g) {
  return [&g](int depth, const int *lo, const int *hi) {
    std::vector<int> out;
    for (int x = 0; x < g.count(depth); ++x)
      if (!lo || (g.src(depth, x) == *lo && g.tgt(depth, x) == *hi))
        out.push_back(x);
    return out;
  };
}

namespace {

// All sequences of (k-1)-schemes with total size exactly `budget`.
void sequences(int k, int budget, std::vector<Scheme> &cur,
               const std::vector<std::vector<Scheme>> &by_size,
               std::vector<Scheme> &out) {
  if (budget == 0) {
    Scheme s{k, std::vector<Unit>(cur.size() + 1), cur};
    out.push_back(std::move(s));
    return;
  }
  for (int first = 1; first <= budget; ++first)
    for (auto &c : by_size[first]) {
      cur.push_back(c);
      sequences(k, budget - first, cur, by_size, out);
      cur.pop_back();
    }
}

// by_size[n] = the k-schemes of size exactly n.
std::vector<std::vector<Scheme>> schemes_by_size(int k, int max_size) {
  std::vector<std::vector<Scheme>> by(max_size + 1);
  if (max_size < 1)
    return by;
  if (k == 0) {
    by[1].push_back(point(Unit{}));
    return by;
  }
  auto lower = schemes_by_size(k - 1, max_size - 1);
  for (int n = 1; n <= max_size; ++n) {
    std::vector<Scheme> cur;
    sequences(k, n - 1, cur, lower, by[n]);
  }
  return by;
}

} // namespace

std::vector<Scheme> enumerate_schemes(int k, int max_size) {
  if (k < 0)
    throw Error("enumerate_schemes: negative dimension");
  std::vector<Scheme> out;
  for (auto &v : schemes_by_size(k, max_size))
    out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> enumerate_diagrams(const GlobSet &g, int k, int max_size) {
  std::vector<Diagram> out;
  auto cand = candidates(g);
  for (auto &s : enumerate_schemes(k, max_size))
    for (auto &d : labellings<int>(s, cand))
      out.push_back(std::move(d));
  std::sort(out.begin(), out.end());
  return out;
}

Scheme globe(int k) {
  Scheme s = point(Unit{});
  for (int d = 1; d <= k; ++d)
    s = Scheme{d, {Unit{}, Unit{}}, {s}};
  return s;
}

Scheme iterated_identity(int k) { return identity_lift(point(Unit{}), k); }

Scheme path(int n) {
  Scheme s{1, std::vector<Unit>(n + 1), std::vector<Scheme>(n, point(Unit{}))};
  return s;
}

namespace {

struct SchemeParser {
  const std::string &t;
  size_t i = 0;

  void ws() {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i])))
      ++i;
  }
  [[noreturn]] void fail(const std::string &m) {
    throw Error("scheme literal at offset " + std::to_string(i) + ": " + m);
  }
  Scheme parse() {
    ws();
    if (i >= t.size() || t[i] != '@')
      fail("expected '@'");
    ++i;
    size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
      ++i;
    if (start == i)
      fail("expected dimension");
    int k = std::stoi(t.substr(start, i - start));
    if (k == 0) {
      ws();
      if (i < t.size() && t[i] == '[')
        fail("@0 takes no body");
      return point(Unit{});
    }
    ws();
    if (i >= t.size() || t[i] != '[')
      fail("expected '['");
    ++i;
    Scheme s{k, {Unit{}}, {}};
    for (;;) {
      ws();
      if (i < t.size() && t[i] == ']') {
        ++i;
        break;
      }
      Scheme c = parse();
      if (c.dim != k - 1)
        fail("entry of dimension " + std::to_string(c.dim) + " inside @" +
             std::to_string(k));
      s.kids.push_back(std::move(c));
      s.verts.push_back(Unit{});
    }
    return s;
  }
};

void print_to(const Scheme &s, std::ostringstream &out) {
  out << '@' << s.dim;
  if (s.dim == 0)
    return;
  out << '[';
  for (size_t i = 0; i < s.kids.size(); ++i) {
    if (i)
      out << ' ';
    print_to(s.kids[i], out);
  }
  out << ']';
}

void print_to(const Diagram &d, const GlobSet &g, int depth, std::ostringstream &out) {
  if (d.dim == 0) {
    out << g.name({depth, d.verts[0]});
    return;
  }
  out << '(';
  for (size_t i = 0; i < d.verts.size(); ++i)
    out << (i ? "," : "") << g.name({depth, d.verts[i]});
  out << ';';
  for (size_t i = 0; i < d.kids.size(); ++i) {
    out << (i ? ", " : " ");
    print_to(d.kids[i], g, depth + 1, out);
  }
  out << ')';
}

bool well_formed_at(const Diagram &d, const GlobSet &g, int depth, const int *lo,
                    const int *hi) {
  for (int v : d.verts) {
    if (depth > g.max_dim() || v < 0 || v >= g.count(depth))
      return false;
    if (lo && (g.src(depth, v) != *lo || g.tgt(depth, v) != *hi))
      return false;
  }
  if (d.dim == 0)
    return d.verts.size() == 1 && d.kids.empty();
  if (d.verts.size() != d.kids.size() + 1)
    return false;
  for (size_t i = 0; i < d.kids.size(); ++i) {
    if (d.kids[i].dim != d.dim - 1)
      return false;
    if (!well_formed_at(d.kids[i], g, depth + 1, &d.verts[i], &d.verts[i + 1]))
      return false;
  }
  return true;
}

} // namespace

Scheme parse_scheme(const std::string &text) {
  SchemeParser p{text};
  Scheme s = p.parse();
  p.ws();
  if (p.i != text.size())
    p.fail("trailing input");
  return s;
}

std::string print_scheme(const Scheme &s) {
  std::ostringstream out;
  print_to(s, out);
  return out.str();
}

std::string print_diagram(const Diagram &d, const GlobSet &g) {
  std::ostringstream out;
  print_to(d, g, 0, out);
  return out.str();
}

bool well_formed(const Diagram &d, const GlobSet &g) {
  return well_formed_at(d, g, 0, nullptr, nullptr);
}

namespace {

template <class L> struct Indexed {
  int max_dim;
  std::vector<std::vector<std::pair<L, int>>> by_dim;
  std::vector<std::map<std::pair<L, L>, std::vector<std::pair<L, int>>>> by_bnd;

  explicit Indexed(int max_dim) : max_dim(max_dim), by_dim(max_dim + 1), by_bnd(max_dim + 1) {}
  void add(int k, const L &d, int s) {
    by_dim[k].emplace_back(d, s);
    if (k > 0)
      by_bnd[k][{boundary(d, Side::Source), boundary(d, Side::Target)}].emplace_back(d, s);
  }
  SizedCandidates<L> cand() const {
    return [this](int depth, const L *lo, const L *hi) {
      if (depth > max_dim)
        return std::vector<std::pair<L, int>>{};
      if (!lo)
        return by_dim[depth];
      auto it = by_bnd[depth].find({*lo, *hi});
      return it == by_bnd[depth].end() ? std::vector<std::pair<L, int>>{} : it->second;
    };
  }
};

} // namespace

MonadReport check_monad_laws(const GlobSet &g, int max_dim, int max_size) {
  if (max_dim < 0 || max_dim > g.max_dim())
    throw Error("dimension must lie in 0.." + std::to_string(g.max_dim()));
  MonadReport r;
  auto bnd = [&g](int d, int x, Side s) { return g.boundary(d, x, s); };
  Indexed<Diagram> t1(max_dim);
  for (int k = 0; k <= max_dim; ++k)
    for (auto &d : enumerate_diagrams(g, k, max_size))
      t1.add(k, d, size(d));
  for (int k = 0; k <= max_dim; ++k)
    for (auto &[d, s] : t1.by_dim[k]) {
      ++r.unit_checked;
      if (!(mu(eta_outer(d)) == d))
        r.violations.push_back("left unit at " + print_diagram(d, g));
      if (!(mu(eta_inner<int>(d, bnd)) == d))
        r.violations.push_back("right unit at " + print_diagram(d, g));
    }
  Indexed<Pasting<Diagram>> t2(max_dim);
  for (int k = 0; k <= max_dim; ++k)
    for (auto &[d, s] : enumerate_sized<Diagram>(k, max_size, t1.cand()))
      t2.add(k, d, s);
  auto c2 = t2.cand();
  for (int k = 0; k <= max_dim; ++k)
    for (auto &[ddd, s] : enumerate_sized<Pasting<Diagram>>(k, max_size, c2)) {
      ++r.assoc_checked;
      auto lhs = mu(mu(ddd));
      auto rhs = mu(map_labels<Pasting<Diagram>, Diagram>(
          ddd, [](int, const Pasting<Diagram> &x) { return mu(x); }));
      if (!(lhs == rhs))
        r.violations.push_back("associativity at a " + std::to_string(k) + "-cell of size " +
                               std::to_string(s) + ": " + print_diagram(lhs, g) + " vs " +
                               print_diagram(rhs, g));
    }
  return r;
}

} // namespace omegaq
