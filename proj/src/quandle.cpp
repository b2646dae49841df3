#include "omegaq/quandle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "omegaq/error.hpp"

namespace omegaq {

Quandle make_quandle(int n, std::vector<int> op) {
  if (n < 1 || int(op.size()) != n * n)
    throw Error("quandle table has the wrong size");
  for (int x : op)
    if (x < 0 || x >= n)
      throw Error("quandle table entry out of range");
  Quandle q{n, std::move(op), std::vector<int>(n * n, -1)};
  for (int b = 0; b < n; ++b) {
    std::vector<int> pre(n, -1);
    bool bij = true;
    for (int a = 0; a < n; ++a) {
      int c = q.tri(a, b);
      bij = bij && pre[c] < 0;
      pre[c] = a;
    }
    if (bij)
      for (int c = 0; c < n; ++c)
        q.inv[c * n + b] = pre[c];
  }
  return q;
}

std::vector<std::string> check_axioms(const Quandle &q) {
  std::vector<std::string> out;
  auto s = [](int x) { return std::to_string(x); };
  for (int a = 0; a < q.n; ++a)
    if (q.tri(a, a) != a)
      out.push_back("idempotence at " + s(a));
  for (int b = 0; b < q.n; ++b)
    if (q.tri_inv(0, b) < 0)
      out.push_back("right invertibility at " + s(b));
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      for (int c = 0; c < q.n; ++c)
        if (q.tri(q.tri(a, b), c) != q.tri(q.tri(a, c), q.tri(b, c)))
          out.push_back("self-distributivity at (" + s(a) + "," + s(b) + "," + s(c) + ")");
  return out;
}

Quandle trivial_quandle(int n) {
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = a;
  return make_quandle(n, t);
}

Quandle dihedral_quandle(int n) {
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = ((2 * b - a) % n + n) % n;
  return make_quandle(n, t);
}

Quandle conj(const Group &g) {
  std::vector<int> t(g.n * g.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      t[a * g.n + b] = g.mul(g.mul(g.inv(b), a), b);
  return make_quandle(g.n, t);
}

Quandle canonical(const Quandle &q) {
  std::vector<int> p(q.n), best = q.op, t(q.n * q.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    // relabel x -> p[x]
    for (int a = 0; a < q.n; ++a)
      for (int b = 0; b < q.n; ++b)
        t[p[a] * q.n + p[b]] = p[q.tri(a, b)];
    if (t < best)
      best = t;
  } while (std::next_permutation(p.begin(), p.end()));
  return make_quandle(q.n, best);
}

std::vector<Quandle> enumerate_quandles(int n) {
  // Fill column by column; every column is a permutation fixing its own
  // index. Self-distributivity is checked as soon as all entries of an
  // instance are known.
  std::vector<int> t(n * n, -1);
  std::set<Quandle> found;
  auto consistent = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = t[a * n + b];
        if (ab < 0)
          continue;
        for (int c = 0; c < n; ++c) {
          int l = t[ab * n + c], ac = t[a * n + c], bc = t[b * n + c];
          if (l < 0 || ac < 0 || bc < 0)
            continue;
          int r = t[ac * n + bc];
          if (r >= 0 && r != l)
            return false;
        }
      }
    return true;
  };
  std::function<void(int, int)> fill = [&](int b, int a) {
    if (b == n) {
      found.insert(canonical(make_quandle(n, t)));
      return;
    }
    if (a == n) {
      fill(b + 1, 0);
      return;
    }
    if (a == b) {
      fill(b, a + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (v == b)
        continue;
      bool taken = false;
      for (int x = 0; x < a; ++x)
        taken = taken || (x != b && t[x * n + b] == v);
      if (taken)
        continue;
      t[a * n + b] = v;
      if (consistent())
        fill(b, a + 1);
      t[a * n + b] = -1;
    }
  };
  for (int b = 0; b < n; ++b)
    t[b * n + b] = b;
  fill(0, 0);
  return {found.begin(), found.end()};
}

Quandle parse_quandle(const std::string &text) {
  std::istringstream in(text);
  std::string line, word;
  int lineno = 0, n = -1;
  std::vector<int> op;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    std::istringstream ls(line);
    if (!(ls >> word))
      continue;
    if (n < 0) {
      // the order, optionally after the word "quandle"
      bool ok = word == "quandle" ? bool(ls >> n) : (std::istringstream(word) >> n && !(ls >> word));
      if (!ok || n < 1)
        throw ParseError(lineno, "expected the order N");
      continue;
    }
    std::vector<int> row;
    ls.clear();
    ls.seekg(0);
    int x;
    while (ls >> x)
      row.push_back(x);
    if (!ls.eof() || int(row.size()) != n)
      throw ParseError(lineno, "expected " + std::to_string(n) + " entries");
    for (int v : row)
      if (v < 0 || v >= n)
        throw ParseError(lineno, "entry out of range");
    op.insert(op.end(), row.begin(), row.end());
  }
  if (n < 0)
    throw ParseError(lineno, "empty quandle file");
  if (int(op.size()) != n * n)
    throw ParseError(lineno, "expected " + std::to_string(n) + " rows");
  return make_quandle(n, op);
}

std::string print_quandle(const Quandle &q) {
  std::string s = std::to_string(q.n) + "\n";
  for (int a = 0; a < q.n; ++a) {
    for (int b = 0; b < q.n; ++b)
      s += (b ? " " : "") + std::to_string(q.tri(a, b));
    s += "\n";
  }
  return s;
}

} // namespace omegaq
