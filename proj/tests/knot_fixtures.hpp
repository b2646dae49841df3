#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "omegaq/knot.hpp"

namespace fixtures {

using namespace omegaq;

// Rolfsen table entries in standard PD form.
inline const std::vector<std::pair<std::string, std::string>> &corpus() {
  static const std::vector<std::pair<std::string, std::string>> c = {
      {"unknot", "O 1\n"},
      {"3_1", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"},
      {"4_1", "X[4,2,5,1]\nX[8,6,1,5]\nX[6,3,7,4]\nX[2,7,3,8]\n"},
      {"5_1", "X 1 6 2 7\nX 3 8 4 9\nX 5 10 6 1\nX 7 2 8 3\nX 9 4 10 5\n"},
      {"5_2", "X 1 4 2 5\nX 3 8 4 9\nX 5 10 6 1\nX 9 6 10 7\nX 7 2 8 3\n"},
      {"6_1", "X 1 4 2 5\nX 7 10 8 11\nX 3 9 4 8\nX 9 3 10 2\nX 5 12 6 1\nX 11 6 12 7\n"},
      {"6_2", "X 1 4 2 5\nX 5 10 6 11\nX 3 9 4 8\nX 9 3 10 2\nX 7 12 8 1\nX 11 6 12 7\n"},
      {"6_3", "X 4 2 5 1\nX 8 4 9 3\nX 12 9 1 10\nX 10 5 11 6\nX 6 11 7 12\nX 2 8 3 7\n"},
  };
  return c;
}

inline KnotDiagram knot(const std::string &name) {
  for (auto &[n, pd] : corpus())
    if (n == name)
      return parse_pd(pd);
  throw Error("no corpus entry " + name);
}

// Colorings by the dihedral quandle of prime order p solve the linear
// system out + in - 2 over = 0 over Z/p, so they number p^(arcs - rank).
inline long linear_colorings(const KnotDiagram &k, int p) {
  Wirtinger w = wirtinger(k);
  std::vector<std::vector<long>> rows;
  for (auto &r : w.relations) {
    std::vector<long> row(w.arcs, 0);
    row[r.out] += 1;
    row[r.in] += 1;
    row[r.over] += p - 2;
    for (auto &x : row)
      x %= p;
    rows.push_back(row);
  }
  auto inv = [&](long a) {
    long r = 1;
    for (int e = p - 2; e > 0; --e)
      r = r * a % p;
    return r;
  };
  int rank = 0;
  for (int col = 0; col < w.arcs && rank < int(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < int(rows.size()); ++i)
      if (rows[i][col])
        piv = i;
    if (piv < 0)
      continue;
    std::swap(rows[piv], rows[rank]);
    long f = inv(rows[rank][col]);
    for (auto &x : rows[rank])
      x = x * f % p;
    for (int i = 0; i < int(rows.size()); ++i)
      if (i != rank && rows[i][col]) {
        long m = rows[i][col];
        for (int j = 0; j < w.arcs; ++j)
          rows[i][j] = ((rows[i][j] - m * rows[rank][j]) % p + p) % p;
      }
    ++rank;
  }
  long total = 1;
  for (int i = rank; i < w.arcs; ++i)
    total *= p;
  return total;
}

// Every idempotent table of order n, filtered by the axioms written out
// directly, then reduced by trying all relabellings.
inline std::set<std::vector<int>> brute_quandle_classes(int n) {
  std::vector<int> free;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b)
        free.push_back(a * n + b);
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    t[a * n + a] = a;
  std::vector<int> perm(n);
  std::set<std::vector<int>> classes;
  long total = 1;
  for (size_t i = 0; i < free.size(); ++i)
    total *= n;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int cell : free) {
      t[cell] = int(c % n);
      c /= n;
    }
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) {
      std::vector<char> hit(n, 0);
      for (int a = 0; a < n; ++a)
        hit[t[a * n + b]] = 1;
      ok = std::count(hit.begin(), hit.end(), 1) == n;
    }
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int d = 0; d < n && ok; ++d)
          ok = t[t[a * n + b] * n + d] == t[t[a * n + d] * n + t[b * n + d]];
    if (!ok)
      continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> r(n * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          r[perm[a] * n + perm[b]] = perm[t[a * n + b]];
      if (best.empty() || r < best)
        best = r;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes;
}

inline std::vector<Quandle> quandles_up_to(int n) {
  std::vector<Quandle> out;
  for (int m = 1; m <= n; ++m)
    for (auto &q : enumerate_quandles(m))
      out.push_back(q);
  return out;
}

} // namespace fixtures
