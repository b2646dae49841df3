#include <doctest.h>

#include <map>
#include <set>

#include "omegaq/pasting.hpp"

using namespace omegaq;

namespace {

GlobSet one_point() { return terminal_globset(3); }

// Cells of dims 0..3 indexed by boundary for candidate lookup.
template <class L> struct Indexed {
  std::vector<std::vector<std::pair<L, int>>> by_dim;
  std::vector<std::map<std::pair<L, L>, std::vector<std::pair<L, int>>>> by_bnd;
  void add(int k, const L &d, int s) {
    by_dim[k].emplace_back(d, s);
    if (k > 0)
      by_bnd[k][{boundary(d, Side::Source), boundary(d, Side::Target)}].emplace_back(d, s);
  }
  Indexed() : by_dim(4), by_bnd(4) {}
  SizedCandidates<L> cand() const {
    return [this](int depth, const L *lo, const L *hi) {
      if (depth > 3)
        return std::vector<std::pair<L, int>>{};
      if (!lo)
        return by_dim[depth];
      auto it = by_bnd[depth].find({*lo, *hi});
      return it == by_bnd[depth].end() ? std::vector<std::pair<L, int>>{} : it->second;
    };
  }
};

struct TCells : Indexed<Diagram> {
  TCells(const GlobSet &g, int bound) {
    for (int k = 0; k <= 3; ++k)
      for (auto &d : enumerate_diagrams(g, k, bound))
        add(k, d, size(d));
  }
};

auto bnd(const GlobSet &g) {
  return [&g](int d, int x, Side s) { return g.boundary(d, x, s); };
}

} // namespace

TEST_CASE("scheme boundaries") {
  CHECK(print_scheme(boundary(parse_scheme("@2[@1[@0]]"), Side::Source)) == "@1[@0]");
  CHECK(print_scheme(boundary(parse_scheme("@2[@1[] @1[@0]]"), Side::Target)) ==
        "@1[@0 @0]");
  for (int k = 1; k <= 3; ++k)
    for (auto &s : enumerate_schemes(k, 6))
      CHECK(boundary(s, Side::Source) == boundary(s, Side::Target));
  CHECK_THROWS_AS(boundary(point(Unit{}), Side::Source), Error);
}

TEST_CASE("scheme literals round trip") {
  for (int k = 0; k <= 3; ++k)
    for (auto &s : enumerate_schemes(k, 6))
      CHECK(parse_scheme(print_scheme(s)) == s);
  CHECK(print_scheme(parse_scheme("@2[ @1[@0] @1[] ]")) == "@2[@1[@0] @1[]]");
  CHECK_THROWS_AS(parse_scheme("@2[@0]"), Error);
  CHECK_THROWS_AS(parse_scheme("@1[@0"), Error);
  CHECK_THROWS_AS(parse_scheme("@1[] x"), Error);
}

TEST_CASE("enumerate_schemes small cases") {
  auto s1 = enumerate_schemes(1, 3);
  std::set<std::string> p1;
  for (auto &s : s1)
    p1.insert(print_scheme(s));
  CHECK(p1 == std::set<std::string>{"@1[]", "@1[@0]", "@1[@0 @0]"});
  auto s2 = enumerate_schemes(2, 3);
  std::set<std::string> p2;
  for (auto &s : s2)
    p2.insert(print_scheme(s));
  CHECK(p2 == std::set<std::string>{"@2[]", "@2[@1[]]", "@2[@1[@0]]", "@2[@1[] @1[]]"});
  CHECK(enumerate_schemes(0, 7).size() == 1);
}

TEST_CASE("enumerate_schemes counts match a composition-count recurrence") {
  // c[k][n] = number of k-schemes of size exactly n; a k-scheme of size n is
  // a sequence of (k-1)-schemes with sizes summing to n-1.
  const int B = 9;
  std::vector<std::vector<long>> c(5, std::vector<long>(B + 1, 0));
  c[0][1] = 1;
  for (int k = 1; k <= 4; ++k) {
    std::vector<long> seq(B + 1, 0); // sequences of total size t
    seq[0] = 1;
    for (int t = 1; t <= B; ++t)
      for (int f = 1; f <= t; ++f)
        seq[t] += c[k - 1][f] * seq[t - f];
    for (int n = 1; n <= B; ++n)
      c[k][n] = seq[n - 1];
  }
  for (int k = 0; k <= 4; ++k) {
    auto all = enumerate_schemes(k, B);
    std::set<Scheme> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
    std::vector<long> got(B + 1, 0);
    for (auto &s : all) {
      REQUIRE(size(s) <= B);
      CHECK(s.dim == k);
      ++got[size(s)];
    }
    for (int n = 1; n <= B; ++n)
      CHECK(got[n] == c[k][n]);
  }
}

TEST_CASE("eta and identity_lift") {
  GlobSet g = theta_set();
  int a = 0, f = 0, alpha = 0;
  CHECK(print_diagram(eta(g, 0, a), g) == "a");
  CHECK(print_diagram(eta(g, 1, f), g) == "(a,b; f)");
  CHECK(shape(eta(g, 2, alpha)) == globe(2));
  CHECK(print_scheme(shape(identity_lift(point(a), 1))) == "@1[]");
  for (int k = 0; k <= 3; ++k)
    for (auto &d : enumerate_diagrams(g, k, 4))
      for (int up = k + 1; up <= 3; ++up) {
        auto l = identity_lift(d, up);
        CHECK(well_formed(l, g));
        CHECK(boundary(l, Side::Source) == boundary(l, Side::Target));
        if (up - 1 > k)
          CHECK(boundary(l, Side::Source) == identity_lift(d, up - 1));
        CHECK(iterated_boundary(l, Side::Source, k) == d);
        CHECK(iterated_boundary(l, Side::Target, k) == d);
      }
}

TEST_CASE("compose_along: paths, units, associativity") {
  CHECK(compose_along(path(2), path(3), 0) == path(5));
  GlobSet g = theta_set();
  for (int k = 1; k <= 3; ++k) {
    auto ds = enumerate_diagrams(g, k, 6);
    for (auto &x : ds) {
      auto t0 = iterated_boundary(x, Side::Target, 0);
      CHECK(compose_along(x, identity_lift(t0, k), 0) == x);
      auto s0 = iterated_boundary(x, Side::Source, 0);
      CHECK(compose_along(identity_lift(s0, k), x, 0) == x);
    }
  }
  // exhaustive associativity over the one-point set, size <= 6
  GlobSet pt = one_point();
  for (int k = 1; k <= 3; ++k) {
    auto ds = enumerate_diagrams(pt, k, 6);
    for (int j = 0; j < k; ++j)
      for (auto &x : ds)
        for (auto &y : ds) {
          if (iterated_boundary(x, Side::Target, j) != iterated_boundary(y, Side::Source, j))
            continue;
          auto xy = compose_along(x, y, j);
          for (auto &z : ds) {
            if (size(x) + size(y) + size(z) > 8)
              continue;
            if (iterated_boundary(y, Side::Target, j) != iterated_boundary(z, Side::Source, j))
              continue;
            CHECK(compose_along(xy, z, j) == compose_along(x, compose_along(y, z, j), j));
          }
        }
  }
  CHECK_THROWS_AS(compose_along(path(1), globe(2), 0), Error);
}

TEST_CASE("compose_along rejects boundary mismatches") {
  GlobSet g = theta_set();
  Diagram f = eta(g, 1, 0);
  CHECK_THROWS_AS(compose_along(f, f, 0), Error); // b != a
  Diagram a2 = eta(g, 2, 0);
  CHECK_THROWS_AS(compose_along(a2, a2, 1), Error); // g != f
}

TEST_CASE("strict interchange") {
  GlobSet pt = one_point();
  auto ds = enumerate_diagrams(pt, 2, 4);
  int checked = 0;
  for (auto &x : ds)
    for (auto &y : ds) {
      if (boundary(x, Side::Target) != boundary(y, Side::Source))
        continue;
      for (auto &z : ds)
        for (auto &w : ds) {
          if (boundary(z, Side::Target) != boundary(w, Side::Source))
            continue;
          auto lhs = compose_along(compose_along(x, y, 1), compose_along(z, w, 1), 0);
          auto rhs = compose_along(compose_along(x, z, 0), compose_along(y, w, 0), 1);
          CHECK(lhs == rhs);
          ++checked;
        }
    }
  CHECK(checked > 50);
}

TEST_CASE("mu flattens a word of paths") {
  Scheme pt = point(Unit{});
  Pasting<Scheme> w{1, {pt, pt, pt}, {point(path(2)), point(path(3))}};
  CHECK(mu(w) == path(5));
}

TEST_CASE("enumerate_diagrams: one point and theta set") {
  GlobSet pt = one_point();
  for (int k = 0; k <= 3; ++k) {
    auto ds = enumerate_diagrams(pt, k, 5);
    auto ss = enumerate_schemes(k, 5);
    REQUIRE(ds.size() == ss.size());
    std::set<Scheme> shapes;
    for (auto &d : ds)
      shapes.insert(shape(d));
    CHECK(shapes == std::set<Scheme>(ss.begin(), ss.end()));
  }
  GlobSet g = theta_set();
  // independent path enumerator: sequences of composable 1-cells
  std::set<std::vector<int>> paths; // first entry = start vertex
  for (int v = 0; v < 2; ++v)
    paths.insert({v});
  for (int e = 0; e < g.count(1); ++e) {
    paths.insert({g.src(1, e), e});
    for (int e2 = 0; e2 < g.count(1); ++e2)
      if (g.tgt(1, e) == g.src(1, e2))
        paths.insert({g.src(1, e), e, e2});
  }
  std::set<std::vector<int>> got;
  for (auto &d : enumerate_diagrams(g, 1, 3)) {
    CHECK(well_formed(d, g));
    std::vector<int> p{d.verts[0]};
    for (auto &k : d.kids)
      p.push_back(k.verts[0]);
    got.insert(p);
  }
  CHECK(got == paths);
  GlobSet empty(3);
  for (int k = 0; k <= 3; ++k)
    CHECK(enumerate_diagrams(empty, k, 5).empty());
  for (int k = 1; k <= 3; ++k)
    for (auto &d : enumerate_diagrams(g, k, 5)) {
      auto s = boundary(d, Side::Source), t = boundary(d, Side::Target);
      if (k >= 2)
        CHECK(boundary(s, Side::Source) == boundary(t, Side::Source));
      CHECK(shape(s) == boundary(shape(d), Side::Source));
    }
}

// Shared by the monad-law cases: unit laws on T(X) and associativity on
// T^3(X), each exhaustive at the given size.
static void monad_laws(const GlobSet &g, int bound) {
  TCells t1(g, bound);
  auto b = bnd(g);
  int units = 0;
  for (int k = 0; k <= 3; ++k)
    for (auto &[d, s] : t1.by_dim[k]) {
      CHECK(mu(eta_outer(d)) == d);
      CHECK(mu(eta_inner<int>(d, b)) == d);
      ++units;
    }
  CHECK(units > 0);
  // T^2 cells with total size <= bound
  Indexed<Pasting<Diagram>> t2;
  for (int k = 0; k <= 3; ++k)
    for (auto &[d, s] : enumerate_sized<Diagram>(k, bound, t1.cand()))
      t2.add(k, d, s);
  auto c2 = t2.cand();
  int assoc = 0;
  for (int k = 0; k <= 3; ++k) {
    for (auto &[dd, s] : t2.by_dim[k]) {
      auto flat = mu(dd);
      CHECK(shape(flat) == mu(map_labels<Diagram, Scheme>(
                               dd, [](int, const Diagram &x) { return shape(x); })));
    }
    for (auto &[ddd, s] : enumerate_sized<Pasting<Diagram>>(k, bound, c2)) {
      auto lhs = mu(mu(ddd));
      auto rhs = mu(map_labels<Pasting<Diagram>, Diagram>(
          ddd, [](int, const Pasting<Diagram> &x) { return mu(x); }));
      CHECK(lhs == rhs);
      ++assoc;
    }
  }
  CHECK(assoc > 0);
}

TEST_CASE("monad laws over the one-point set") { monad_laws(one_point(), 5); }
TEST_CASE("monad laws over the theta set") { monad_laws(theta_set(), 5); }

TEST_CASE("library monad-law report") {
  auto r = check_monad_laws(theta_set(), 3, 4);
  CHECK(r.ok());
  CHECK(r.unit_checked > 0);
  CHECK(r.assoc_checked > 0);
  CHECK(check_monad_laws(one_point(), 0, 3).unit_checked == 1);
  CHECK_THROWS_AS(check_monad_laws(theta_set(), 9, 3), Error);
}
