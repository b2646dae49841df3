#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "omegaq/coll.hpp"

using namespace omegaq;

TEST_CASE("identity collections") {
  Collection idc = id_coll(3);
  for (int d = 0; d <= 3; ++d) {
    REQUIRE(idc.count(d) == 1);
    CHECK(idc.ar(d, 0) == iterated_identity(d));
  }
  CHECK(idc.validate().empty());
  Collection one = terminal_coll(4, 3);
  CHECK(one.validate().empty());
  for (int d = 0; d <= 3; ++d) {
    auto ss = enumerate_schemes(d, 4);
    REQUIRE(one.count(d) == int(ss.size()));
    for (int i = 0; i < one.count(d); ++i)
      CHECK(one.ar(d, i) == ss[i]);
  }
  Collection none = initial_coll(3);
  CHECK(none.carrier.total() == 0);
  Collection i = unit_I(3);
  CHECK(i.validate().empty());
  CHECK(i.ar(2, 0) == globe(2));
}

TEST_CASE("degenerate collections factor through id_coll") {
  GlobSet th = theta_set();
  Collection dg = degenerate(th);
  CHECK(dg.validate().empty());
  CHECK(print_scheme(dg.ar(2, 0)) == "@2[]");
  Collection idc = id_coll(3);
  for (int d = 0; d <= 3; ++d)
    for (int x = 0; x < dg.count(d); ++x)
      CHECK(dg.ar(d, x) == idc.ar(d, 0));
  Collection dp = degenerate(terminal_globset(3));
  for (int d = 0; d <= 3; ++d)
    CHECK(dp.ar(d, 0) == idc.ar(d, 0));
}

TEST_CASE("box cells satisfy the defining square") {
  Collection one = terminal_coll(4, 3);
  Collection r = fixtures::random_collection(3);
  using P = std::pair<Collection *, Collection *>;
  for (P pr : {P{&one, &one}, P{&r, &one}, P{&one, &r}}) {
    auto *pair = &pr;
    Box b = box(*pair->first, *pair->second, 4);
    CHECK(b.coll.validate().empty());
    for (int k = 0; k <= 3; ++k)
      for (size_t i = 0; i < b.cells[k].size(); ++i) {
        auto &c = b.cells[k][i];
        CHECK(shape(c.word) == pair->first->ar(k, c.left));
        Scheme direct = mu(map_labels<int, Scheme>(
            c.word, [&](int d, int l) { return pair->second->ar(d, l); }));
        CHECK(b.coll.ar(k, int(i)) == direct);
      }
  }
}

TEST_CASE("box(1,1) 1-cells are pairs (k, <m1..mk>)") {
  const int B = 5;
  Collection one = terminal_coll(B, 2);
  Box b = box(one, one, B);
  // brute force: k edges on the left, a composition m1..mk on the right;
  // both the left arity and the composite path must fit the bound
  std::multiset<std::pair<int, int>> expect; // (k, sum m)
  std::function<void(int, int, int)> go = [&](int k, int left, int sum) {
    if (left == 0) {
      if (sum + 1 <= B)
        expect.insert({k, sum});
      return;
    }
    for (int m = 0; m + sum + 1 <= B; ++m)
      go(k, left - 1, sum + m);
  };
  for (int k = 0; k + 1 <= B; ++k)
    go(k, k, 0);
  std::multiset<std::pair<int, int>> got;
  for (size_t i = 0; i < b.cells[1].size(); ++i) {
    auto &c = b.cells[1][i];
    int k = int(one.ar(1, c.left).kids.size());
    int sum = 0;
    for (auto &kid : c.word.kids)
      sum += int(one.ar(1, kid.verts[0]).kids.size());
    CHECK(b.coll.ar(1, int(i)) == path(sum));
    got.insert({k, sum});
  }
  CHECK(got == expect);
}

TEST_CASE("box with a degenerate left factor") {
  GlobSet th = theta_set();
  Collection x = degenerate(th);
  Collection y = fixtures::two_loops(3);
  Box b = box(x, y, 4);
  for (int k = 0; k <= 3; ++k) {
    CHECK(b.coll.count(k) == x.count(k) * y.count(0));
    for (auto &c : b.cells[k]) {
      CHECK(c.word.kids.empty());
      CHECK(c.word.verts.size() == 1);
    }
  }
}

TEST_CASE("unitors") {
  Collection one = terminal_coll(4, 3);
  CHECK(check_unitors(one, 4).empty());
  CHECK(check_unitors(fixtures::random_collection(9), 4).empty());
  CHECK(check_unitors(initial_coll(3), 4).empty());
  // I box X at a bound too small for the 3-globe loses cells
  CHECK_FALSE(check_unitors(one, 3).empty());
  Collection i = unit_I(3);
  Box ix = box(i, one, 4);
  Bijection l = left_unitor(ix, one);
  REQUIRE(l.ok());
  for (int k = 0; k <= 3; ++k)
    for (int x = 0; x < one.count(k); ++x)
      CHECK(ix.cells[k][l.inv[k][x]].word == eta(one.carrier, k, x));
}

TEST_CASE("associator on the terminal collection and the empty one") {
  Collection one = terminal_coll(4, 3);
  Box xy = box(one, one, 4), yz = box(one, one, 4);
  Box xy_z = box(xy.coll, one, 4), x_yz = box(one, yz.coll, 4);
  Bijection a = associator(xy_z, xy, x_yz, yz);
  CHECK(a.ok());
  for (int k = 0; k <= 3; ++k)
    for (size_t i = 0; i < a.fwd[k].size(); ++i)
      CHECK(xy_z.coll.ar(k, int(i)) == x_yz.coll.ar(k, a.fwd[k][i]));
  Collection e = initial_coll(3);
  Box ee = box(e, e, 4), ee_e = box(ee.coll, e, 4), e_ee = box(e, ee.coll, 4);
  Bijection ae = associator(ee_e, ee, e_ee, ee);
  CHECK(ae.ok());
  for (auto &v : ae.fwd)
    CHECK(v.empty());
}

TEST_CASE("triangle and pentagon on a few triples") {
  Collection one = terminal_coll(4, 3), i = unit_I(3), r = fixtures::random_collection(1);
  CHECK(check_triangle(one, r, 4).empty());
  CHECK(check_triangle(r, one, 4).empty());
  CHECK(check_triangle(i, i, 4).empty());
  CHECK(check_pentagon(one, r, i, one, 4).empty());
  CHECK(check_pentagon(r, r, one, r, 4).empty());
}

TEST_CASE("box is functorial on samples") {
  fixtures::ArrowPool pool(3);
  std::mt19937 rng(4);
  for (int t = 0; t < 12; ++t) {
    auto &f1 = pool.arrows[rng() % pool.arrows.size()];
    auto &g1 = pool.arrows[rng() % pool.arrows.size()];
    // identities
    Box b = box(*f1.dom, *g1.dom, 3);
    MapResult id = box_map(b, b, identity_cmap(*f1.dom), identity_cmap(*g1.dom));
    REQUIRE(id.ok());
    CHECK(id.map == identity_cmap(b.coll));
    // composition with maps out of the codomains
    for (auto &f2 : pool.arrows)
      for (auto &g2 : pool.arrows) {
        if (f2.dom != f1.cod || g2.dom != g1.cod)
          continue;
        Box mid = box(*f1.cod, *g1.cod, 3), end = box(*f2.cod, *g2.cod, 3);
        MapResult m1 = box_map(b, mid, f1.map, g1.map);
        MapResult m2 = box_map(mid, end, f2.map, g2.map);
        MapResult m12 = box_map(b, end, compose_cmap(f2.map, f1.map),
                                compose_cmap(g2.map, g1.map));
        REQUIRE(m1.ok());
        REQUIRE(m2.ok());
        REQUIRE(m12.ok());
        CHECK(compose_cmap(m2.map, m1.map) == m12.map);
        CHECK(validate_map(b.coll, end.coll, m12.map).empty());
      }
  }
}

TEST_CASE("interchange") {
  const int B = 3;
  Collection one = terminal_coll(B, 2);
  Product oo = product(one, one);
  Box big = box(oo.coll, oo.coll, B), ac = box(one, one, B);
  Product acbd = product(ac.coll, ac.coll);
  MapResult x = interchange(big, oo, oo, ac, ac, acbd);
  REQUIRE(x.ok());
  CHECK(validate_map(big.coll, acbd.coll, x.map).empty());
  // 1 x 1 is the diagonal copy of 1, so the map lands on diagonal pairs
  for (int k = 0; k <= 2; ++k)
    for (int j : x.map[k]) {
      auto [p, q] = acbd.pairs[k][j];
      CHECK(p == q);
    }

  // B = D = terminal: projecting to A box C recovers the map induced by A x 1 = A
  Collection a = fixtures::two_loops(2), c = fixtures::random_collection(2, 2);
  Product a1 = product(a, one), c1 = product(c, one);
  Box a1c1 = box(a1.coll, c1.coll, B), acb = box(a, c, B), o1 = box(one, one, B);
  Product res = product(acb.coll, o1.coll);
  MapResult y = interchange(a1c1, a1, c1, acb, o1, res);
  REQUIRE(y.ok());
  MapResult proj = box_map(a1c1, acb, projection(a1, 0), projection(c1, 0));
  REQUIRE(proj.ok());
  CHECK(compose_cmap(projection(res, 0), y.map) == proj.map);
  // and that projection is a bijection
  std::set<std::pair<int, int>> seen;
  for (int k = 0; k <= 2; ++k) {
    CHECK(a1c1.coll.count(k) == acb.coll.count(k));
    for (int j : proj.map[k])
      seen.insert({k, j});
  }
  CHECK(int(seen.size()) == acb.coll.carrier.total());
}

TEST_CASE("interchange naturality on sampled arrows") {
  fixtures::ArrowPool pool(3);
  std::mt19937 rng(2024);
  for (int t = 0; t < 8; ++t) {
    auto pick = [&]() -> const CollArrow & { return pool.arrows[rng() % pool.arrows.size()]; };
    auto &fa = pick();
    auto &fb = pick();
    auto &fc = pick();
    auto &fd = pick();
    auto v = check_interchange_naturality(fa, fb, fc, fd, 3);
    CHECK(v.empty());
  }
}

TEST_CASE("interchange is compatible with delta, phi and theta") {
  const int B = 3;
  Collection i = unit_I(2), one = terminal_coll(B, 2);
  // (lambda x lambda) . interchange . (delta box delta) = delta . lambda on I box I
  Product ii = product(i, i);
  Box ibox = box(i, i, B);
  Box iibox = box(ii.coll, ii.coll, B);
  Product res = product(ibox.coll, ibox.coll);
  CollMap d = delta_map(i, ii);
  MapResult dd = box_map(ibox, iibox, d, d);
  REQUIRE(dd.ok());
  MapResult x = interchange(iibox, ii, ii, ibox, ibox, res);
  REQUIRE(x.ok());
  Bijection l = left_unitor(ibox, i);
  REQUIRE(l.ok());
  MapResult ll = product_map(res, ii, l.fwd, l.fwd);
  REQUIRE(ll.ok());
  CHECK(compose_cmap(ll.map, compose_cmap(x.map, dd.map)) == compose_cmap(d, l.fwd));

  // phi . (pi1 box pi1) = pi1 . (phi x phi) . interchange on (1x1) box (1x1)
  Product oo = product(one, one);
  Box oobox = box(oo.coll, oo.coll, B), o = box(one, one, B);
  Product ores = product(o.coll, o.coll);
  MapResult ox = interchange(oobox, oo, oo, o, o, ores);
  MapResult phi = phi_map(o, one);
  REQUIRE(ox.ok());
  REQUIRE(phi.ok());
  MapResult p1 = box_map(oobox, o, projection(oo, 0), projection(oo, 0));
  REQUIRE(p1.ok());
  CHECK(compose_cmap(phi.map, p1.map) ==
        compose_cmap(phi.map, compose_cmap(projection(ores, 0), ox.map)));
  // theta is the arity map of I and agrees with phi after the unitor
  CollMap th = theta_map(i, one);
  CHECK(validate_map(i, one, th).empty());
  Box io = box(i, one, B);
  MapResult thb = box_map(ibox, o, th, th);
  REQUIRE(thb.ok());
  CHECK(compose_cmap(phi.map, thb.map) == compose_cmap(th, l.fwd));
}

TEST_CASE("collection text format") {
  std::string text = "cell 0 p arity=@0\ncell 1 f src=p tgt=p arity=@1[@0 @0]\n"
                     "cell 2 r src=f tgt=f arity=@2[@1[] @1[@0]]\n";
  Collection c = parse_collection(text);
  CHECK(c.validate().empty());
  CHECK(print_collection(c) == text);
  CHECK_THROWS_AS(parse_collection("cell 0 p\n"), ParseError);
  CHECK_THROWS_AS(parse_collection("cell 0 p arity=@0\ncell 1 f src=p tgt=p arity=@1[@0]\n"
                                   "cell 2 r src=f tgt=f arity=@2[@1[] @1[]]\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_collection("cell 0 p arity=@1[]\n"), ParseError);
}
