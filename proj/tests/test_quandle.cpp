#include <doctest.h>

#include "knot_fixtures.hpp"

using namespace omegaq;

namespace {

// Plain search for a relabelling carrying one table onto the other.
bool isomorphic(const Quandle &a, const Quandle &b) {
  if (a.n != b.n)
    return false;
  std::vector<int> p(a.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.n && ok; ++x)
      for (int y = 0; y < a.n && ok; ++y)
        ok = p[a.tri(x, y)] == b.tri(p[x], p[y]);
    if (ok)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

} // namespace

TEST_CASE("axioms") {
  CHECK(check_axioms(dihedral_quandle(3)).empty());
  for (int n = 1; n <= 5; ++n)
    CHECK(check_axioms(trivial_quandle(n)).empty());
  auto v = check_axioms(make_quandle(2, {1, 0, 1, 1}));
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].find("idempotence at 0") != std::string::npos);
  auto r3 = dihedral_quandle(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(r3.tri_inv(r3.tri(a, b), b) == a);
}

TEST_CASE("conjugation quandles") {
  CHECK(conj(cyclic(3)) == trivial_quandle(3));
  for (auto &g : small_groups(8))
    CHECK(check_axioms(conj(g)).empty());
  auto s3 = conj(dihedral_group(3));
  CHECK(s3.n == 6);
  CHECK(check_axioms(s3).empty());

  auto groups = small_groups(6);
  for (size_t i = 0; i < groups.size(); ++i)
    for (size_t j = i + 1; j < groups.size(); ++j) {
      auto &a = groups[i], &b = groups[j];
      if (a.n != b.n)
        continue;
      auto qa = conj(a), qb = conj(b);
      CHECK(isomorphic(qa, qb) == (canonical(qa) == canonical(qb)));
    }
  // relabelling a group gives an isomorphic quandle
  Group z = cyclic(6);
  std::vector<int> p = {3, 1, 4, 0, 5, 2}, t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      t[p[a] * 6 + p[b]] = p[z.mul(a, b)];
  Group zp = make_group("Z6'", 6, t);
  CHECK(canonical(conj(zp)) == canonical(conj(z)));
  Group d = dihedral_group(3);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      t[p[a] * 6 + p[b]] = p[d.mul(a, b)];
  CHECK(isomorphic(conj(make_group("S3'", 6, t)), conj(d)));
}

TEST_CASE("catalogue against brute force") {
  std::vector<size_t> expect = {1, 1, 3, 7};
  for (int n = 1; n <= 4; ++n) {
    auto qs = enumerate_quandles(n);
    CHECK(qs.size() == expect[n - 1]);
    auto brute = fixtures::brute_quandle_classes(n);
    CHECK(brute.size() == qs.size());
    for (auto &q : qs) {
      CHECK(check_axioms(q).empty());
      CHECK(brute.count(q.op) == 1);
    }
  }
}

TEST_CASE("table text round trip") {
  for (auto &q : fixtures::quandles_up_to(4))
    CHECK(parse_quandle(print_quandle(q)) == q);
  CHECK(parse_quandle("quandle 2\n0 0\n1 1\n") == trivial_quandle(2));
  CHECK_THROWS_AS(parse_quandle("2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_quandle("x\n"), ParseError);
}
