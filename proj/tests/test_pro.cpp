#include <doctest.h>

#include <random>

#include "omegaq/pro.hpp"
#include "omegaq/quandle.hpp"

using namespace omegaq;

namespace {

// Random well-typed term with the given arity.
ProTerm random_term(const ProPresentation &p, std::mt19937 &rng, int n, int depth) {
  std::vector<const ProGenerator *> fit;
  for (auto &g : p.gens)
    if (g.arity == n)
      fit.push_back(&g);
  int pick = depth <= 0 ? 0 : int(rng() % 4);
  if (pick == 1 && !fit.empty())
    return ProTerm::gen(fit[rng() % fit.size()]->name);
  if (pick == 2 && n > 0) {
    int k = int(rng() % (n + 1));
    return ProTerm::par({random_term(p, rng, k, depth - 1), random_term(p, rng, n - k, depth - 1)});
  }
  if (pick == 3) {
    ProTerm a = random_term(p, rng, n, depth - 1);
    int m = typecheck(p, a).coarity;
    if (m <= 4)
      return ProTerm::comp({a, random_term(p, rng, m, depth - 1)});
    return a;
  }
  if (!fit.empty() && rng() % 2)
    return ProTerm::gen(fit[rng() % fit.size()]->name);
  return ProTerm::id(n);
}

std::vector<std::vector<int>> all_inputs(int n, int carrier) {
  std::vector<std::vector<int>> out;
  int total = 1;
  for (int k = 0; k < n; ++k)
    total *= carrier;
  for (int c = 0; c < total; ++c)
    out.push_back(decode(c, n, carrier));
  return out;
}

} // namespace

TEST_CASE("typechecking") {
  ProPresentation q = quandle_pro(), g = group_pro();
  CHECK(typecheck(q, parse_term("comp(dup,tri)")) == ProType{1, 1});
  CHECK(typecheck(q, parse_term("par(tri,tri)")) == ProType{4, 2});
  CHECK(typecheck(q, parse_term("id(3)")) == ProType{3, 3});
  try {
    typecheck(g, parse_term("comp(unit,mul)"));
    FAIL("expected a composition error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("composition mismatch at root") == 0);
  }
  try {
    typecheck(g, parse_term("par(id(1),comp(unit,mul))"));
    FAIL("expected a composition error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("at root.2") != std::string::npos);
  }
  CHECK_THROWS_AS(typecheck(q, parse_term("mul")), Error);
  CHECK(validate(q).empty());
  CHECK(validate(g).empty());
}

TEST_CASE("term syntax round trip") {
  for (const char *s : {"tri", "id(0)", "comp(par(id(1),dup),par(tri,id(1)),tri_inv)",
                        "par(drop,par(swap,id(2)))"}) {
    ProTerm t = parse_term(s);
    CHECK(print_term(t) == s);
    CHECK(parse_term(print_term(t)) == t);
  }
  CHECK_THROWS_AS(parse_term("comp(tri,"), Error);
  CHECK_THROWS_AS(parse_term("id(x)"), Error);
  CHECK_THROWS_AS(parse_term("tri tri"), Error);
  CHECK(term_size(parse_term("comp(dup,par(tri,id(1)))")) == 2);
}

TEST_CASE("evaluation on small models") {
  ProPresentation q = quandle_pro(), g = group_pro();
  FiniteModel r3 = quandle_model(dihedral_quandle(3), "R3");
  // a |> a = 2a - a
  for (int a = 0; a < 3; ++a)
    CHECK(eval(q, parse_term("comp(dup,tri)"), r3, {a}) == std::vector<int>{(2 * a - a) % 3});
  CHECK(eval(q, ProTerm::id(2), r3, {2, 1}) == std::vector<int>{2, 1});
  FiniteModel z2 = group_model(cyclic(2));
  CHECK(eval(g, parse_term("comp(par(inv,id(1)),mul)"), z2, {1, 1}) == std::vector<int>{0});
  CHECK_THROWS_AS(eval(g, parse_term("mul"), z2, {1}), Error);
}

TEST_CASE("evaluation is a homomorphism for comp and par") {
  std::mt19937 rng(7);
  ProPresentation q = quandle_pro();
  FiniteModel m = quandle_model(conj(dihedral_group(3)), "S3");
  for (int trial = 0; trial < 200; ++trial) {
    int n = int(rng() % 3);
    ProTerm a = random_term(q, rng, n, 3);
    int k = typecheck(q, a).coarity;
    if (k > 3)
      continue;
    ProTerm b = random_term(q, rng, k, 3);
    int j = int(rng() % 3);
    ProTerm c = random_term(q, rng, j, 2);
    for (auto &in : all_inputs(n, m.carrier)) {
      CHECK(eval(q, ProTerm::comp({a, b}), m, in) == eval(q, b, m, eval(q, a, m, in)));
      int tails = j == 0 ? 1 : j == 1 ? 6 : 36;
      auto tail = decode(int(rng() % tails), j, m.carrier);
      std::vector<int> both = in;
      both.insert(both.end(), tail.begin(), tail.end());
      auto x = eval(q, a, m, in), y = eval(q, c, m, tail);
      x.insert(x.end(), y.begin(), y.end());
      CHECK(eval(q, ProTerm::par({a, c}), m, both) == x);
    }
  }
}

TEST_CASE("quandle presentation models are exactly the quandles") {
  ProPresentation q = quandle_pro();
  // every binary table on 1 or 2 points, every idempotent one on 3 points
  for (int n = 1; n <= 3; ++n) {
    int cells = n * n, free = n == 3 ? cells - n : cells;
    long total = 1;
    for (int k = 0; k < free; ++k)
      total *= n;
    for (long code = 0; code < total; ++code) {
      std::vector<int> t(cells);
      long c = code;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (n == 3 && a == b) {
            t[a * n + b] = a;
            continue;
          }
          t[a * n + b] = int(c % n);
          c /= n;
        }
      Quandle x = make_quandle(n, t);
      bool axioms = check_axioms(x).empty();
      bool model = check_model(q, quandle_model(x, "t")).empty();
      CHECK(axioms == model);
    }
  }
  for (int n = 1; n <= 4; ++n)
    for (auto &x : enumerate_quandles(n))
      CHECK(check_model(q, quandle_model(x, "q")).empty());
}

TEST_CASE("a non-idempotent table fails at a located relation") {
  ProPresentation q = quandle_pro();
  // a |> b = a + 1 mod 2 is right invertible but not idempotent
  Quandle x = make_quandle(2, {1, 1, 0, 0});
  auto v = check_model(q, quandle_model(x, "bad"));
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].find("relation idempotence at (0)") == 0);
}

TEST_CASE("group presentation models") {
  ProPresentation g = group_pro();
  CHECK(check_model(g, group_model(cyclic(3))).empty());
  for (auto &x : small_groups(8)) {
    CHECK(check_group_axioms(x).empty());
    CHECK(check_model(g, group_model(x)).empty());
  }
  // subtraction mod 3 is not associative
  FiniteModel sub = group_model(cyclic(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      sub.table["mul"][a * 3 + b] = {((a - b) % 3 + 3) % 3};
  auto v = check_model(g, sub);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].find("relation associativity") == 0);
}

TEST_CASE("term equality verdicts") {
  ProPresentation q = quandle_pro(), g = group_pro();
  Verdict v = terms_equal(g, parse_term("comp(par(mul,id(1)),mul)"),
                          parse_term("comp(par(id(1),mul),mul)"));
  CHECK(v.kind == Verdict::Kind::Equal);
  v = terms_equal(q, parse_term("comp(dup,tri)"), ProTerm::id(1));
  CHECK(v.kind == Verdict::Kind::Equal);
  CHECK(v.method == "relation idempotence");
  // the dihedral quandle on three points is involutory and cannot separate
  FiniteModel r3 = quandle_model(dihedral_quandle(3), "R3");
  for (auto &in : all_inputs(2, 3))
    CHECK(eval(q, ProTerm::gen("tri"), r3, in) == eval(q, ProTerm::gen("tri_inv"), r3, in));
  v = terms_equal(q, ProTerm::gen("tri"), ProTerm::gen("tri_inv"));
  REQUIRE(v.kind == Verdict::Kind::Distinct);
  REQUIRE(v.model);
  CHECK(v.model->carrier == 4);
  CHECK(eval(q, ProTerm::gen("tri"), *v.model, v.input) !=
        eval(q, ProTerm::gen("tri_inv"), *v.model, v.input));
  // equal via normal form though no relation matches syntactically
  v = terms_equal(g, parse_term("comp(inv,inv)"), ProTerm::id(1));
  CHECK(v.kind == Verdict::Kind::Equal);
  CHECK(v.method == "normal form");
  // no procedure and no models: unknown
  ProPresentation bare = parse_presentation("gen f 1 1\ngen h 1 1\n");
  v = terms_equal(bare, ProTerm::gen("f"), ProTerm::gen("h"));
  CHECK(v.kind == Verdict::Kind::Unknown);
}

TEST_CASE("equality verdicts are sound against evaluation") {
  std::mt19937 rng(11);
  ProPresentation q = quandle_pro(), g = group_pro();
  std::vector<FiniteModel> qm = separating_models(q);
  qm.push_back(quandle_model(conj(dihedral_group(3)), "S3"));
  std::vector<FiniteModel> gm = separating_models(g);
  int equal = 0, distinct = 0;
  for (int trial = 0; trial < 300; ++trial) {
    bool isq = trial % 2;
    const ProPresentation &p = isq ? q : g;
    auto &models = isq ? qm : gm;
    int n = 1 + int(rng() % 2);
    ProTerm a = random_term(p, rng, n, 4), b = random_term(p, rng, n, 4);
    if (!(typecheck(p, a) == typecheck(p, b)))
      continue;
    Verdict v = terms_equal(p, a, b);
    REQUIRE(v.kind != Verdict::Kind::Unknown);
    if (v.kind == Verdict::Kind::Equal) {
      ++equal;
      for (auto &m : models)
        if (m.carrier <= 4)
          for (auto &in : all_inputs(n, m.carrier))
            CHECK(eval(p, a, m, in) == eval(p, b, m, in));
    } else {
      ++distinct;
      if (v.model)
        CHECK(eval(p, a, *v.model, v.input) != eval(p, b, *v.model, v.input));
    }
  }
  CHECK(equal > 0);
  CHECK(distinct > 0);
}

TEST_CASE("free group words") {
  CHECK(reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(fg_mul({1, 2}, {-2, 3}) == Word{1, 3});
  CHECK(fg_mul(fg_inv({1, -2, 3}), {1, -2, 3}).empty());
  CHECK(print_word({1, -2}) == "x1 x2^-1");
  CHECK(print_word({}) == "1");
  ProPresentation g = group_pro();
  CHECK(normal_form(g, parse_term("comp(par(inv,id(1)),mul)")) == std::vector<Word>{{-1, 2}});
}

TEST_CASE("conjugation is a PRO homomorphism") {
  ProPresentation q = quandle_pro(), g = group_pro();
  ProHom h = conj_homomorphism();
  CHECK(check_hom_relations(q, g, h).empty());
  // tri goes to y^-1 x y
  CHECK(normal_form(g, h.at("tri")) == std::vector<Word>{{-2, 1, 2}});
  CHECK(normal_form(g, h.at("tri_inv")) == std::vector<Word>{{2, 1, -2}});
  // idempotence image: x^-1 x x = x
  CHECK(normal_form(g, apply_hom(h, parse_term("comp(dup,tri)"))) == std::vector<Word>{{1}});
  for (auto &grp : small_groups(8)) {
    FiniteModel cg = quandle_model(conj(grp), grp.name);
    CHECK(check_model(q, cg).empty());
    CHECK(check_axioms(conj(grp)).empty());
    // evaluating the image in the group model agrees with conj
    for (auto &in : all_inputs(2, grp.n))
      CHECK(eval(g, h.at("tri"), group_model(grp), in) == eval(q, ProTerm::gen("tri"), cg, in));
  }
  // a wrong image breaks a relation
  ProHom bad = h;
  bad["tri"] = parse_term("mul");
  CHECK_FALSE(check_hom_relations(q, g, bad).empty());
}

TEST_CASE("presentation and model files") {
  ProPresentation q = quandle_pro();
  ProPresentation back = parse_presentation(print_presentation(q));
  CHECK(back.gens.size() == q.gens.size());
  REQUIRE(back.rels.size() == q.rels.size());
  for (size_t k = 0; k < q.rels.size(); ++k)
    CHECK(back.rels[k].lhs == q.rels[k].lhs);
  CHECK(back.theory == Theory::Quandle);
  std::string text = print_presentation(q);
  CHECK(parse_presentation(text.substr(text.find("gen "))).theory == Theory::None);
  // a decided theory must keep the built-in signature and relations
  try {
    parse_presentation("theory group\ngen mul 2 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line == 1);
  }
  try {
    parse_presentation(print_presentation(group_pro()) + "rel bad inv = id(1)\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("relation bad fails") != std::string::npos);
  }
  FiniteModel m = quandle_model(dihedral_quandle(3), "R3");
  FiniteModel m2 = parse_model(q, print_model(q, m));
  CHECK(m2.table == m.table);
  CHECK(m2.carrier == 3);
  try {
    parse_presentation("gen f 1 1\nrel bad comp(f,f) = id(2)\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line == 2);
  }
  try {
    parse_model(q, "carrier 2\ntable tri\n0 0 : 0\n0 1 : 1\n1 0 : 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_model(q, "carrier 2\ntable tri\n0 0 : 5\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen f 1\n"), ParseError);
}
