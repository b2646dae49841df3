// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "knot_fixtures.hpp"
#include "omegaq/globularize.hpp"
#include "omegaq/weaken.hpp"
#include "weaken_fixtures.hpp"

using namespace omegaq;

namespace {

// Pinned limits.
constexpr double kMonadSeconds = 60.0;
constexpr double kCatalogueSeconds = 120.0;
constexpr int kMonadSize = 5;
constexpr int kBoxSize = 4;
constexpr int kInterchangeSize = 3;
constexpr int kInterchangeSamples = 20;
constexpr int kOperadSize = 5;
constexpr int kProSize = 4;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome monad_laws() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  long units = 0, assoc = 0;
  for (const GlobSet &g : {terminal_globset(3), theta_set()}) {
    auto r = check_monad_laws(g, 3, kMonadSize);
    units += r.unit_checked;
    assoc += r.assoc_checked;
    o.require(r.ok(), r.ok() ? "" : r.violations[0]);
  }
  double s = seconds_since(t0);
  o.require(units > 0 && assoc > 0, "nothing enumerated");
  o.require(s < kMonadSeconds, "runtime " + std::to_string(s) + " s");
  o.detail = o.pass ? std::to_string(units) + " unit cells, " + std::to_string(assoc) +
                          " associativity cells, " + std::to_string(s) + " s"
                    : o.detail;
  return o;
}

Outcome box_coherence() {
  Outcome o;
  Collection i = unit_I(3), one = terminal_coll(kBoxSize, 3);
  Collection r = fixtures::random_collection(1, 3, kBoxSize);
  std::vector<const Collection *> xs = {&i, &one, &r};
  long checks = 0;
  auto take = [&](const std::vector<std::string> &v) {
    ++checks;
    o.require(v.empty(), v.empty() ? "" : v[0]);
  };
  for (auto *x : xs)
    take(check_unitors(*x, kBoxSize));
  for (auto *x : xs)
    for (auto *y : xs)
      take(check_triangle(*x, *y, kBoxSize));
  for (auto *x : xs)
    for (auto *y : xs)
      for (auto *z : xs)
        take(check_pentagon(*x, *y, *z, one, kBoxSize));
  if (o.pass)
    o.detail = std::to_string(checks) + " unitor, triangle and pentagon checks";
  return o;
}

Outcome duoidal() {
  Outcome o;
  fixtures::ArrowPool pool(kInterchangeSize);
  std::mt19937 rng(2024);
  int n = 0;
  for (int t = 0; t < kInterchangeSamples; ++t) {
    auto pick = [&]() -> const CollArrow & { return pool.arrows[rng() % pool.arrows.size()]; };
    auto &fa = pick();
    auto &fb = pick();
    auto &fc = pick();
    auto &fd = pick();
    auto v = check_interchange_naturality(fa, fb, fc, fd, kInterchangeSize);
    o.require(v.empty(), v.empty() ? "" : v[0]);
    ++n;
  }
  if (o.pass)
    o.detail = std::to_string(n) + " sampled quadruples";
  return o;
}

Outcome terminal_operad_laws() {
  Outcome o;
  GlobOperad t = terminal_operad(kOperadSize, 3);
  auto v = check_operad_laws(t, kOperadSize);
  o.require(v.empty(), v.empty() ? "" : v[0]);
  // any m differing from the constructed one fails to be a collection map
  auto ms = find_coll_maps(t.oo.coll, t.coll, 2);
  o.require(ms.size() == 1 && ms[0] == t.m, "multiplication not unique");
  auto es = find_coll_maps(t.unit, t.coll, 2);
  o.require(es.size() == 1 && es[0] == t.e, "unit not unique");
  if (o.pass)
    o.detail = "laws hold at size " + std::to_string(kOperadSize) + ", m and e unique";
  return o;
}

Outcome globular_pro() {
  Outcome o;
  for (auto p : {quandle_pro(), group_pro()}) {
    GlobularizedPro g = globularize(p, kProSize, 2);
    auto v = check_globular_pro_laws(g, kProSize);
    o.require(v.empty(), p.name + ": " + (v.empty() ? "" : v[0]));
  }
  if (o.pass)
    o.detail = "quandle and group presentations";
  return o;
}

Outcome catalogue() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<size_t> expect = {1, 1, 3, 7}, got;
  for (int n = 1; n <= 4; ++n) {
    auto qs = enumerate_quandles(n);
    auto brute = fixtures::brute_quandle_classes(n);
    got.push_back(qs.size());
    o.require(qs.size() == expect[n - 1], "order " + std::to_string(n) + " count");
    o.require(brute.size() == qs.size(), "order " + std::to_string(n) + " against brute force");
    for (auto &q : qs)
      o.require(brute.count(q.op) == 1, "class missing from brute force");
  }
  double s = seconds_since(t0);
  o.require(s < kCatalogueSeconds, "runtime " + std::to_string(s) + " s");
  if (o.pass)
    o.detail = std::to_string(got[0]) + ", " + std::to_string(got[1]) + ", " +
               std::to_string(got[2]) + ", " + std::to_string(got[3]) + " classes, " +
               std::to_string(s) + " s";
  return o;
}

Outcome knots() {
  Outcome o;
  Quandle r3 = dihedral_quandle(3), r5 = dihedral_quandle(5);
  struct Case {
    const char *knot;
    const Quandle *q;
    long want;
  };
  for (auto c : {Case{"3_1", &r3, 9}, Case{"unknot", &r3, 3}, Case{"4_1", &r3, 3},
                 Case{"4_1", &r5, 25}}) {
    auto k = fixtures::knot(c.knot);
    long fast = count_colorings(k, *c.q), brute = count_colorings_brute(k, *c.q);
    o.require(fast == c.want && brute == c.want,
              std::string(c.knot) + ": " + std::to_string(fast) + "/" + std::to_string(brute));
  }
  auto qs = fixtures::quandles_up_to(4);
  long moves = 0, bad = 0;
  for (auto &[name, pd] : fixtures::corpus()) {
    auto k = parse_pd(pd);
    std::vector<long> sig;
    for (auto &q : qs)
      sig.push_back(count_colorings(k, q));
    for (auto &m : list_moves(k)) {
      auto k2 = apply_move(k, m);
      ++moves;
      for (size_t i = 0; i < qs.size(); ++i)
        bad += count_colorings(k2, qs[i]) != sig[i];
    }
  }
  o.require(bad == 0, std::to_string(bad) + " discrepancies");
  if (o.pass)
    o.detail = "9, 3, 3, 25; " + std::to_string(moves) + " move instances x " +
               std::to_string(qs.size()) + " quandles, 0 discrepancies";
  return o;
}

Outcome conjugation() {
  Outcome o;
  ProPresentation q = quandle_pro(), g = group_pro();
  ProHom h = conj_homomorphism();
  int rels = 0;
  for (auto &r : q.rels) {
    ++rels;
    o.require(normal_form_key(g, apply_hom(h, r.lhs)) == normal_form_key(g, apply_hom(h, r.rhs)),
              "relation " + r.name);
  }
  auto v = check_hom_relations(q, g, h);
  o.require(v.empty(), v.empty() ? "" : v[0]);
  int groups = 0;
  for (auto &grp : small_groups(8)) {
    ++groups;
    auto w = check_axioms(conj(grp));
    o.require(w.empty(), grp.name + ": " + (w.empty() ? "" : w[0]));
  }
  if (o.pass)
    o.detail = std::to_string(rels) + " relations, " + std::to_string(groups) + " groups";
  return o;
}

Outcome weakened_pro() {
  Outcome o;
  const std::vector<std::string> seeds = {"tri", "tri_inv", "dup", "swap", "drop"};
  GlobularizedPro g = globularize(quandle_pro(), 4, 2);
  TruncatedSP sp = generate_truncated_sp(g, seeds, {1, 8, 4, 0});
  struct Pair {
    const char *name, *a, *b;
  };
  for (auto p : {Pair{"idempotence", "comp(dup,tri)", "id(1)"},
                 Pair{"right invertibility", "comp(par(id(1),dup),par(tri,id(1)),tri_inv)",
                      "par(id(1),drop)"},
                 Pair{"left invertibility", "comp(par(id(1),dup),par(tri_inv,id(1)),tri)",
                      "par(id(1),drop)"},
                 Pair{"self-distributivity", "comp(par(tri,id(1)),tri)",
                      "comp(par(id(2),dup),par(id(1),swap,id(1)),par(tri,tri),tri)"}}) {
    LiftResult r = find_lift(sp, parse_term(p.a), parse_term(p.b));
    o.require(r.cell.has_value() && !r.degenerate, std::string(p.name) + ": " + r.reason);
  }
  auto c = check_contraction(sp);
  o.require(c.ok(), "contraction: " + (c.missing.empty() ? (c.violations.empty() ? "" : c.violations[0]) : c.missing[0]));
  Inventory base = inventory(sp);
  for (unsigned shuffle : {17u, 99u}) {
    std::vector<std::string> perm = seeds;
    std::shuffle(perm.begin(), perm.end(), std::mt19937(shuffle));
    Inventory other = inventory(generate_truncated_sp(g, perm, {1, 8, 4, shuffle}));
    o.require(other == base, "shuffled run " + std::to_string(shuffle) + " differs");
  }
  if (o.pass)
    o.detail = "4 lifts, contraction checked on " + std::to_string(c.checked) +
               " pairs, 2 shuffled runs identical (" + std::to_string(base.zero) + " 0-cells)";
  return o;
}

Outcome par_contraction() {
  Outcome o;
  int fixtures_checked = 0;
  for (auto &c : fixtures::par_cases()) {
    ++fixtures_checked;
    for (auto &[nu, want] : c.expected) {
      CellRef r = *c.cod->find(nu);
      o.require(fixtures::names_of(c.f, r.dim, par_f(c.f, r.dim, r.idx)) == want,
                c.name + " at " + nu);
    }
  }
  auto cc = fixtures::contraction_case();
  o.require(check_contraction(cc.f, cc.good).ok(), "good contraction rejected");
  int pinpointed = 0;
  for (auto &d : fixtures::contraction_defects(cc)) {
    auto r = check_contraction(cc.f, d.kappa);
    std::vector<std::string> lines = r.missing;
    lines.insert(lines.end(), r.violations.begin(), r.violations.end());
    bool hit = lines.size() == 1 && lines[0].find(d.expect) == 0;
    o.require(hit, d.name + " not pinpointed");
    pinpointed += hit && d.name != "missing";
  }
  if (o.pass)
    o.detail = std::to_string(fixtures_checked) + " par fixtures, good contraction accepted, " +
               std::to_string(pinpointed) + " defects pinpointed";
  return o;
}

} // namespace

int main() {
  std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"monad laws", monad_laws},
      {"box coherence", box_coherence},
      {"duoidal interchange", duoidal},
      {"terminal operad", terminal_operad_laws},
      {"globularized PRO laws", globular_pro},
      {"quandle catalogue", catalogue},
      {"knot invariants", knots},
      {"conjugation homomorphism", conjugation},
      {"weakened PRO generation", weakened_pro},
      {"par and contraction", par_contraction},
  };
  int failed = 0, n = 0;
  for (auto &[name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("criterion %d (%s): %s - %s\n", n, name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
