#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegaq/error.hpp"
#include "omegaq/freegroup.hpp"

namespace omegaq {

// Expression tree: generator, identity wire id(n), juxtaposition par(...)
// and sequential composition comp(...), where comp(a, b) runs a then b.
struct ProTerm {
  enum class Kind { Gen, Id, Par, Comp };
  Kind kind = Kind::Id;
  std::string name;
  int n = 0;
  std::vector<ProTerm> args;

  static ProTerm gen(std::string name) { return {Kind::Gen, std::move(name), 0, {}}; }
  static ProTerm id(int n) { return {Kind::Id, {}, n, {}}; }
  static ProTerm par(std::vector<ProTerm> a) { return {Kind::Par, {}, 0, std::move(a)}; }
  static ProTerm comp(std::vector<ProTerm> a) { return {Kind::Comp, {}, 0, std::move(a)}; }
  bool operator==(const ProTerm &) const = default;
};

ProTerm parse_term(const std::string &text);
std::string print_term(const ProTerm &t);
int term_size(const ProTerm &t); // generator occurrences

struct ProGenerator {
  std::string name;
  int arity = 0, coarity = 0;
};

struct ProRelation {
  std::string name;
  ProTerm lhs, rhs;
};

// Which complete equality procedure applies; only the built-in
// presentations carry one.
enum class Theory { None, Group, Quandle };

struct ProPresentation {
  std::string name;
  std::vector<ProGenerator> gens;
  std::vector<ProRelation> rels;
  Theory theory = Theory::None;

  const ProGenerator *find(const std::string &g) const;
};

struct ProType {
  int arity = 0, coarity = 0;
  bool operator==(const ProType &) const = default;
};

// Throws Error naming the position ("root", "root.2", ...) of the first
// ill-typed node.
ProType typecheck(const ProPresentation &p, const ProTerm &t);
std::vector<std::string> validate(const ProPresentation &p);

ProPresentation quandle_pro();
ProPresentation group_pro();

// "name N", "gen NAME ARITY COARITY", "rel NAME LHS = RHS"
ProPresentation parse_presentation(const std::string &text);
std::string print_presentation(const ProPresentation &p);

// dup, swap and drop have their cartesian meaning wherever no other
// interpretation is supplied.
bool is_cartesian(const std::string &name, ProType t);
template <class V> std::vector<V> cartesian(const std::string &name, const std::vector<V> &in) {
  if (name == "dup")
    return {in[0], in[0]};
  if (name == "swap")
    return {in[1], in[0]};
  return {};
}

// Structural evaluation: comp pipes tuples, par splits and concatenates.
template <class V, class F>
std::vector<V> interpret(const ProPresentation &p, const ProTerm &t, std::vector<V> in, F &&gen) {
  switch (t.kind) {
  case ProTerm::Kind::Gen:
    return gen(t.name, in);
  case ProTerm::Kind::Id:
    return in;
  case ProTerm::Kind::Comp:
    for (auto &a : t.args)
      in = interpret<V>(p, a, std::move(in), gen);
    return in;
  case ProTerm::Kind::Par: {
    std::vector<V> out;
    size_t pos = 0;
    for (auto &a : t.args) {
      size_t k = size_t(typecheck(p, a).arity);
      std::vector<V> part(in.begin() + pos, in.begin() + pos + k);
      pos += k;
      auto r = interpret<V>(p, a, std::move(part), gen);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  }
  return in;
}

// Interpretation of every generator on a finite carrier 0..carrier-1;
// table[g][code] lists the outputs for the input tuple with base-carrier
// code (first entry most significant).
struct FiniteModel {
  std::string name;
  int carrier = 0;
  std::map<std::string, std::vector<std::vector<int>>> table;

  std::vector<int> apply(const ProPresentation &p, const std::string &g,
                         const std::vector<int> &in) const;
};

int encode(const std::vector<int> &in, int carrier);
std::vector<int> decode(int code, int len, int carrier);

std::vector<int> eval(const ProPresentation &p, const ProTerm &t, const FiniteModel &m,
                      const std::vector<int> &input);
// Every relation on every input tuple; violations are located.
std::vector<std::string> check_model(const ProPresentation &p, const FiniteModel &m);

// "carrier N", "table NAME", rows "i1 i2 : o1 ..."
FiniteModel parse_model(const ProPresentation &p, const std::string &text);
std::string print_model(const ProPresentation &p, const FiniteModel &m);

struct Quandle;
struct Group;
FiniteModel quandle_model(const Quandle &q, const std::string &name);
FiniteModel group_model(const Group &g);

// Candidate separating models in canonical order: quandles of order <= 4,
// groups of order <= 8.
std::vector<FiniteModel> separating_models(const ProPresentation &p);

// Tuples of reduced free-group words; quandle terms go through conjugation.
std::vector<Word> normal_form(const ProPresentation &p, const ProTerm &t);
std::string normal_form_key(const ProPresentation &p, const ProTerm &t);
// One generator applied to word inputs.
std::vector<Word> apply_normal_form(const ProPresentation &p, const std::string &gen,
                                    const std::vector<Word> &in);
std::string nf_key(ProType t, const std::vector<Word> &nf);
// Composition and sum of classes in normal form: substitution of the
// first tuple into the letters of the second, and juxtaposition.
std::vector<Word> nf_compose(const std::vector<Word> &first, const std::vector<Word> &then);
std::vector<Word> nf_plus(const std::vector<Word> &a, int arity_a, const std::vector<Word> &b);

struct Verdict {
  enum class Kind { Equal, Distinct, Unknown };
  Kind kind = Kind::Unknown;
  std::string method;
  std::optional<FiniteModel> model;
  std::vector<int> input, lhs, rhs;
};

// budget caps the number of (model, input) evaluations in the witness search.
Verdict terms_equal(const ProPresentation &p, const ProTerm &a, const ProTerm &b,
                    long budget = 1000000);
std::string verdict_name(Verdict::Kind k);

using ProHom = std::map<std::string, ProTerm>;
ProTerm apply_hom(const ProHom &h, const ProTerm &t);
ProHom conj_homomorphism(); // quandle_pro -> group_pro
// Relations of `from` whose images are not equal in `to`.
std::vector<std::string> check_hom_relations(const ProPresentation &from,
                                             const ProPresentation &to, const ProHom &h);

} // namespace omegaq
