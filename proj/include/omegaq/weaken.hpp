#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "omegaq/circuit.hpp"
#include "omegaq/globularize.hpp"

namespace omegaq {

// Pairs (a, b) of (n-1)-cells of the domain, parallel when n >= 2, with
// f(a) = src(nu) and f(b) = tgt(nu); nu is an n-cell of the codomain, n >= 1.
using CellPair = std::pair<int, int>;
std::vector<CellPair> par_f(const GlobMap &f, int dim, int nu);

// kappa[(n, nu, a, b)] is an n-cell of the domain.
struct Contraction {
  std::map<std::tuple<int, int, int, int>, int> kappa;
  void set(int dim, int nu, int a, int b, int cell) { kappa[{dim, nu, a, b}] = cell; }
};

struct ContractionReport {
  std::vector<std::string> missing;    // pairs of Par_f without an assignment
  std::vector<std::string> violations; // equation 1 (source), 2 (target), 3 (image)
  long checked = 0;
  bool ok() const { return missing.empty() && violations.empty(); }
};

ContractionReport check_contraction(const GlobMap &f, const Contraction &k);

// A cell of the globularized base: scheme plus operation class in normal form.
struct BaseCell {
  Scheme shape;
  ProType type;
  std::vector<Word> nf;
  bool operator==(const BaseCell &o) const {
    return shape == o.shape && type == o.type && nf == o.nf;
  }
};

// Syntax of the free PRO with contraction. 0-cells are circuits over the
// seeds (generators, units, composites and sums of 0-cells all normalize
// to one); Unit(n) is the unit 1-cell on id_n; Comp takes a 1-cell x of
// arity path(k) and a word: k composable 1-cells, or one 0-cell when k = 0.
struct FreeCell {
  enum class Kind { Zero, Unit, IdOf, Lift, Comp, Mon };
  Kind kind = Kind::Zero;
  Circuit zero;
  int wires = 0;
  BaseCell nu;
  std::vector<FreeCell> args;

  bool operator==(const FreeCell &) const = default;

  static FreeCell of(Circuit c) { return {Kind::Zero, std::move(c), 0, {}, {}}; }
  static FreeCell unit(int n) { return {Kind::Unit, {}, n, {}, {}}; }
  static FreeCell id_of(FreeCell x) { return {Kind::IdOf, {}, 0, {}, {std::move(x)}}; }
  static FreeCell lift(BaseCell nu, FreeCell a, FreeCell b) {
    return {Kind::Lift, {}, 0, std::move(nu), {std::move(a), std::move(b)}};
  }
  static FreeCell comp(FreeCell x, std::vector<FreeCell> word) {
    word.insert(word.begin(), std::move(x));
    return {Kind::Comp, {}, 0, {}, std::move(word)};
  }
  static FreeCell mon(FreeCell a, FreeCell b) {
    return {Kind::Mon, {}, 0, {}, {std::move(a), std::move(b)}};
  }
};

struct CellInfo {
  int dim = 0;
  ProType type;
  std::vector<FreeCell> boundary; // src, tgt (normalized) for dim >= 1
  BaseCell image;
  int size = 0;
};

struct GenerateOptions {
  int dim_bound = 1;
  int size_bound = 8;
  int width_bound = 4;
  unsigned shuffle = 0; // nonzero: process the frontier in a shuffled order
};

// Truncated free PRO with contraction over a globularized PRO. 0-cells
// are materialized; cells of dimension >= 1 are implicit and decided by
// describe(). Sizes: a 0-cell counts its generators (at least 1), a lift
// counts 1 plus its two boundary cells, other constructors 1 plus their
// arguments.
struct TruncatedSP {
  const GlobularizedPro *base = nullptr;
  std::vector<std::string> seeds; // sorted
  GenTypes types;
  GenerateOptions opt;
  int zero_bound = 0; // largest generator count of a materialized 0-cell

  std::vector<std::string> zero; // packed circuits, canonical order
  std::vector<int> zero_class;
  struct Class {
    ProType type;
    std::vector<Word> nf;
  };
  std::vector<Class> classes;
  std::map<std::string, int> class_index;
  std::vector<std::vector<int>> fiber; // class -> 0-cells, canonical order

  long cut_by_size = 0, cut_by_width = 0;

  int find_zero(const Circuit &c) const; // -1 when not generated
  int zero_size(int i) const;
  Circuit circuit(int i) const { return unpack(zero[i]); }
  std::vector<Scheme> shapes(int dim) const; // cells of the base's scheme bound
  BaseCell class_cell(int cls, Scheme shape) const;
};

int cell_size(const Circuit &c);

TruncatedSP generate_truncated_sp(const GlobularizedPro &base, std::vector<std::string> seeds,
                                  const GenerateOptions &opt = {});

// Boundaries, image and size of a cell; throws Error when ill-formed or
// beyond the dimension bound.
CellInfo describe(const TruncatedSP &sp, const FreeCell &c);
// Strict PRO laws: units, sums and composites of identities, canonical circuits.
FreeCell normalize(const TruncatedSP &sp, FreeCell c);
std::string print_cell(const TruncatedSP &sp, const FreeCell &c);
std::string print_base(const BaseCell &b);
// "cell <dim> <n>-><m> <syntax> image=(<scheme>,<class>)"
std::string dump_line(const TruncatedSP &sp, const FreeCell &c);

struct LiftResult {
  std::optional<FreeCell> cell;
  bool degenerate = false; // equal ends: an identity is available instead
  int size = 0;
  std::string reason; // why no cell, when absent
};

// Lift over (globe_1, class) between the 0-cells denoted by two terms.
// Throws Error when the terms have different types or different images.
LiftResult find_lift(const TruncatedSP &sp, const ProTerm &a, const ProTerm &b);

using KappaFn = std::function<std::optional<FreeCell>(const BaseCell &nu, const FreeCell &a,
                                                      const FreeCell &b)>;
FreeCell canonical_lift(const BaseCell &nu, const FreeCell &a, const FreeCell &b);

// Exhaustive over every nonzero base cell whose fibre is generated and
// every pair of Par whose lift fits the size bound; kappa defaults to the
// canonical lift.
ContractionReport check_contraction(const TruncatedSP &sp, const KappaFn &kappa = {});

struct Inventory {
  std::vector<long> zero_by_size;
  long zero = 0, classes = 0;
  std::vector<long> lifts;      // by dimension, index 0 unused
  std::vector<long> degenerate; // lifts between equal ends
  std::uint64_t digest = 0;     // of the 0-cells and their classes, in order
  bool operator==(const Inventory &) const = default;
};

Inventory inventory(const TruncatedSP &sp);

} // namespace omegaq
