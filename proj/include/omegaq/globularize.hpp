#pragma once

#include <map>
#include <string>
#include <vector>

#include "omegaq/operad.hpp"
#include "omegaq/pro.hpp"

namespace omegaq {

// Globular PRO whose hom(n, m) is the copower of the terminal collection
// by the operation classes P(n, m): cells are pairs (scheme, class).
// Classes are interned lazily through the theory's normal form.
struct GlobularizedPro {
  ProPresentation pro;
  int max_size = 0, max_dim = 0;
  Collection shapes; // terminal collection at the bound

  struct OpClass {
    ProType type;
    ProTerm rep;
    std::string key;
  };
  std::vector<OpClass> classes;
  std::map<std::string, int> by_key;
  // Overrides for the composition table, keyed by (first, then).
  std::map<std::pair<int, int>, int> corrupted;

  int intern(const ProTerm &t);
  int identity(int n);
  int compose(int first, int then); // first : n -> m, then : m -> p
  int plus(int a, int b);
};

// Throws Error when the presentation has no equality procedure.
GlobularizedPro globularize(const ProPresentation &p, int max_size, int max_dim = 2);

// hom restricted to a list of classes of one type; cell (k, c * S_k + j)
// is (shape j, classes[c]) where S_k counts k-dimensional shapes.
struct Hom {
  Collection coll;
  std::vector<int> classes;
  std::vector<int> per_dim;

  int shape(int dim, int idx) const { return idx % per_dim[dim]; }
  int cls(int dim, int idx) const { return classes[idx / per_dim[dim]]; }
  int find(int dim, int shape, int cls) const; // -1 when absent
};

Hom hom(const GlobularizedPro &g, const std::vector<int> &classes);

// Composition box(hom(m,p), hom(n,m)) -> hom(n,p): schemes compose by mu,
// classes by composition in P. A word lies in a single summand.
MapResult compose_map(GlobularizedPro &g, const Box &b, const Hom &left, const Hom &right,
                      const Hom &target);
// Monoidal sum on the fibered product: (s, a) + (s, b) = (s, a + b).
MapResult plus_map(GlobularizedPro &g, const Product &p, const Hom &a, const Hom &b,
                   const Hom &target);
// I -> hom(n, n): the k-cell of I goes to (k-globe, id_n).
CollMap unit_map(GlobularizedPro &g, int n, const Hom &target);

// Identity wires id(0..2) and every generator.
std::vector<int> default_seeds(GlobularizedPro &g);

// Associativity and unit laws of composition over composable seed
// triples, strict monoid laws of + and its interchange with composition,
// cell by cell on boxes at the bound.
std::vector<std::string> check_globular_pro_laws(GlobularizedPro &g, int max_size,
                                                 std::vector<int> seeds = {});

} // namespace omegaq
