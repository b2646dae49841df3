#pragma once

#include <map>
#include <string>
#include <vector>

#include "omegaq/pasting.hpp"

namespace omegaq {

// A globular set with an arity map into T(1). `stages` records, for cells
// produced by box, the arity of every factor in the tower; base
// collections carry a single stage equal to the arity. The box size bound
// is applied to every stage, which keeps the truncation compatible with
// the associator.
struct Collection {
  GlobSet carrier;
  std::vector<std::vector<Scheme>> arity;
  std::vector<std::vector<std::vector<Scheme>>> stages;

  Collection() : Collection(default_dim_bound()) {}
  explicit Collection(int max_dim)
      : carrier(max_dim), arity(max_dim + 1), stages(max_dim + 1) {}

  int max_dim() const { return carrier.max_dim(); }
  int count(int d) const { return carrier.count(d); }
  const Scheme &ar(int d, int i) const { return arity[d][i]; }

  int add(int dim, const std::string &name, int src, int tgt, Scheme a,
          std::vector<Scheme> st = {});
  // arity commutes with src/tgt, dimensions agree
  std::vector<Violation> validate() const;
};

// Component vectors comp[dim][idx]; domain and codomain are supplied when
// checking.
using CollMap = std::vector<std::vector<int>>;

std::vector<Violation> validate_map(const Collection &dom, const Collection &cod,
                                    const CollMap &f);
CollMap identity_cmap(const Collection &x);
CollMap compose_cmap(const CollMap &g, const CollMap &f); // g after f
// First cell where two maps with the same domain differ, if any.
std::vector<Violation> compare_maps(const CollMap &f, const CollMap &g);

Collection unit_I(int max_dim = default_dim_bound());
Collection terminal_coll(int max_size, int max_dim = default_dim_bound());
Collection initial_coll(int max_dim = default_dim_bound());
Collection id_coll(int max_dim = default_dim_bound());
Collection degenerate(const GlobSet &g);

// The unique map into the terminal collection (its arity map).
CollMap to_terminal(const Collection &x, const Collection &terminal);

struct BoxCell {
  int left = 0;
  Diagram word; // labelled by cells of the right factor
  bool operator==(const BoxCell &) const = default;
  bool operator<(const BoxCell &o) const {
    return left != o.left ? left < o.left : word < o.word;
  }
};

struct Box {
  Collection coll;
  std::vector<std::vector<BoxCell>> cells;
  std::vector<std::map<BoxCell, int>> index;
  int max_size = 0;

  int find(int dim, const BoxCell &c) const; // -1 when absent
};

Box box(const Collection &x, const Collection &y, int max_size);

struct MapResult {
  CollMap map;
  std::vector<Violation> problems;
  bool ok() const { return problems.empty(); }
};

// f box g between materialized boxes; source cells whose image falls
// outside the target bound are reported.
MapResult box_map(const Box &from, const Box &to, const CollMap &f, const CollMap &g);

struct Bijection {
  CollMap fwd, inv;
  std::vector<Violation> problems;
  bool ok() const { return problems.empty(); }
};

// I box X -> X, X box I -> X
Bijection left_unitor(const Box &ix, const Collection &x);
Bijection right_unitor(const Box &xi, const Collection &x);
// (X box Y) box Z -> X box (Y box Z); xy_z is box(xy.coll, Z), x_yz is box(X, yz.coll)
Bijection associator(const Box &xy_z, const Box &xy, const Box &x_yz, const Box &yz);

// Fibered product over T(1): pairs of cells with equal arity.
struct Product {
  Collection coll;
  std::vector<std::vector<std::pair<int, int>>> pairs;
  std::vector<std::map<std::pair<int, int>, int>> index;
  int find(int dim, std::pair<int, int> p) const;
};

Product product(const Collection &x, const Collection &y);
MapResult product_map(const Product &from, const Product &to, const CollMap &f,
                      const CollMap &g);
CollMap projection(const Product &p, int which);

// (A x B) box (C x D) -> (A box C) x (B box D)
MapResult interchange(const Box &abcd, const Product &ab, const Product &cd,
                      const Box &ac, const Box &bd, const Product &acbd);

// Duoidal structure maps, used by the test suite.
CollMap delta_map(const Collection &unit, const Product &unit_sq); // I -> I x I
MapResult phi_map(const Box &tt, const Collection &terminal);      // 1 box 1 -> 1
CollMap theta_map(const Collection &unit, const Collection &terminal); // I -> 1

// Cell-wise coherence checks; an empty result means the diagram commutes
// and every structure map involved is a bijection.
std::vector<std::string> check_unitors(const Collection &x, int max_size);
std::vector<std::string> check_triangle(const Collection &x, const Collection &y, int max_size);
std::vector<std::string> check_pentagon(const Collection &w, const Collection &x,
                                        const Collection &y, const Collection &z,
                                        int max_size);

// Naturality square of the interchange for f_i : X_i -> X_i'.
struct CollArrow {
  const Collection *dom;
  const Collection *cod;
  CollMap map;
};
std::vector<std::string> check_interchange_naturality(const CollArrow &fa, const CollArrow &fb,
                                                      const CollArrow &fc, const CollArrow &fd,
                                                      int max_size);

// Text format: globset lines with a trailing arity=@k[...] field.
Collection parse_collection(const std::string &text, int max_dim = default_dim_bound());
std::string print_collection(const Collection &c);

} // namespace omegaq
