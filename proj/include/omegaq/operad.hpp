#pragma once

#include <functional>
#include <string>
#include <vector>

#include "omegaq/coll.hpp"

namespace omegaq {

// A box-monoid materialized at a size bound: m is defined on oo = box(coll, coll).
struct GlobOperad {
  Collection coll;
  int max_size = 0;
  Box oo;
  Collection unit; // unit_I of the same dimension
  CollMap m, e;
};

GlobOperad terminal_operad(int max_size, int max_dim = default_dim_bound());
GlobOperad unit_operad(int max_size, int max_dim = default_dim_bound());

// Inclusion of a box built at a smaller bound into one built at a larger bound.
CollMap inclusion(const Box &small, const Box &big);

// Associativity and both unit laws, cell by cell, on boxes built at
// max_size (which must not exceed o.max_size).
std::vector<std::string> check_operad_laws(const GlobOperad &o, int max_size);

// Carrier used as a degenerate collection; omega : box(O, degenerate(carrier)) -> carrier.
struct OperadAlgebra {
  GlobSet carrier;
  Collection deg;
  Box oa;
  CollMap omega;
};

// Builds the algebra whose action is given by act(cell, word) -> carrier cell.
OperadAlgebra make_algebra(const GlobOperad &o, GlobSet carrier, int max_size,
                           const std::function<int(int dim, const BoxCell &)> &act);

std::vector<std::string> check_algebra(const GlobOperad &o, const OperadAlgebra &a,
                                       int max_size);

// Backtracking search for collection maps dom -> cod; stops after `limit`.
std::vector<CollMap> find_coll_maps(const Collection &dom, const Collection &cod, size_t limit);

} // namespace omegaq
