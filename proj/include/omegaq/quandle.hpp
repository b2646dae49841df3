#pragma once

#include <string>
#include <vector>

#include "omegaq/group.hpp"

namespace omegaq {

// Binary operation table on 0..n-1; op[a * n + b] = a |> b. The inverse
// table holds a |>^-1 b where each right translation is a bijection, -1
// elsewhere.
struct Quandle {
  int n = 0;
  std::vector<int> op, inv;

  int tri(int a, int b) const { return op[a * n + b]; }
  int tri_inv(int a, int b) const { return inv[a * n + b]; }
  bool operator==(const Quandle &o) const { return n == o.n && op == o.op; }
  bool operator<(const Quandle &o) const { return n != o.n ? n < o.n : op < o.op; }
};

Quandle make_quandle(int n, std::vector<int> op);
// Idempotence, right invertibility and self-distributivity, located.
std::vector<std::string> check_axioms(const Quandle &q);

Quandle trivial_quandle(int n);
Quandle dihedral_quandle(int n); // a |> b = 2b - a mod n
Quandle conj(const Group &g);    // a |> b = b^-1 a b

// Lexicographically least table over all relabellings.
Quandle canonical(const Quandle &q);
// One canonical representative per isomorphism class, sorted.
std::vector<Quandle> enumerate_quandles(int n);

// The order N (optionally "quandle N") followed by N rows of N entries;
// row a lists a |> b.
Quandle parse_quandle(const std::string &text);
std::string print_quandle(const Quandle &q);

} // namespace omegaq
