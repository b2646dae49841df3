#pragma once

#include <string>
#include <vector>

namespace omegaq {

// Finite group given by its multiplication table on 0..n-1.
struct Group {
  std::string name;
  int n = 0;
  std::vector<int> table; // table[a * n + b] = a * b
  int e = 0;
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[a * n + b]; }
  int inv(int a) const { return inverse[a]; }
};

// Fills e and inverse from the table; throws Error when there is no identity
// or some element has no inverse.
Group make_group(std::string name, int n, std::vector<int> table);
std::vector<std::string> check_group_axioms(const Group &g);

Group cyclic(int n);
Group direct_product(const Group &a, const Group &b);
Group dihedral_group(int k); // order 2k
Group quaternion();
// One group per isomorphism class, up to order 8.
std::vector<Group> small_groups(int max_order = 8);

} // namespace omegaq
