#include "omegaq/group.hpp"

#include "omegaq/error.hpp"

namespace omegaq {

Group make_group(std::string name, int n, std::vector<int> table) {
  if (int(table.size()) != n * n)
    throw Error("group table has the wrong size");
  Group g{std::move(name), n, std::move(table), -1, {}};
  for (int a = 0; a < n && g.e < 0; ++a) {
    bool unit = true;
    for (int b = 0; b < n && unit; ++b)
      unit = g.mul(a, b) == b && g.mul(b, a) == b;
    if (unit)
      g.e = a;
  }
  if (g.e < 0)
    throw Error("group " + g.name + " has no identity");
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.e && g.mul(b, a) == g.e)
        g.inverse[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inverse[a] < 0)
      throw Error("group " + g.name + ": element " + std::to_string(a) + " has no inverse");
  return g;
}

std::vector<std::string> check_group_axioms(const Group &g) {
  std::vector<std::string> out;
  for (int x : g.table)
    if (x < 0 || x >= g.n)
      return {"table entry out of range"};
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          out.push_back("associativity at (" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")");
  return out;
}

Group cyclic(int n) {
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = (a + b) % n;
  return make_group("Z" + std::to_string(n), n, t);
}

Group direct_product(const Group &a, const Group &b) {
  int n = a.n * b.n;
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x * n + y] = a.mul(x / b.n, y / b.n) * b.n + b.mul(x % b.n, y % b.n);
  return make_group(a.name + "x" + b.name, n, t);
}

Group dihedral_group(int k) {
  // r^i s^j encoded as i + k*j; s r = r^-1 s
  int n = 2 * k;
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i1 = x % k, j1 = x / k, i2 = y % k, j2 = y / k;
      int i = j1 ? (i1 - i2 + k) % k : (i1 + i2) % k;
      t[x * n + y] = i + k * ((j1 + j2) % 2);
    }
  return make_group("D" + std::to_string(k), n, t);
}

Group quaternion() {
  // elements +-1, +-i, +-j, +-k as sign * 4 + unit index (1, i, j, k)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int u = x % 4, v = y % 4;
      int s = (x / 4 + y / 4 + sign[u][v]) % 2;
      t[x * 8 + y] = s * 4 + unit[u][v];
    }
  return make_group("Q8", 8, t);
}

std::vector<Group> small_groups(int max_order) {
  std::vector<Group> out;
  for (int n = 1; n <= max_order; ++n) {
    out.push_back(cyclic(n));
    if (n == 4)
      out.push_back(direct_product(cyclic(2), cyclic(2)));
    if (n == 6)
      out.push_back(dihedral_group(3));
    if (n == 8) {
      out.push_back(direct_product(cyclic(4), cyclic(2)));
      out.push_back(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
      out.push_back(dihedral_group(4));
      out.push_back(quaternion());
    }
  }
  return out;
}

} // namespace omegaq
