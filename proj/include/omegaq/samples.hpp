#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "omegaq/coll.hpp"

namespace omegaq::samples {

// One 0-cell, one 1-cell f and a 2-cell f => f; the 2-cell's arity is a
// random 2-scheme of size <= 4 and f's arity is its boundary.
inline Collection random_collection(unsigned seed, int max_dim = 3, int max_size = 4) {
  std::mt19937 rng(seed);
  auto s2 = enumerate_schemes(2, max_size);
  Scheme top = s2[rng() % s2.size()];
  Collection c(max_dim);
  c.add(0, "p", -1, -1, point(Unit{}));
  c.add(1, "f", 0, 0, boundary(top, Side::Source));
  c.add(2, "r", 0, 0, top);
  return c;
}

// Two parallel loops of arity <@0> on one point; admits a swap.
inline Collection two_loops(int max_dim = 3) {
  Collection c(max_dim);
  c.add(0, "p", -1, -1, point(Unit{}));
  c.add(1, "f", 0, 0, path(1));
  c.add(1, "g", 0, 0, path(1));
  return c;
}

// A pool of small collections and arity-respecting maps between them,
// used to sample naturality squares.
struct ArrowPool {
  std::vector<std::unique_ptr<Collection>> objs;
  std::vector<CollArrow> arrows;

  explicit ArrowPool(int bound, int max_dim = 2) {
    auto add = [&](Collection c) {
      objs.push_back(std::make_unique<Collection>(std::move(c)));
      return objs.back().get();
    };
    Collection *one = add(terminal_coll(bound, max_dim));
    Collection *unit = add(unit_I(max_dim));
    Collection *ids = add(id_coll(max_dim));
    Collection *loops = add(two_loops(max_dim));
    Collection *r = add(random_collection(5, max_dim, bound));
    for (Collection *c : {one, unit, ids, loops, r}) {
      arrows.push_back({c, c, identity_cmap(*c)});
      if (c != one)
        arrows.push_back({c, one, to_terminal(*c, *one)});
    }
    CollMap swap = identity_cmap(*loops);
    std::swap(swap[1][0], swap[1][1]);
    arrows.push_back({loops, loops, swap});
    CollMap both_f = identity_cmap(*loops);
    both_f[1][1] = 0;
    arrows.push_back({loops, loops, both_f});
  }
};

} // namespace omegaq::samples
