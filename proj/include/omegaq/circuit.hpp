#pragma once

#include <string>
#include <vector>

#include "omegaq/pro.hpp"

namespace omegaq {

// A morphism of the free PRO on a list of generators, drawn as a sequence
// of layers: generator gen acting on wires offset .. offset+arity-1 of the
// current boundary.
struct Layer {
  int gen = 0;
  int offset = 0;
  auto operator<=>(const Layer &) const = default;
};

struct Circuit {
  int in = 0;
  std::vector<Layer> layers;
  auto operator<=>(const Circuit &) const = default;
};

using GenTypes = std::vector<ProType>;

int out_width(const Circuit &c, const GenTypes &t);
int max_width(const Circuit &c, const GenTypes &t); // widest stage, inputs included
int node_count(const Circuit &c);
bool well_typed(const Circuit &c, const GenTypes &t);

// Interchange normal form: a layer lying entirely to the left of the
// outputs of the layer before it is moved up. Canonical for diagrams
// without 0 -> 0 generators.
void canonicalize(Circuit &c, const GenTypes &t);
bool is_canonical(const Circuit &c, const GenTypes &t);

Circuit then(const Circuit &a, const Circuit &b, const GenTypes &t); // a first
Circuit juxtapose(const Circuit &a, const Circuit &b, const GenTypes &t);

// Terms over the named generators; throws Error on other generators.
Circuit from_term(const ProPresentation &p, const ProTerm &term,
                  const std::vector<std::string> &gens);
ProTerm to_term(const Circuit &c, const std::vector<std::string> &gens, const GenTypes &t);

// Compact key: one byte for the input width, two per layer.
std::string pack(const Circuit &c);
Circuit unpack(const std::string &s);

} // namespace omegaq
