#pragma once

#include <array>
#include <string>
#include <vector>

#include "omegaq/error.hpp"
#include "omegaq/quandle.hpp"

namespace omegaq {

// Oriented planar diagram in PD notation. X(a,b,c,d) lists the edge labels
// counterclockwise from the incoming under-edge a; the under-strand leaves
// along c. A crossing is positive when the over-strand enters along d and
// leaves along b. Crossingless closed strands are listed separately.
struct KnotDiagram {
  std::vector<std::array<int, 4>> x;
  std::vector<int> loops;
  std::vector<int> sign; // derived by validation, +1 or -1 per crossing

  bool operator==(const KnotDiagram &o) const { return x == o.x && loops == o.loops; }
};

// Lines "X a b c d" (brackets and commas allowed) and "O a" for a closed
// strand without crossings; '#' starts a comment.
KnotDiagram parse_pd(const std::string &text);
std::string print_pd(const KnotDiagram &k);
// Fills in the signs; throws Error when a label is not used exactly twice,
// the strand orientations disagree or the diagram is not planar.
void validate(KnotDiagram &k);

int components(const KnotDiagram &k);
int writhe(const KnotDiagram &k);

// Arcs run from under-crossing to under-crossing. At a positive crossing
// the outgoing under-arc is in |> over, at a negative one in |>^-1 over.
struct Wirtinger {
  int arcs = 0;
  std::vector<int> arc_of; // edge label -> arc, index 0 unused
  struct Relation {
    int out, in, over, sign;
  };
  std::vector<Relation> relations;
};

Wirtinger wirtinger(const KnotDiagram &k);
std::string print_wirtinger(const Wirtinger &w);

long count_colorings(const KnotDiagram &k, const Quandle &q);
// Every assignment of arcs, filtered.
long count_colorings_brute(const KnotDiagram &k, const Quandle &q);

// Relabelled consecutively along each component, least PD over the choices
// of starting edges and component order; isomorphic diagrams agree.
KnotDiagram canonical(const KnotDiagram &k);

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };
std::string move_name(MoveKind m);
MoveKind parse_move_kind(const std::string &s);

// Sites, by edge labels of the diagram the move applies to:
//   R1+ "e L|R +|-"   curl on edge (or closed strand) e, on its left or
//                     right, with a crossing of the given sign
//   R1- "e"           the monogon bounded by edge e
//   R2+ "a b L|R L|R" edge a pushed over edge b across the face on the
//                     given side of a, which lies on the given side of b
//   R2- "e1 e2"       the bigon bounded by e1 < e2
//   R3  "e1 e2 e3"    the triangle bounded by e1 < e2 < e3
struct MoveInstance {
  MoveKind kind;
  std::string site;
};

std::vector<MoveInstance> list_moves(const KnotDiagram &k);
std::vector<MoveInstance> list_moves(const KnotDiagram &k, MoveKind kind);
// The rewritten diagram, canonical; throws Error when the site does not
// match the pattern of the move.
KnotDiagram apply_move(const KnotDiagram &k, const MoveInstance &m);

} // namespace omegaq
