#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegaq/error.hpp"

namespace omegaq {

int default_dim_bound();

enum class Side { Source, Target };

// A cell is addressed by (dim, index into cells_by_dim[dim]).
struct CellRef {
  int dim = 0;
  int idx = 0;
  auto operator<=>(const CellRef &) const = default;
};

struct Violation {
  CellRef cell;
  std::string what;
};

class GlobSet {
public:
  explicit GlobSet(int max_dim = default_dim_bound());

  int max_dim() const { return max_dim_; }
  int count(int dim) const;
  int total() const;
  const std::string &name(CellRef c) const;
  std::optional<CellRef> find(const std::string &name) const;

  int add0(const std::string &name);
  // src and tgt are indices of (dim-1)-cells.
  int add(int dim, const std::string &name, int src, int tgt);

  int src(int dim, int idx) const;
  int tgt(int dim, int idx) const;
  int boundary(int dim, int idx, Side side) const;

  // Unchecked mutation of a boundary pointer, for building counterexamples.
  void set_boundary(int dim, int idx, Side side, int to);

  std::vector<Violation> validate() const;

  // j-dimensional iterated source/target; j == dim returns the cell itself.
  int iterated_boundary(int dim, int idx, Side side, int j) const;

  std::vector<std::pair<int, int>> parallel_pairs(int k) const;
  bool parallel(int dim, int x, int y) const;

private:
  int max_dim_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> src_, tgt_;
  std::map<std::string, CellRef> by_name_;
};

// Component maps per dimension; comp[d][i] is the image of the d-cell i.
struct GlobMap {
  const GlobSet *dom = nullptr;
  const GlobSet *cod = nullptr;
  std::vector<std::vector<int>> comp;

  int operator()(int dim, int idx) const { return comp[dim][idx]; }
  std::vector<Violation> validate() const;
};

GlobMap identity_map(const GlobSet &g);
// g after f
GlobMap compose(const GlobMap &g, const GlobMap &f);

struct CellLine {
  int line = 0;
  int dim = 0;
  std::string id, src, tgt;
  std::string rest; // anything after the recognized keys, e.g. "arity=..."
};

std::vector<CellLine> read_cell_lines(const std::string &text);
GlobSet build_globset(const std::vector<CellLine> &lines, int max_dim);
GlobSet parse_globset(const std::string &text, int max_dim = default_dim_bound());
std::string print_globset(const GlobSet &g);

// Two 0-cells a,b; parallel 1-cells f,g: a -> b; a 2-cell alpha: f => g.
GlobSet theta_set();

// The terminal globular set: one cell per dimension.
GlobSet terminal_globset(int max_dim);

} // namespace omegaq
