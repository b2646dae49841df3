#include "omegaq/globset.hpp"

#include <cstdlib>
#include <sstream>

namespace omegaq {

int default_dim_bound() {
  if (const char *v = std::getenv("OMEGAQ_DIM_BOUND")) {
    char *end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n >= 0 && n <= 16)
      return static_cast<int>(n);
  }
  return 3;
}

GlobSet::GlobSet(int max_dim)
    : max_dim_(max_dim), names_(max_dim + 1), src_(max_dim + 1),
      tgt_(max_dim + 1) {
  if (max_dim < 0)
    throw Error("negative dimension bound");
}

int GlobSet::count(int dim) const {
  if (dim < 0 || dim > max_dim_)
    return 0;
  return static_cast<int>(names_[dim].size());
}

int GlobSet::total() const {
  int n = 0;
  for (auto &v : names_)
    n += static_cast<int>(v.size());
  return n;
}

const std::string &GlobSet::name(CellRef c) const { return names_.at(c.dim).at(c.idx); }

std::optional<CellRef> GlobSet::find(const std::string &name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    return std::nullopt;
  return it->second;
}

int GlobSet::add0(const std::string &name) { return add(0, name, -1, -1); }

int GlobSet::add(int dim, const std::string &name, int src, int tgt) {
  if (dim < 0 || dim > max_dim_)
    throw Error("cell " + name + ": dimension " + std::to_string(dim) +
                " outside bound " + std::to_string(max_dim_));
  if (by_name_.count(name))
    throw Error("duplicate cell id " + name);
  if (dim > 0) {
    int below = count(dim - 1);
    if (src < 0 || src >= below || tgt < 0 || tgt >= below)
      throw Error("cell " + name + ": boundary out of range");
  }
  int idx = count(dim);
  names_[dim].push_back(name);
  src_[dim].push_back(src);
  tgt_[dim].push_back(tgt);
  by_name_[name] = {dim, idx};
  return idx;
}

int GlobSet::src(int dim, int idx) const {
  if (dim < 1)
    throw Error("0-cells have no boundary");
  return src_.at(dim).at(idx);
}

int GlobSet::tgt(int dim, int idx) const {
  if (dim < 1)
    throw Error("0-cells have no boundary");
  return tgt_.at(dim).at(idx);
}

int GlobSet::boundary(int dim, int idx, Side side) const {
  return side == Side::Source ? src(dim, idx) : tgt(dim, idx);
}

void GlobSet::set_boundary(int dim, int idx, Side side, int to) {
  (side == Side::Source ? src_ : tgt_).at(dim).at(idx) = to;
}

std::vector<Violation> GlobSet::validate() const {
  std::vector<Violation> out;
  for (int d = 1; d <= max_dim_; ++d)
    for (int i = 0; i < count(d); ++i) {
      int s = src_[d][i], t = tgt_[d][i];
      if (s < 0 || s >= count(d - 1) || t < 0 || t >= count(d - 1)) {
        out.push_back({{d, i}, "boundary out of range"});
        continue;
      }
      if (d < 2)
        continue;
      if (src_[d - 1][s] != src_[d - 1][t])
        out.push_back({{d, i}, "src(src(x)) != src(tgt(x))"});
      if (tgt_[d - 1][s] != tgt_[d - 1][t])
        out.push_back({{d, i}, "tgt(src(x)) != tgt(tgt(x))"});
    }
  return out;
}

int GlobSet::iterated_boundary(int dim, int idx, Side side, int j) const {
  if (j < 0 || j > dim)
    throw Error("iterated_boundary: dimension out of range");
  while (dim > j)
    idx = boundary(dim--, idx, side);
  return idx;
}

bool GlobSet::parallel(int dim, int x, int y) const {
  if (dim == 0)
    return true;
  return src(dim, x) == src(dim, y) && tgt(dim, x) == tgt(dim, y);
}

std::vector<std::pair<int, int>> GlobSet::parallel_pairs(int k) const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < count(k); ++x)
    for (int y = 0; y < count(k); ++y)
      if (parallel(k, x, y))
        out.emplace_back(x, y);
  return out;
}

std::vector<Violation> GlobMap::validate() const {
  std::vector<Violation> out;
  if (!dom || !cod)
    return {{{0, 0}, "map without domain or codomain"}};
  for (int d = 0; d <= dom->max_dim(); ++d) {
    int n = dom->count(d);
    if (d >= static_cast<int>(comp.size()) || static_cast<int>(comp[d].size()) != n) {
      if (n > 0)
        out.push_back({{d, 0}, "missing components"});
      continue;
    }
    for (int i = 0; i < n; ++i) {
      int y = comp[d][i];
      if (y < 0 || y >= cod->count(d)) {
        out.push_back({{d, i}, "image out of range"});
        continue;
      }
      if (d == 0)
        continue;
      if (comp[d - 1][dom->src(d, i)] != cod->src(d, y))
        out.push_back({{d, i}, "does not commute with src"});
      if (comp[d - 1][dom->tgt(d, i)] != cod->tgt(d, y))
        out.push_back({{d, i}, "does not commute with tgt"});
    }
  }
  return out;
}

GlobMap identity_map(const GlobSet &g) {
  GlobMap m{&g, &g, {}};
  for (int d = 0; d <= g.max_dim(); ++d) {
    m.comp.emplace_back(g.count(d));
    for (int i = 0; i < g.count(d); ++i)
      m.comp[d][i] = i;
  }
  return m;
}

GlobMap compose(const GlobMap &g, const GlobMap &f) {
  if (f.cod != g.dom)
    throw Error("compose: codomain/domain mismatch");
  GlobMap m{f.dom, g.cod, {}};
  for (size_t d = 0; d < f.comp.size(); ++d) {
    m.comp.emplace_back();
    for (int y : f.comp[d])
      m.comp[d].push_back(g.comp.at(d).at(y));
  }
  return m;
}

std::vector<CellLine> read_cell_lines(const std::string &text) {
  std::vector<CellLine> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw))
      continue;
    if (kw != "cell")
      throw ParseError(lineno, "expected 'cell', got '" + kw + "'");
    CellLine c;
    c.line = lineno;
    std::string dimtok;
    if (!(ls >> dimtok >> c.id))
      throw ParseError(lineno, "expected 'cell <dim> <id>'");
    try {
      size_t used = 0;
      c.dim = std::stoi(dimtok, &used);
      if (used != dimtok.size() || c.dim < 0)
        throw std::invalid_argument(dimtok);
    } catch (const std::exception &) {
      throw ParseError(lineno, "bad dimension '" + dimtok + "'");
    }
    std::string tok;
    while (ls >> tok) {
      if (tok.rfind("src=", 0) == 0)
        c.src = tok.substr(4);
      else if (tok.rfind("tgt=", 0) == 0)
        c.tgt = tok.substr(4);
      else {
        std::string rest;
        std::getline(ls, rest);
        c.rest = tok + rest;
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

GlobSet build_globset(const std::vector<CellLine> &lines, int max_dim) {
  int top = max_dim;
  for (auto &c : lines)
    if (c.dim > top)
      throw ParseError(c.line, "dimension " + std::to_string(c.dim) +
                                   " exceeds bound " + std::to_string(max_dim));
  GlobSet g(top);
  // Cells may reference cells declared later; insert dimension by dimension.
  for (int d = 0; d <= top; ++d)
    for (auto &c : lines) {
      if (c.dim != d)
        continue;
      if (d == 0) {
        if (!c.src.empty() || !c.tgt.empty())
          throw ParseError(c.line, "0-cell " + c.id + " cannot have src/tgt");
        if (g.find(c.id))
          throw ParseError(c.line, "duplicate cell id " + c.id);
        g.add0(c.id);
        continue;
      }
      if (c.src.empty() || c.tgt.empty())
        throw ParseError(c.line, "cell " + c.id + " needs src= and tgt=");
      int ends[2];
      const std::string *refs[2] = {&c.src, &c.tgt};
      for (int k = 0; k < 2; ++k) {
        auto r = g.find(*refs[k]);
        if (!r) {
          bool later = false;
          for (auto &o : lines)
            later = later || o.id == *refs[k];
          throw ParseError(c.line, later ? "boundary " + *refs[k] + " of " + c.id +
                                               " has the wrong dimension"
                                         : "dangling reference " + *refs[k]);
        }
        if (r->dim != d - 1)
          throw ParseError(c.line, "boundary " + *refs[k] + " of " + c.id +
                                       " has the wrong dimension");
        ends[k] = r->idx;
      }
      if (g.find(c.id))
        throw ParseError(c.line, "duplicate cell id " + c.id);
      g.add(d, c.id, ends[0], ends[1]);
    }
  return g;
}

GlobSet parse_globset(const std::string &text, int max_dim) {
  auto lines = read_cell_lines(text);
  for (auto &c : lines)
    if (!c.rest.empty())
      throw ParseError(c.line, "unexpected field '" + c.rest + "'");
  return build_globset(lines, max_dim);
}

std::string print_globset(const GlobSet &g) {
  std::ostringstream out;
  for (int d = 0; d <= g.max_dim(); ++d)
    for (int i = 0; i < g.count(d); ++i) {
      out << "cell " << d << ' ' << g.name({d, i});
      if (d > 0)
        out << " src=" << g.name({d - 1, g.src(d, i)})
            << " tgt=" << g.name({d - 1, g.tgt(d, i)});
      out << '\n';
    }
  return out.str();
}

GlobSet theta_set() {
  GlobSet g(3);
  int a = g.add0("a"), b = g.add0("b");
  int f = g.add(1, "f", a, b), h = g.add(1, "g", a, b);
  g.add(2, "alpha", f, h);
  return g;
}

GlobSet terminal_globset(int max_dim) {
  GlobSet g(max_dim);
  g.add0("*");
  for (int d = 1; d <= max_dim; ++d)
    g.add(d, "*" + std::to_string(d), 0, 0);
  return g;
}

} // namespace omegaq
