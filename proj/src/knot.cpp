#include "omegaq/knot.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace omegaq {

namespace {

// Slot 4c + i is position i of crossing c. Slot 0 is the incoming under
// edge, 2 the outgoing one; the over-strand enters at 3 when the crossing
// is positive, at 1 when negative.
struct Graph {
  std::vector<int> nbr;
  std::vector<int> sign;
  int loops = 0;

  int n() const { return int(sign.size()); }
  int over_in(int c) const { return sign[c] > 0 ? 3 : 1; }
  bool is_in(int s) const { return s % 4 == 0 || s % 4 == over_in(s / 4); }
  void link(int a, int b) {
    nbr[a] = b;
    nbr[b] = a;
  }
  int add(int sign_) {
    sign.push_back(sign_);
    nbr.resize(nbr.size() + 4, -1);
    return n() - 1;
  }
};

int opposite(int s) { return s - s % 4 + (s % 4 + 2) % 4; }
int turn(int t) { return t - t % 4 + (t % 4 + 3) % 4; } // clockwise neighbour

struct Built {
  Graph g;
  std::map<int, std::pair<int, int>> edge; // label -> (out slot, in slot)
  std::vector<int> label;                  // slot -> label
  std::vector<int> loop_labels;
};

// Half-edges by starting slot; the face lies to the left.
std::vector<std::vector<int>> faces(const Graph &g) {
  std::vector<std::vector<int>> out;
  std::vector<char> used(g.nbr.size(), 0);
  for (int s = 0; s < int(g.nbr.size()); ++s) {
    if (used[s])
      continue;
    std::vector<int> f;
    int h = s;
    do {
      used[h] = 1;
      f.push_back(h);
      h = turn(g.nbr[h]);
    } while (h != s);
    out.push_back(std::move(f));
  }
  return out;
}

int graph_components(const Graph &g) {
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (int s = 0; s < int(g.nbr.size()); ++s)
    p[find(s / 4)] = find(g.nbr[s] / 4);
  int c = 0;
  for (int i = 0; i < g.n(); ++i)
    c += find(i) == i;
  return c;
}

void check_planar(const Graph &g) {
  if (g.n() == 0)
    return;
  int f = int(faces(g).size()), want = g.n() + 2 * graph_components(g);
  if (f != want)
    throw Error("diagram is not planar: " + std::to_string(f) + " faces, expected " +
                std::to_string(want));
}

Built build(const KnotDiagram &k) {
  Built b;
  Graph &g = b.g;
  int n = int(k.x.size());
  g.nbr.assign(4 * n, -1);
  g.sign.assign(n, 0);
  b.label.assign(4 * n, 0);
  std::map<int, std::vector<int>> occ;
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < 4; ++i) {
      if (k.x[c][i] < 1)
        throw Error("edge labels must be positive");
      occ[k.x[c][i]].push_back(4 * c + i);
      b.label[4 * c + i] = k.x[c][i];
    }
  for (auto &[l, v] : occ)
    if (v.size() != 2)
      throw Error("label " + std::to_string(l) + " occurs " + std::to_string(v.size()) +
                  " times");
  std::set<int> seen;
  for (int l : k.loops) {
    if (l < 1 || occ.count(l) || !seen.insert(l).second)
      throw Error("closed strand label " + std::to_string(l) + " is not unique");
    b.loop_labels.push_back(l);
  }
  g.loops = int(k.loops.size());
  for (auto &[l, v] : occ)
    g.link(v[0], v[1]);

  // orient each strand by its under-passages
  std::vector<char> done(2 * n, 0);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 2; ++p) {
      if (done[2 * c + p])
        continue;
      std::vector<int> entries;
      int e0 = 4 * c + p, e = e0;
      do {
        if (done[2 * (e / 4) + e % 2])
          throw Error("strand retraces itself at crossing " + std::to_string(e / 4 + 1));
        done[2 * (e / 4) + e % 2] = 1;
        entries.push_back(e);
        e = g.nbr[opposite(e)];
      } while (e != e0);
      int fwd = 0, back = 0;
      for (int s : entries)
        if (s % 2 == 0)
          (s % 4 == 0 ? fwd : back)++;
      if (fwd && back)
        throw Error("inconsistent orientation on the strand through crossing " +
                    std::to_string(c + 1));
      bool reverse = back > 0;
      if (!fwd && !back) {
        // over-strand only: follow increasing labels
        int s = entries[0], x = s / 4;
        int lb = k.x[x][1], ld = k.x[x][3];
        int in = ld == lb + 1 ? 1 : lb == ld + 1 ? 3 : (lb > ld ? 1 : 3);
        reverse = s % 4 != in;
      }
      for (int s : entries) {
        int en = reverse ? opposite(s) : s;
        if (en % 2 == 1)
          g.sign[en / 4] = en % 4 == 3 ? 1 : -1;
      }
    }
  for (int s = 0; s < 4 * n; ++s)
    if (g.is_in(s) == g.is_in(g.nbr[s]))
      throw Error("edge " + std::to_string(b.label[s]) + " does not run from an exit to an entry");
  check_planar(g);
  for (int s = 0; s < 4 * n; ++s)
    if (!g.is_in(s))
      b.edge[b.label[s]] = {s, g.nbr[s]};
  return b;
}

KnotDiagram from_graph(const Graph &g) {
  int n = g.n();
  // out-slots of each strand in order
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(4 * n, 0);
  for (int s = 0; s < 4 * n; ++s) {
    if (g.is_in(s) || seen[s])
      continue;
    std::vector<int> cyc;
    int o = s;
    do {
      seen[o] = 1;
      cyc.push_back(o);
      o = opposite(g.nbr[o]);
    } while (o != s);
    comps.push_back(std::move(cyc));
  }
  if (comps.size() > 6)
    throw Error("too many components to canonicalize");
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<std::array<int, 4>, int>> best;
  bool have = false;
  std::vector<int> lab(4 * n);
  std::vector<size_t> start(comps.size());
  do {
    std::function<void(size_t)> choose = [&](size_t i) {
      if (i < order.size()) {
        for (size_t r = 0; r < comps[order[i]].size(); ++r) {
          start[i] = r;
          choose(i + 1);
        }
        return;
      }
      int next = 1;
      for (size_t j = 0; j < order.size(); ++j) {
        auto &cyc = comps[order[j]];
        for (size_t t = 0; t < cyc.size(); ++t) {
          int o = cyc[(start[j] + t) % cyc.size()];
          lab[o] = lab[g.nbr[o]] = next++;
        }
      }
      std::vector<std::pair<std::array<int, 4>, int>> cur;
      for (int c = 0; c < n; ++c)
        cur.push_back({{lab[4 * c], lab[4 * c + 1], lab[4 * c + 2], lab[4 * c + 3]}, g.sign[c]});
      std::sort(cur.begin(), cur.end());
      if (!have || cur < best) {
        best = std::move(cur);
        have = true;
      }
    };
    choose(0);
  } while (std::next_permutation(order.begin(), order.end()));
  KnotDiagram k;
  for (auto &[x, s] : best) {
    k.x.push_back(x);
    k.sign.push_back(s);
  }
  for (int i = 0; i < g.loops; ++i)
    k.loops.push_back(2 * n + 1 + i);
  return k;
}

// Removes crossings, joining the strands that passed straight through.
void compact(Graph &g, const std::set<int> &removed) {
  std::vector<int> idx(g.n(), -1);
  int m = 0;
  for (int c = 0; c < g.n(); ++c)
    if (!removed.count(c))
      idx[c] = m++;
  Graph h;
  h.loops = g.loops;
  h.nbr.assign(4 * m, -1);
  h.sign.assign(m, 0);
  for (int c = 0; c < g.n(); ++c) {
    if (idx[c] < 0)
      continue;
    h.sign[idx[c]] = g.sign[c];
    for (int i = 0; i < 4; ++i) {
      int t = g.nbr[4 * c + i];
      if (t < 0 || idx[t / 4] < 0)
        throw Error("internal: dangling edge after a move");
      h.nbr[4 * idx[c] + i] = 4 * idx[t / 4] + t % 4;
    }
  }
  g = std::move(h);
}

void splice_out(Graph &g, const std::set<int> &removed) {
  auto gone = [&](int s) { return removed.count(s / 4) > 0; };
  std::vector<char> used(g.nbr.size(), 0);
  std::vector<std::pair<int, int>> joins;
  for (int u = 0; u < int(g.nbr.size()); ++u) {
    if (gone(u) || g.is_in(u) || !gone(g.nbr[u]))
      continue;
    int v = g.nbr[u];
    while (gone(v)) {
      used[v] = used[opposite(v)] = 1;
      v = g.nbr[opposite(v)];
    }
    joins.emplace_back(u, v);
  }
  // closed strands running entirely through removed crossings
  for (int c : removed)
    for (int s : {4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3}) {
      if (used[s] || !g.is_in(s))
        continue;
      int v = s;
      do {
        used[v] = used[opposite(v)] = 1;
        v = g.nbr[opposite(v)];
      } while (v != s && gone(v));
      if (v != s)
        throw Error("internal: open strand inside a removed region");
      ++g.loops;
    }
  for (auto [u, v] : joins)
    g.link(u, v);
  compact(g, removed);
}

struct Pt {
  double x, y;
};

struct PStrand {
  std::vector<Pt> pts;
  int rank;
  int feed, into;                   // existing out-slot feeding it, in-slot it feeds
  int replaces_in = -1, replaces_out = -1; // slots of crossings to be removed
};

double cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }
Pt sub(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }

// Adds the crossings of a picture of polylines in general position.
void insert(Graph &g, const std::vector<PStrand> &ps) {
  struct Ev {
    double t;
    int in, out;
  };
  std::vector<std::vector<Ev>> ev(ps.size());
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      for (size_t a = 0; a + 1 < ps[i].pts.size(); ++a)
        for (size_t b = 0; b + 1 < ps[j].pts.size(); ++b) {
          Pt p = ps[i].pts[a], r = sub(ps[i].pts[a + 1], p);
          Pt q = ps[j].pts[b], s = sub(ps[j].pts[b + 1], q);
          double den = cross(r, s);
          if (std::fabs(den) < 1e-12)
            continue;
          double t = cross(sub(q, p), s) / den, u = cross(sub(q, p), r) / den;
          if (t <= 0 || t >= 1 || u <= 0 || u >= 1)
            continue;
          bool i_over = ps[i].rank > ps[j].rank;
          Pt du = i_over ? s : r, dover = i_over ? r : s;
          // slot 0 looks back along the under-strand; the incoming over ray
          // is slot 1 when it lies within half a turn counterclockwise
          double a0 = std::atan2(-du.y, -du.x), ao = std::atan2(-dover.y, -dover.x);
          double rel = std::fmod(ao - a0 + 4 * M_PI, 2 * M_PI);
          int oin = rel < M_PI ? 1 : 3;
          int c = g.add(oin == 3 ? 1 : -1);
          Ev under{0, 4 * c, 4 * c + 2}, over{0, 4 * c + oin, 4 * c + (oin + 2) % 4};
          Ev ei = i_over ? over : under, ej = i_over ? under : over;
          ei.t = double(a) + t;
          ej.t = double(b) + u;
          ev[i].push_back(ei);
          ev[j].push_back(ej);
        }
  std::map<int, int> replace;
  for (size_t i = 0; i < ps.size(); ++i) {
    auto &e = ev[i];
    std::sort(e.begin(), e.end(), [](const Ev &a, const Ev &b) { return a.t < b.t; });
    if (e.empty())
      continue;
    if (ps[i].replaces_in >= 0)
      replace[ps[i].replaces_in] = e.front().in;
    if (ps[i].replaces_out >= 0)
      replace[ps[i].replaces_out] = e.back().out;
  }
  auto res = [&](int s) {
    auto it = replace.find(s);
    return it == replace.end() ? s : it->second;
  };
  for (size_t i = 0; i < ps.size(); ++i) {
    int prev = res(ps[i].feed);
    for (auto &x : ev[i]) {
      g.link(prev, x.in);
      prev = x.out;
    }
    g.link(prev, res(ps[i].into));
  }
}

std::vector<std::string> tokens(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w)
    out.push_back(w);
  return out;
}

int to_int(const std::string &s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size())
      return v;
  } catch (const std::exception &) {
  }
  throw Error("expected a number, got '" + s + "'");
}

int side_of(const std::string &s) {
  if (s == "L")
    return 0;
  if (s == "R")
    return 1;
  throw Error("expected L or R, got '" + s + "'");
}

void expect_tokens(const std::vector<std::string> &t, size_t n, const std::string &form) {
  if (t.size() != n)
    throw Error("site must read \"" + form + "\"");
}

std::pair<int, int> edge_slots(const Built &b, int label) {
  auto it = b.edge.find(label);
  if (it == b.edge.end())
    throw Error("pattern mismatch: no edge " + std::to_string(label) + " between crossings");
  return it->second;
}

// Faces of a given length bounded by exactly the given labels.
const std::vector<int> *face_with(const Built &b, const std::vector<std::vector<int>> &fs,
                                  std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  for (auto &f : fs) {
    if (f.size() != labels.size())
      continue;
    std::vector<int> l;
    for (int h : f)
      l.push_back(b.label[h]);
    std::sort(l.begin(), l.end());
    if (l == labels)
      return &f;
  }
  return nullptr;
}

bool bigon_ok(const Graph &g, const std::vector<int> &f) {
  if (f.size() != 2 || f[0] / 4 == g.nbr[f[0]] / 4)
    return false;
  int p0 = f[0] % 2 + g.nbr[f[0]] % 2, p1 = f[1] % 2 + g.nbr[f[1]] % 2;
  return (p0 == 2 && p1 == 0) || (p0 == 0 && p1 == 2);
}

bool triangle_ok(const Graph &g, const std::vector<int> &f) {
  if (f.size() != 3)
    return false;
  std::set<int> xs;
  std::vector<int> types;
  for (int h : f) {
    xs.insert(h / 4);
    types.push_back(h % 2 + g.nbr[h] % 2);
  }
  std::sort(types.begin(), types.end());
  return xs.size() == 3 && types == std::vector<int>{0, 1, 2};
}

std::string join(std::vector<int> v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

KnotDiagram r1_plus(const Built &b, const std::vector<std::string> &t) {
  expect_tokens(t, 3, "e L|R +|-");
  int label = to_int(t[0]), side = side_of(t[1]);
  if (t[2] != "+" && t[2] != "-")
    throw Error("expected + or -, got '" + t[2] + "'");
  int sg = t[2] == "+" ? 1 : -1;
  // entry, first exit, second entry, final exit
  static const int table[2][2][4] = {{{1, 3, 0, 2}, {0, 2, 3, 1}},  // L: -, +
                                     {{0, 2, 1, 3}, {3, 1, 0, 2}}}; // R: -, +
  const int *r = table[side][sg > 0];
  Graph g = b.g;
  bool loop = std::count(b.loop_labels.begin(), b.loop_labels.end(), label) > 0;
  std::pair<int, int> e{-1, -1};
  if (!loop)
    e = edge_slots(b, label);
  int z = g.add(sg);
  g.link(4 * z + r[1], 4 * z + r[2]);
  if (loop) {
    --g.loops;
    g.link(4 * z + r[3], 4 * z + r[0]);
  } else {
    g.link(e.first, 4 * z + r[0]);
    g.link(4 * z + r[3], e.second);
  }
  return from_graph(g);
}

KnotDiagram r1_minus(const Built &b, const std::vector<std::string> &t) {
  expect_tokens(t, 1, "e");
  auto [o, i] = edge_slots(b, to_int(t[0]));
  if (o / 4 != i / 4 || (o - i) % 2 == 0)
    throw Error("pattern mismatch: edge " + t[0] + " does not bound a monogon");
  Graph g = b.g;
  splice_out(g, {o / 4});
  return from_graph(g);
}

KnotDiagram r2_plus(const Built &b, const std::vector<std::string> &t) {
  expect_tokens(t, 4, "a b L|R L|R");
  int la = to_int(t[0]), lb = to_int(t[1]);
  if (la == lb)
    throw Error("pattern mismatch: R2 needs two different edges");
  auto ea = edge_slots(b, la), eb = edge_slots(b, lb);
  int sa = side_of(t[2]), sb = side_of(t[3]);
  auto fs = faces(b.g);
  int ha = sa == 0 ? ea.first : ea.second, hb = sb == 0 ? eb.first : eb.second;
  auto in_face = [&](int h) {
    for (size_t f = 0; f < fs.size(); ++f)
      if (std::count(fs[f].begin(), fs[f].end(), h))
        return int(f);
    return -1;
  };
  if (in_face(ha) != in_face(hb))
    throw Error("pattern mismatch: edges " + t[0] + " and " + t[1] + " do not share that face");
  // the face lies below a (left to right when the face is on its right)
  // and above b (left to right when the face is on its left)
  std::vector<Pt> a = {{-3, 1}, {-1, 1}, {-1, -2}, {1, -2}, {1, 1}, {3, 1}};
  std::vector<Pt> bl = {{-3, -1}, {3, -1}};
  if (sa == 0)
    std::reverse(a.begin(), a.end());
  if (sb == 1)
    std::reverse(bl.begin(), bl.end());
  Graph g = b.g;
  insert(g, {PStrand{a, 1, ea.first, ea.second}, PStrand{bl, 0, eb.first, eb.second}});
  return from_graph(g);
}

KnotDiagram r2_minus(const Built &b, const std::vector<std::string> &t) {
  expect_tokens(t, 2, "e1 e2");
  auto fs = faces(b.g);
  auto *f = face_with(b, fs, {to_int(t[0]), to_int(t[1])});
  if (!f || !bigon_ok(b.g, *f))
    throw Error("pattern mismatch: edges " + t[0] + " " + t[1] +
                " do not bound a bigon with one strand over at both crossings");
  Graph g = b.g;
  splice_out(g, {(*f)[0] / 4, (*f)[1] / 4});
  return from_graph(g);
}

KnotDiagram r3(const Built &b, const std::vector<std::string> &t) {
  expect_tokens(t, 3, "e1 e2 e3");
  auto fs = faces(b.g);
  auto *fp = face_with(b, fs, {to_int(t[0]), to_int(t[1]), to_int(t[2])});
  if (!fp || !triangle_ok(b.g, *fp))
    throw Error("pattern mismatch: edges " + t[0] + " " + t[1] + " " + t[2] +
                " do not bound a triangle with top, middle and bottom strands");
  const Graph &g0 = b.g;
  const auto &f = *fp;
  // the six outside slots, counterclockwise around the triangle
  std::vector<int> hex;
  for (int h : f) {
    int s = g0.nbr[h], c = s / 4, j = s % 4;
    hex.push_back(4 * c + (j + 1) % 4);
    hex.push_back(4 * c + (j + 2) % 4);
  }
  auto pos = [&](int s) { return int(std::find(hex.begin(), hex.end(), s) - hex.begin()); };
  struct Str {
    int in, out, rank, first_partner;
  };
  std::vector<Str> strands(3);
  std::vector<int> strand_at(6);
  for (int p = 0; p < 3; ++p) {
    int q = hex[p], q2 = opposite(g0.nbr[opposite(q)]);
    if (pos(q2) != p + 3)
      throw Error("internal: triangle strands are not opposite");
    strand_at[p] = strand_at[p + 3] = p;
    int in = g0.is_in(q) ? q : q2, out = in == q ? q2 : q;
    strands[p] = {in, out, q % 2 + q2 % 2, -1};
  }
  for (int p = 0; p < 3; ++p) {
    int in = strands[p].in, c = in / 4;
    int other = hex[pos(in) % 2 == 0 ? pos(in) + 1 : pos(in) - 1];
    if (other / 4 != c)
      throw Error("internal: outside slots out of order");
    strands[p].first_partner = strand_at[pos(other)];
  }
  auto picture = [&](double delta) {
    std::vector<PStrand> ps;
    for (int p = 0; p < 3; ++p) {
      auto at = [](int k) {
        return Pt{10 * std::cos(k * M_PI / 3), 10 * std::sin(k * M_PI / 3)};
      };
      Pt a = at(p), z = at(p + 3), d = sub(z, a);
      double len = std::hypot(d.x, d.y);
      Pt off{-d.y / len * delta, d.x / len * delta};
      a = {a.x + off.x, a.y + off.y};
      z = {z.x + off.x, z.y + off.y};
      std::vector<Pt> pts = {a, z};
      if (pos(strands[p].in) != p)
        std::reverse(pts.begin(), pts.end());
      ps.push_back({pts, strands[p].rank, g0.nbr[strands[p].in], g0.nbr[strands[p].out],
                    strands[p].in, strands[p].out});
    }
    return ps;
  };
  auto first_partner = [&](const std::vector<PStrand> &ps) {
    // along strand 0, which chord is met first
    Pt p = ps[0].pts[0], r = sub(ps[0].pts[1], p);
    double best = 2;
    int who = -1;
    for (int j = 1; j < 3; ++j) {
      Pt q = ps[j].pts[0], s = sub(ps[j].pts[1], q);
      double tt = cross(sub(q, p), s) / cross(r, s);
      if (tt < best) {
        best = tt;
        who = j;
      }
    }
    return who;
  };
  auto plus = picture(1), minus = picture(-1);
  int orig = strands[0].first_partner;
  bool plus_is_orig = first_partner(plus) == orig, minus_is_orig = first_partner(minus) == orig;
  if (plus_is_orig == minus_is_orig)
    throw Error("internal: triangle orientation not recognised");
  Graph g = g0;
  insert(g, plus_is_orig ? minus : plus);
  compact(g, {f[0] / 4, f[1] / 4, f[2] / 4});
  return from_graph(g);
}

} // namespace

KnotDiagram parse_pd(const std::string &text) {
  KnotDiagram k;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<int, int> first_line;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    for (char &c : line)
      if (c == '[' || c == ']' || c == ',' || c == '(' || c == ')')
        c = ' ';
    std::istringstream ls(line);
    std::string w;
    while (ls >> w) {
      size_t want = w == "X" ? 4 : w == "O" ? 1 : 0;
      if (!want)
        throw ParseError(lineno, "expected 'X a b c d' or 'O a', got '" + w + "'");
      std::vector<int> v;
      long x;
      while (v.size() < want && ls >> x)
        v.push_back(int(x));
      if (v.size() != want)
        throw ParseError(lineno, "expected 'X a b c d' or 'O a'");
      ls.clear();
      for (int l : v)
        first_line.emplace(l, lineno);
      if (want == 4)
        k.x.push_back({v[0], v[1], v[2], v[3]});
      else
        k.loops.push_back(v[0]);
    }
  }
  std::map<int, int> count;
  for (auto &c : k.x)
    for (int l : c)
      ++count[l];
  for (auto [l, n] : count)
    if (n != 2)
      throw ParseError(first_line[l],
                       "label " + std::to_string(l) + " occurs " + std::to_string(n) + " times");
  if (k.x.empty() && k.loops.empty())
    throw ParseError(lineno, "empty diagram");
  try {
    validate(k);
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    throw ParseError(0, e.what());
  }
  return k;
}

std::string print_pd(const KnotDiagram &k) {
  std::string s;
  for (auto &c : k.x)
    s += "X " + join({c[0], c[1], c[2], c[3]}) + "\n";
  for (int l : k.loops)
    s += "O " + std::to_string(l) + "\n";
  return s;
}

void validate(KnotDiagram &k) {
  Built b = build(k);
  k.sign = b.g.sign;
}

int components(const KnotDiagram &k) {
  Built b = build(k);
  std::set<int> seen;
  int comps = 0;
  for (auto &[l, e] : b.edge) {
    if (seen.count(l))
      continue;
    ++comps;
    int o = e.first;
    do {
      seen.insert(b.label[o]);
      o = opposite(b.g.nbr[o]);
    } while (o != e.first);
  }
  return comps + int(k.loops.size());
}

int writhe(const KnotDiagram &k) {
  Built b = build(k);
  return std::accumulate(b.g.sign.begin(), b.g.sign.end(), 0);
}

Wirtinger wirtinger(const KnotDiagram &k) {
  Built b = build(k);
  int top = 0;
  for (auto &c : k.x)
    for (int l : c)
      top = std::max(top, l);
  for (int l : k.loops)
    top = std::max(top, l);
  std::vector<int> p(top + 1);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (auto &c : k.x)
    p[find(c[1])] = find(c[3]);
  Wirtinger w;
  w.arc_of.assign(top + 1, -1);
  std::map<int, int> arc;
  for (int l = 1; l <= top; ++l) {
    bool used = false;
    for (auto &c : k.x)
      used = used || std::count(c.begin(), c.end(), l);
    used = used || std::count(k.loops.begin(), k.loops.end(), l);
    if (!used)
      continue;
    auto [it, fresh] = arc.emplace(find(l), w.arcs);
    if (fresh)
      ++w.arcs;
    w.arc_of[l] = it->second;
  }
  for (size_t c = 0; c < k.x.size(); ++c)
    w.relations.push_back({w.arc_of[k.x[c][2]], w.arc_of[k.x[c][0]], w.arc_of[k.x[c][1]],
                           b.g.sign[c]});
  return w;
}

std::string print_wirtinger(const Wirtinger &w) {
  std::string s = "arcs: " + std::to_string(w.arcs) + "\n";
  s += "relations: " + std::to_string(w.relations.size()) + "\n";
  for (auto &r : w.relations)
    s += "x" + std::to_string(r.out + 1) + " = x" + std::to_string(r.in + 1) +
         (r.sign > 0 ? " |> x" : " |>^-1 x") + std::to_string(r.over + 1) + "\n";
  return s;
}

namespace {

void require_quandle(const Quandle &q) {
  auto v = check_axioms(q);
  if (!v.empty())
    throw Error("not a quandle: " + v[0]);
}

} // namespace

long count_colorings(const KnotDiagram &k, const Quandle &q) {
  require_quandle(q);
  Wirtinger w = wirtinger(k);
  std::vector<int> col(w.arcs, -1), trail;
  auto propagate = [&]() {
    for (bool changed = true; changed;) {
      changed = false;
      for (auto &r : w.relations) {
        int x = col[r.in], y = col[r.over], z = col[r.out];
        if (y < 0)
          continue;
        if (x >= 0) {
          int v = r.sign > 0 ? q.tri(x, y) : q.tri_inv(x, y);
          if (z < 0) {
            col[r.out] = v;
            trail.push_back(r.out);
            changed = true;
          } else if (z != v) {
            return false;
          }
        } else if (z >= 0) {
          col[r.in] = r.sign > 0 ? q.tri_inv(z, y) : q.tri(z, y);
          trail.push_back(r.in);
          changed = true;
        }
      }
    }
    return true;
  };
  long total = 0;
  std::function<void()> search = [&] {
    auto it = std::find(col.begin(), col.end(), -1);
    if (it == col.end()) {
      ++total;
      return;
    }
    int a = int(it - col.begin());
    for (int v = 0; v < q.n; ++v) {
      size_t mark = trail.size();
      col[a] = v;
      trail.push_back(a);
      if (propagate())
        search();
      while (trail.size() > mark) {
        col[trail.back()] = -1;
        trail.pop_back();
      }
    }
  };
  search();
  return total;
}

long count_colorings_brute(const KnotDiagram &k, const Quandle &q) {
  require_quandle(q);
  Wirtinger w = wirtinger(k);
  double space = std::pow(double(q.n), w.arcs);
  if (space > 1e8)
    throw Error("brute force space too large");
  std::vector<int> col(w.arcs, 0);
  long total = 0;
  while (true) {
    bool ok = true;
    for (auto &r : w.relations) {
      int v = r.sign > 0 ? q.tri(col[r.in], col[r.over]) : q.tri_inv(col[r.in], col[r.over]);
      ok = ok && v == col[r.out];
    }
    total += ok;
    int i = 0;
    while (i < w.arcs && ++col[i] == q.n)
      col[i++] = 0;
    if (i == w.arcs)
      break;
  }
  return total;
}

KnotDiagram canonical(const KnotDiagram &k) { return from_graph(build(k).g); }

std::string move_name(MoveKind m) {
  switch (m) {
  case MoveKind::R1Plus:
    return "R1+";
  case MoveKind::R1Minus:
    return "R1-";
  case MoveKind::R2Plus:
    return "R2+";
  case MoveKind::R2Minus:
    return "R2-";
  case MoveKind::R3:
    return "R3";
  }
  return "?";
}

MoveKind parse_move_kind(const std::string &s) {
  for (auto m : {MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2Plus, MoveKind::R2Minus,
                 MoveKind::R3})
    if (move_name(m) == s)
      return m;
  throw Error("unknown move kind '" + s + "' (R1+, R1-, R2+, R2-, R3)");
}

std::vector<MoveInstance> list_moves(const KnotDiagram &k, MoveKind kind) {
  Built b = build(k);
  const Graph &g = b.g;
  std::vector<MoveInstance> out;
  auto fs = faces(g);
  std::vector<int> face_of(g.nbr.size());
  for (size_t f = 0; f < fs.size(); ++f)
    for (int h : fs[f])
      face_of[h] = int(f);
  std::set<std::string> sites;
  auto add = [&](std::string s) {
    if (sites.insert(s).second)
      out.push_back({kind, s});
  };
  switch (kind) {
  case MoveKind::R1Plus: {
    std::vector<int> labels;
    for (auto &[l, e] : b.edge)
      labels.push_back(l);
    labels.insert(labels.end(), b.loop_labels.begin(), b.loop_labels.end());
    for (int l : labels)
      for (const char *side : {"L", "R"})
        for (const char *sg : {"+", "-"})
          add(std::to_string(l) + " " + side + " " + sg);
    break;
  }
  case MoveKind::R1Minus:
    for (auto &[l, e] : b.edge)
      if (e.first / 4 == e.second / 4 && (e.first - e.second) % 2 != 0)
        add(std::to_string(l));
    break;
  case MoveKind::R2Plus:
    for (auto &[la, ea] : b.edge)
      for (auto &[lb, eb] : b.edge) {
        if (la == lb)
          continue;
        for (int sa = 0; sa < 2; ++sa)
          for (int sb = 0; sb < 2; ++sb)
            if (face_of[sa ? ea.second : ea.first] == face_of[sb ? eb.second : eb.first])
              add(std::to_string(la) + " " + std::to_string(lb) + (sa ? " R" : " L") +
                  (sb ? " R" : " L"));
      }
    break;
  case MoveKind::R2Minus:
  case MoveKind::R3:
    for (auto &f : fs) {
      if (kind == MoveKind::R2Minus ? !bigon_ok(g, f) : !triangle_ok(g, f))
        continue;
      std::vector<int> l;
      for (int h : f)
        l.push_back(b.label[h]);
      std::sort(l.begin(), l.end());
      add(join(l));
    }
    break;
  }
  return out;
}

std::vector<MoveInstance> list_moves(const KnotDiagram &k) {
  std::vector<MoveInstance> out;
  for (auto m : {MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2Plus, MoveKind::R2Minus,
                 MoveKind::R3}) {
    auto v = list_moves(k, m);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

KnotDiagram apply_move(const KnotDiagram &k, const MoveInstance &m) {
  Built b = build(k);
  auto t = tokens(m.site);
  switch (m.kind) {
  case MoveKind::R1Plus:
    return r1_plus(b, t);
  case MoveKind::R1Minus:
    return r1_minus(b, t);
  case MoveKind::R2Plus:
    return r2_plus(b, t);
  case MoveKind::R2Minus:
    return r2_minus(b, t);
  case MoveKind::R3:
    return r3(b, t);
  }
  throw Error("unknown move");
}

} // namespace omegaq
