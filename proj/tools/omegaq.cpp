#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "omegaq/globularize.hpp"
#include "omegaq/knot.hpp"
#include "omegaq/samples.hpp"
#include "omegaq/weaken.hpp"

using namespace omegaq;
using json = nlohmann::ordered_json;

namespace {

// Check verdicts end in exit 1; unreadable or ill-formed input in exit 2.
struct CheckFailed {};

std::string slurp(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw Error("cannot read " + path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

// key: value lines; arrays print their length then one indented item per
// line, nested objects flatten to dotted keys.
void render_text(const json &j, const std::string &prefix, std::ostream &out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = prefix + it.key();
    const json &v = it.value();
    if (v.is_object()) {
      render_text(v, key + ".", out);
    } else if (v.is_array()) {
      out << key << ": " << v.size() << "\n";
      for (auto &x : v)
        out << "  " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
    } else {
      out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

GlobSet load_globset(const std::string &arg, int dim) {
  if (arg == "@theta")
    return theta_set();
  if (arg == "@point")
    return terminal_globset(dim);
  GlobSet g = parse_globset(slurp(arg), dim);
  auto v = g.validate();
  if (!v.empty())
    throw Error(arg + ": " + v[0].what);
  return g;
}

Collection load_collection(const std::string &arg, int size, int dim) {
  if (arg == "@I")
    return unit_I(dim);
  if (arg == "@one")
    return terminal_coll(size, dim);
  if (arg == "@id")
    return id_coll(dim);
  if (arg == "@empty")
    return initial_coll(dim);
  if (arg.rfind("@random:", 0) == 0)
    return samples::random_collection(unsigned(std::stoul(arg.substr(8))), dim, size);
  Collection c = parse_collection(slurp(arg), dim);
  auto v = c.validate();
  if (!v.empty())
    throw Error(arg + ": " + v[0].what);
  return c;
}

ProPresentation load_pres(const std::string &arg) {
  if (arg == "@quandle")
    return quandle_pro();
  if (arg == "@group")
    return group_pro();
  return parse_presentation(slurp(arg));
}

Quandle load_quandle(const std::string &arg) {
  if (arg.size() > 2 && arg[0] == '@' && (arg[1] == 'R' || arg[1] == 'T')) {
    int n = std::stoi(arg.substr(2));
    if (n < 1 || n > 64)
      throw Error("order out of range in " + arg);
    return arg[1] == 'R' ? dihedral_quandle(n) : trivial_quandle(n);
  }
  return parse_quandle(slurp(arg));
}

json quandle_json(const Quandle &q) {
  json rows = json::array();
  for (int a = 0; a < q.n; ++a) {
    std::string r;
    for (int b = 0; b < q.n; ++b)
      r += (b ? " " : "") + std::to_string(q.tri(a, b));
    rows.push_back(r);
  }
  return rows;
}

json violations_json(const std::vector<std::string> &v, size_t cap = 20) {
  json a = json::array();
  for (size_t i = 0; i < v.size() && i < cap; ++i)
    a.push_back(v[i]);
  return a;
}

std::string pd_line(const std::array<int, 4> &c) {
  return "X " + std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) +
         " " + std::to_string(c[3]);
}

json knot_json(const KnotDiagram &k) {
  json j;
  j["crossings"] = k.x.size();
  j["writhe"] = writhe(k);
  json pd = json::array();
  for (auto &c : k.x)
    pd.push_back(pd_line(c));
  for (int l : k.loops)
    pd.push_back("O " + std::to_string(l));
  j["pd"] = pd;
  return j;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"omegaq: pasting schemes, collections, globular PROs, quandles and knots"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  json out;
  std::function<void()> action;
  int dim_default = default_dim_bound();

  // schemes
  auto *schemes = app.add_subcommand("schemes", "enumerate pasting schemes");
  int s_dim = 1, s_size = 3;
  schemes->add_option("--dim", s_dim, "dimension")->required()->check(CLI::Range(0, 8));
  schemes->add_option("--max-size", s_size, "size bound")->required()->check(CLI::Range(0, 12));
  schemes->callback([&] {
    action = [&] {
      auto v = enumerate_schemes(s_dim, s_size);
      out["dim"] = s_dim;
      out["max_size"] = s_size;
      json a = json::array();
      for (auto &s : v)
        a.push_back(print_scheme(s));
      out["schemes"] = a;
    };
  });

  // monad-check
  auto *monad = app.add_subcommand("monad-check", "unit and associativity laws of T");
  std::string m_glob;
  int m_dim = dim_default, m_size = 4;
  monad->add_option("--glob", m_glob, "globset file, @theta or @point")->required();
  monad->add_option("--dim", m_dim, "dimension bound")->check(CLI::Range(0, 8));
  monad->add_option("--max-size", m_size, "size bound")->check(CLI::Range(0, 8));
  monad->callback([&] {
    action = [&] {
      GlobSet g = load_globset(m_glob, std::max(m_dim, dim_default));
      auto r = check_monad_laws(g, std::min(m_dim, g.max_dim()), m_size);
      out["unit_checked"] = r.unit_checked;
      out["assoc_checked"] = r.assoc_checked;
      out["violations"] = violations_json(r.violations);
      if (!r.ok())
        throw CheckFailed{};
    };
  });

  // coll-box
  auto *cbox = app.add_subcommand("coll-box", "materialize the composition tensor");
  std::string b_left, b_right;
  int b_size = 3, b_dim = dim_default;
  bool b_print = false;
  cbox->add_option("--left", b_left, "collection file or @I, @one, @id, @empty, @random:SEED")
      ->required();
  cbox->add_option("--right", b_right, "collection file or built-in")->required();
  cbox->add_option("--max-size", b_size, "size bound")->check(CLI::Range(0, 8));
  cbox->add_option("--dim", b_dim, "dimension bound")->check(CLI::Range(0, 8));
  cbox->add_flag("--print", b_print, "print the cells in collection format");
  cbox->callback([&] {
    action = [&] {
      Collection x = load_collection(b_left, b_size, b_dim);
      Collection y = load_collection(b_right, b_size, b_dim);
      if (x.max_dim() != y.max_dim())
        throw Error("factors have different dimension bounds");
      Box b = box(x, y, b_size);
      json counts = json::array();
      for (int k = 0; k <= b.coll.max_dim(); ++k)
        counts.push_back(b.coll.count(k));
      out["cells_by_dim"] = counts;
      out["validation"] = b.coll.validate().empty() ? "ok" : "failed";
      if (b_print) {
        json lines = json::array();
        std::istringstream in(print_collection(b.coll));
        for (std::string l; std::getline(in, l);)
          lines.push_back(l);
        out["cells"] = lines;
      }
      if (!b.coll.validate().empty())
        throw CheckFailed{};
    };
  });

  // duoidal-check
  auto *duo = app.add_subcommand("duoidal-check", "interchange and coherence suite");
  int d_size = 3, d_samples = 20;
  unsigned d_seed = 2024;
  duo->add_option("--max-size", d_size, "size bound")->check(CLI::Range(1, 5));
  duo->add_option("--samples", d_samples, "sampled arrow quadruples")->check(CLI::Range(0, 1000));
  duo->add_option("--seed", d_seed, "sampling seed");
  duo->callback([&] {
    action = [&] {
      std::vector<std::string> bad;
      Collection i = unit_I(2), one = terminal_coll(d_size, 2);
      Collection r = samples::random_collection(1, 2, d_size);
      std::vector<const Collection *> objs = {&i, &one, &r};
      long coherence = 0;
      for (auto *x : objs) {
        for (auto &v : check_unitors(*x, d_size))
          bad.push_back(v);
        ++coherence;
        for (auto *y : objs) {
          for (auto &v : check_triangle(*x, *y, d_size))
            bad.push_back(v);
          ++coherence;
        }
      }
      for (auto &v : check_pentagon(one, r, i, one, d_size))
        bad.push_back(v);
      ++coherence;
      samples::ArrowPool pool(d_size);
      std::mt19937 rng(d_seed);
      for (int t = 0; t < d_samples; ++t) {
        auto pick = [&]() -> const CollArrow & {
          return pool.arrows[rng() % pool.arrows.size()];
        };
        auto &fa = pick();
        auto &fb = pick();
        auto &fc = pick();
        auto &fd = pick();
        for (auto &v : check_interchange_naturality(fa, fb, fc, fd, d_size))
          bad.push_back(v);
      }
      out["coherence_checks"] = coherence;
      out["naturality_samples"] = d_samples;
      out["violations"] = violations_json(bad);
      if (!bad.empty())
        throw CheckFailed{};
    };
  });

  // pro-check
  auto *pro = app.add_subcommand("pro-check", "typing, law and model checks");
  std::string p_pres, p_model;
  std::vector<std::string> p_equal;
  pro->add_option("--pres", p_pres, "presentation file, @quandle or @group")->required();
  pro->add_option("--model", p_model, "finite model file");
  pro->add_option("--equal", p_equal, "decide equality of two terms")->expected(2);
  pro->callback([&] {
    action = [&] {
      ProPresentation p = load_pres(p_pres);
      bool failed = false;
      auto typing = validate(p);
      out["presentation"] = p.name;
      out["generators"] = p.gens.size();
      out["relations"] = p.rels.size();
      out["typing"] = violations_json(typing);
      failed = failed || !typing.empty();
      if (typing.empty() && p.theory != Theory::None) {
        json laws = json::array();
        for (auto &r : p.rels) {
          Verdict v = terms_equal(p, r.lhs, r.rhs);
          laws.push_back(r.name + ": " + verdict_name(v.kind));
          failed = failed || v.kind != Verdict::Kind::Equal;
        }
        out["laws"] = laws;
      }
      if (!p_model.empty()) {
        FiniteModel m = parse_model(p, slurp(p_model));
        auto v = check_model(p, m);
        out["model"] = m.name;
        out["model_violations"] = violations_json(v);
        failed = failed || !v.empty();
      }
      if (p_equal.size() == 2) {
        Verdict v = terms_equal(p, parse_term(p_equal[0]), parse_term(p_equal[1]));
        out["verdict"] = verdict_name(v.kind);
        out["method"] = v.method;
        if (v.model)
          out["witness_model"] = v.model->name;
      }
      if (failed)
        throw CheckFailed{};
    };
  });

  // globularize
  auto *glob = app.add_subcommand("globularize", "dump GlobularizedPro cells");
  std::string g_pres;
  int g_size = 3, g_dim = 2;
  bool g_laws = false;
  glob->add_option("--pres", g_pres, "presentation file, @quandle or @group")->required();
  glob->add_option("--max-size", g_size, "scheme size bound")->check(CLI::Range(0, 6));
  glob->add_option("--dim", g_dim, "dimension bound")->check(CLI::Range(0, 3));
  glob->add_flag("--laws", g_laws, "check the globular PRO laws");
  glob->callback([&] {
    action = [&] {
      GlobularizedPro g = globularize(load_pres(g_pres), g_size, g_dim);
      auto seeds = default_seeds(g);
      json shapes = json::array();
      for (int k = 0; k <= g.shapes.max_dim(); ++k)
        shapes.push_back(g.shapes.count(k));
      out["shapes_by_dim"] = shapes;
      json cls = json::array();
      for (size_t i = 0; i < g.classes.size(); ++i) {
        auto &c = g.classes[i];
        cls.push_back(std::to_string(i) + " " + std::to_string(c.type.arity) + "->" +
                      std::to_string(c.type.coarity) + " " + print_term(c.rep));
      }
      out["classes"] = cls;
      if (g_laws) {
        auto v = check_globular_pro_laws(g, g_size);
        out["law_violations"] = violations_json(v);
        if (!v.empty())
          throw CheckFailed{};
      }
    };
  });

  // weaken
  auto *weak = app.add_subcommand("weaken", "generate the truncated free PRO with contraction");
  std::string w_pres, w_seeds;
  int w_dim = std::min(dim_default, 2), w_size = 8, w_width = 4, w_base = 4;
  unsigned w_shuffle = 0;
  bool w_contract = false, w_dump = false;
  std::vector<std::string> w_lift;
  weak->add_option("--pres", w_pres, "presentation file, @quandle or @group")->required();
  weak->add_option("--dim-bound", w_dim, "dimension bound")->check(CLI::Range(0, 2));
  weak->add_option("--size-bound", w_size, "size bound")->check(CLI::Range(1, 12));
  weak->add_option("--width-bound", w_width, "largest wire count of a 0-cell");
  weak->add_option("--base-size", w_base, "scheme bound of the globularized base")
      ->check(CLI::Range(1, 5));
  weak->add_option("--seeds", w_seeds, "comma-separated generators (default: all)");
  weak->add_option("--shuffle", w_shuffle, "frontier shuffle seed");
  weak->add_option("--find-lift", w_lift, "two terms with equal image")->expected(2);
  weak->add_flag("--check-contraction", w_contract, "check the projection's contraction");
  weak->add_flag("--dump", w_dump, "list the 0-cells");
  weak->callback([&] {
    action = [&] {
      GlobularizedPro base = globularize(load_pres(w_pres), w_base, std::max(w_dim, 1));
      std::vector<std::string> seeds;
      if (w_seeds.empty()) {
        for (auto &g : base.pro.gens)
          seeds.push_back(g.name);
      } else {
        std::istringstream in(w_seeds);
        for (std::string s; std::getline(in, s, ',');)
          seeds.push_back(s);
      }
      GenerateOptions opt{w_dim, w_size, w_width, w_shuffle};
      TruncatedSP sp = generate_truncated_sp(base, seeds, opt);
      Inventory inv = inventory(sp);
      bool failed = false;
      json sj = json::array();
      for (auto &s : sp.seeds)
        sj.push_back(s);
      out["seeds"] = sj;
      out["zero_bound"] = sp.zero_bound;
      out["zero_cells"] = inv.zero;
      out["zero_by_size"] = inv.zero_by_size;
      out["classes"] = inv.classes;
      json lifts = json::array();
      for (size_t d = 1; d < inv.lifts.size(); ++d)
        lifts.push_back(inv.lifts[d]);
      out["lifts_by_dim"] = lifts;
      out["cut_by_size"] = sp.cut_by_size;
      out["cut_by_width"] = sp.cut_by_width;
      char digest[20];
      std::snprintf(digest, sizeof digest, "%016llx", (unsigned long long)inv.digest);
      out["digest"] = digest;
      if (w_lift.size() == 2) {
        LiftResult r = find_lift(sp, parse_term(w_lift[0]), parse_term(w_lift[1]));
        json l;
        l["found"] = r.cell.has_value();
        l["degenerate"] = r.degenerate;
        if (r.cell) {
          l["size"] = r.size;
          l["cell"] = dump_line(sp, *r.cell);
        } else {
          l["reason"] = r.reason;
          failed = true;
        }
        out["lift"] = l;
      }
      if (w_contract) {
        auto r = check_contraction(sp);
        json c;
        c["checked"] = r.checked;
        c["missing"] = violations_json(r.missing);
        c["violations"] = violations_json(r.violations);
        out["contraction"] = c;
        failed = failed || !r.ok();
      }
      if (w_dump) {
        json cells = json::array();
        for (size_t i = 0; i < sp.zero.size(); ++i)
          cells.push_back(dump_line(sp, FreeCell::of(sp.circuit(int(i)))));
        out["cells"] = cells;
      }
      if (failed)
        throw CheckFailed{};
    };
  });

  // quandle-check, quandle-enum
  auto *qcheck = app.add_subcommand("quandle-check", "check the quandle axioms");
  std::string q_table;
  qcheck->add_option("--table", q_table, "table file, @R<n> or @T<n>")->required();
  qcheck->callback([&] {
    action = [&] {
      Quandle q = load_quandle(q_table);
      auto v = check_axioms(q);
      out["order"] = q.n;
      out["axioms"] = v.empty() ? "ok" : v[0];
      if (!v.empty())
        throw CheckFailed{};
    };
  });
  auto *qenum = app.add_subcommand("quandle-enum", "quandles of one order up to isomorphism");
  int q_order = 3;
  qenum->add_option("--order", q_order, "order")->required()->check(CLI::Range(1, 5));
  qenum->callback([&] {
    action = [&] {
      auto qs = enumerate_quandles(q_order);
      out["order"] = q_order;
      out["classes"] = qs.size();
      json tables = json::array();
      for (auto &q : qs) {
        std::string t;
        for (int x : q.op)
          t += (t.empty() ? "" : " ") + std::to_string(x);
        tables.push_back(t);
      }
      out["tables"] = tables;
    };
  });

  // knot-colorings, knot-move
  auto *kcol = app.add_subcommand("knot-colorings", "count quandle colorings of a diagram");
  std::string k_pd, k_table;
  bool k_brute = false, k_wirt = false;
  kcol->add_option("--pd", k_pd, "PD file")->required();
  kcol->add_option("--table", k_table, "quandle table file, @R<n> or @T<n>")->required();
  kcol->add_flag("--brute", k_brute, "cross-check by exhaustive search");
  kcol->add_flag("--wirtinger", k_wirt, "print the presentation");
  kcol->callback([&] {
    action = [&] {
      KnotDiagram k = parse_pd(slurp(k_pd));
      Quandle q = load_quandle(k_table);
      Wirtinger w = wirtinger(k);
      out["crossings"] = k.x.size();
      out["arcs"] = w.arcs;
      long n = count_colorings(k, q);
      out["colorings"] = n;
      if (k_brute) {
        long b = count_colorings_brute(k, q);
        out["brute_force"] = b;
        if (b != n)
          throw CheckFailed{};
      }
      if (k_wirt) {
        json rel = json::array();
        std::istringstream in(print_wirtinger(w));
        std::string l;
        std::getline(in, l);
        std::getline(in, l);
        while (std::getline(in, l))
          rel.push_back(l);
        out["relations"] = rel;
      }
    };
  });
  auto *kmove = app.add_subcommand("knot-move", "apply or list Reidemeister moves");
  std::string mv_pd, mv_kind, mv_site;
  bool mv_list = false;
  kmove->add_option("--pd", mv_pd, "PD file")->required();
  kmove->add_option("--move", mv_kind, "R1+, R1-, R2+, R2- or R3");
  kmove->add_option("--site", mv_site, "site, as printed by --list");
  kmove->add_flag("--list", mv_list, "list the applicable sites");
  kmove->callback([&] {
    action = [&] {
      KnotDiagram k = parse_pd(slurp(mv_pd));
      if (mv_list) {
        auto ms = mv_kind.empty() ? list_moves(k) : list_moves(k, parse_move_kind(mv_kind));
        json a = json::array();
        for (auto &m : ms)
          a.push_back(move_name(m.kind) + " " + m.site);
        out["moves"] = a;
        return;
      }
      if (mv_kind.empty() || mv_site.empty())
        throw Error("--move and --site are required unless --list is given");
      out = knot_json(apply_move(k, {parse_move_kind(mv_kind), mv_site}));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  try {
    action();
  } catch (const CheckFailed &) {
    code = 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    render_text(out, "", std::cout);
  return code;
}
