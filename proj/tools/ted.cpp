// Command line front end. Results go to stdout, diagnostics to stderr;
// exit code 0 on success, 2 on any input problem.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ted/distance.hpp"
#include "ted/edit_script.hpp"
#include "ted/generators.hpp"
#include "ted/instrumentation.hpp"
#include "ted/treeio.hpp"

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long node_limit() {
  const char* env = std::getenv("TED_MAX_NODES");
  if (!env || !*env) return 100000;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v <= 0) throw InputError("bad TED_MAX_NODES value");
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A tree argument is a literal unless it names a readable file.
std::string tree_text(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe.good()) return slurp(arg);
  return arg;
}

ted::Tree load_tree(const std::string& arg) {
  ted::Tree t = ted::parse_tree_auto(tree_text(arg));
  if (t.node_count() > node_limit())
    throw InputError("tree exceeds TED_MAX_NODES");
  return t;
}

ted::CostModel load_costs(const std::string& path) {
  if (path.empty()) return ted::unit_model();
  return ted::from_table(ted::load_cost_table(slurp(path)));
}

ted::Algo parse_algo(const std::string& name) {
  if (name == "sz") return ted::Algo::shasha_zhang;
  if (name == "klein") return ted::Algo::klein;
  if (name == "dmrw" || name == "auto") return ted::Algo::dmrw;
  throw InputError("unknown algorithm: " + name);
}

struct PairArgs {
  std::string f, g;
  std::string algo = "auto";
  std::string costs;
  std::string format = "plain";
};

void add_pair_options(CLI::App* cmd, PairArgs& a) {
  cmd->add_option("f", a.f, "first tree, literal or file")->required();
  cmd->add_option("g", a.g, "second tree, literal or file")->required();
  cmd->add_option("--algo", a.algo, "sz | klein | dmrw | auto")
      ->check(CLI::IsMember({"sz", "klein", "dmrw", "auto"}));
  cmd->add_option("--costs", a.costs, "cost table JSON file");
  cmd->add_option("--format", a.format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));
}

void print_stats_plain(const ted::DistanceResult& r, int n, int m) {
  std::cout << "n " << n << "\n"
            << "m " << m << "\n"
            << "subproblems " << r.stats.subproblem_count << "\n"
            << "f-subforests " << r.stats.f_subforest_count << "\n"
            << "g-subforests " << r.stats.g_subforest_count << "\n"
            << "peak-memo " << r.stats.peak_memo_entries << "\n";
}

int cmd_dist(const PairArgs& a, bool stats) {
  const ted::Tree f = load_tree(a.f);
  const ted::Tree g = load_tree(a.g);
  const ted::CostModel costs = load_costs(a.costs);
  const ted::Algo algo = parse_algo(a.algo);
  ted::DistanceEngine engine(f, g, costs);
  engine.run(algo);
  const ted::DistanceResult r = engine.result();
  if (a.format == "json") {
    json out{{"algorithm", ted::algo_name(algo)},
             {"cost", r.cost},
             {"n", f.node_count()},
             {"m", g.node_count()},
             {"subproblems", r.stats.subproblem_count}};
    if (stats) {
      out["f_subforests"] = r.stats.f_subforest_count;
      out["g_subforests"] = r.stats.g_subforest_count;
      out["peak_memo"] = r.stats.peak_memo_entries;
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << r.cost << "\n";
  if (stats) print_stats_plain(r, f.node_count(), g.node_count());
  return 0;
}

int cmd_script(const PairArgs& a) {
  const ted::Tree f = load_tree(a.f);
  const ted::Tree g = load_tree(a.g);
  const ted::CostModel costs = load_costs(a.costs);
  const ted::Algo algo = parse_algo(a.algo);
  ted::DistanceEngine engine(f, g, costs);
  engine.run(algo);
  const ted::EditScript script = engine.extract_script();

  if (a.format == "json") {
    json ops = json::array();
    for (const ted::EditOp& op : script.ops) {
      switch (op.kind) {
        case ted::EditOpKind::delete_f:
          ops.push_back({{"op", "del-f"}, {"node", ted::node_path(f, op.f_node)}});
          break;
        case ted::EditOpKind::delete_g:
          ops.push_back({{"op", "del-g"}, {"node", ted::node_path(g, op.g_node)}});
          break;
        case ted::EditOpKind::relabel:
          ops.push_back({{"op", "rel"},
                         {"f_node", ted::node_path(f, op.f_node)},
                         {"g_node", ted::node_path(g, op.g_node)},
                         {"from", op.from_label},
                         {"to", op.to_label}});
          break;
      }
    }
    json out{{"algorithm", ted::algo_name(algo)},
             {"cost", script.total_cost},
             {"ops", ops}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const ted::EditOp& op : script.ops) {
    switch (op.kind) {
      case ted::EditOpKind::delete_f:
        std::cout << "del-f " << ted::node_path(f, op.f_node) << "\n";
        break;
      case ted::EditOpKind::delete_g:
        std::cout << "del-g " << ted::node_path(g, op.g_node) << "\n";
        break;
      case ted::EditOpKind::relabel:
        std::cout << "rel " << ted::node_path(f, op.f_node) << ' '
                  << ted::node_path(g, op.g_node) << ' ' << op.from_label << ' '
                  << op.to_label << "\n";
        break;
    }
  }
  std::cout << "cost " << script.total_cost << "\n";
  return 0;
}

int cmd_gen(const std::string& family, long long size, bool mirror,
            std::uint64_t seed, int max_children, int alphabet) {
  if (size < 0 || size > node_limit()) throw InputError("size out of range");
  const int n = static_cast<int>(size);
  ted::Tree t;
  if (family == "path") {
    t = ted::gen_path(n);
  } else if (family == "comb") {
    t = mirror ? ted::gen_comb_mirror(n) : ted::gen_comb(n);
  } else if (family == "balanced") {
    int k = 0;
    while ((2 << k) - 1 < n) ++k;
    if ((2 << k) - 1 != n)
      throw InputError("balanced size must be one below a power of two");
    t = ted::gen_balanced(k);
  } else if (family == "zigzag") {
    t = ted::gen_zigzag(n);
  } else if (family == "random") {
    t = ted::gen_random(n, seed, max_children, alphabet);
  } else {
    throw InputError("unknown family: " + family);
  }
  if (t.empty()) throw InputError("refusing to print an empty tree");
  std::cout << ted::emit_bracket(t) << "\n";
  return 0;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_count_pair(const PairArgs& a) {
  const ted::Tree f = load_tree(a.f);
  const ted::Tree g = load_tree(a.g);
  const ted::CostModel costs = load_costs(a.costs);
  const ted::Algo algo = parse_algo(a.algo);
  ted::DistanceEngine engine(f, g, costs);
  engine.run(algo);
  const ted::DistanceResult r = engine.result();
  if (a.format == "json") {
    json out{{"algorithm", ted::algo_name(algo)},
             {"cost", r.cost},
             {"n", f.node_count()},
             {"m", g.node_count()},
             {"subproblems", r.stats.subproblem_count},
             {"f_subforests", r.stats.f_subforest_count},
             {"g_subforests", r.stats.g_subforest_count},
             {"peak_memo", r.stats.peak_memo_entries}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << r.cost << "\n";
  print_stats_plain(r, f.node_count(), g.node_count());
  return 0;
}

int cmd_count_growth(const std::string& families, const std::string& sizes,
                     const std::string& algos) {
  std::vector<int> size_list;
  for (const std::string& s : split_list(sizes)) {
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (*end != '\0' || v <= 0 || v > node_limit())
      throw InputError("bad size: " + s);
    size_list.push_back(static_cast<int>(v));
  }
  std::vector<ted::Algo> algo_list;
  for (const std::string& s : split_list(algos)) algo_list.push_back(parse_algo(s));
  try {
    const ted::GrowthReport rep =
        ted::growth_report(split_list(families), size_list, algo_list);
    std::cout << rep.to_csv();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return 0;
}

int cmd_rna(const std::string& arg, const std::string& seq) {
  std::string structure = tree_text(arg);
  while (!structure.empty() &&
         (structure.back() == '\n' || structure.back() == '\r'))
    structure.pop_back();
  const ted::Tree t = seq.empty() ? ted::parse_dot_bracket(structure)
                                  : ted::parse_dot_bracket(structure, seq);
  if (t.node_count() > node_limit()) throw InputError("tree exceeds TED_MAX_NODES");
  std::cout << ted::emit_bracket(t) << "\n";
  return 0;
}

int cmd_selftest() {
  const ted::CostModel unit = ted::unit_model();
  int failures = 0;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      std::cerr << "selftest: " << what << " failed\n";
    }
  };

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const ted::Tree f = ted::gen_random(7, seed, 3);
    const ted::Tree g = ted::gen_random(6, seed + 100, 3);
    const long long a = ted::distance_sz(f, g, unit).cost;
    const long long b = ted::distance_klein(f, g, unit).cost;
    const long long c = ted::distance_dmrw(f, g, unit).cost;
    const long long d = ted::oracle_distance(f, g, unit);
    expect(a == b && b == c && c == d, "algorithm agreement");

    ted::DistanceEngine e(f, g, unit);
    e.run(ted::Algo::dmrw);
    const ted::EditScript s = e.extract_script();
    expect(s.total_cost == c, "script cost");
    expect(ted::trees_equal(ted::apply_script(f, s), g), "script replay");
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const ted::Tree f = ted::gen_random(40, seed, 4);
    const ted::Tree g = ted::gen_random(37, seed + 7, 4);
    const long long a = ted::distance_sz(f, g, unit).cost;
    const long long b = ted::distance_klein(f, g, unit).cost;
    const long long c = ted::distance_dmrw(f, g, unit).cost;
    expect(a == b && b == c, "algorithm agreement, medium size");
  }
  if (failures == 0) {
    std::cout << "selftest ok\n";
    return 0;
  }
  std::cerr << "selftest: " << failures << " check(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree edit distance toolkit"};
  app.require_subcommand(1);

  PairArgs dist_args;
  bool dist_stats = false;
  CLI::App* dist = app.add_subcommand("dist", "distance between two trees");
  add_pair_options(dist, dist_args);
  dist->add_flag("--stats", dist_stats, "print subproblem accounting");

  PairArgs script_args;
  CLI::App* script = app.add_subcommand("script", "optimal edit script");
  add_pair_options(script, script_args);

  std::string gen_family;
  long long gen_size = 0;
  bool gen_mirror = false;
  std::uint64_t gen_seed = 1;
  int gen_max_children = 4;
  int gen_alphabet = 3;
  CLI::App* gen = app.add_subcommand("gen", "print a generated tree");
  gen->add_option("family", gen_family, "path | comb | balanced | zigzag | random")
      ->required();
  gen->add_option("size", gen_size, "node count")->required();
  gen->add_flag("--mirror", gen_mirror, "mirror image (comb only)");
  gen->add_option("--seed", gen_seed, "random family: seed");
  gen->add_option("--max-children", gen_max_children, "random family: fan-out cap");
  gen->add_option("--alphabet", gen_alphabet, "random family: label count");

  PairArgs count_args;
  std::string count_families, count_sizes, count_algos = "sz,klein,dmrw";
  CLI::App* count = app.add_subcommand("count", "subproblem accounting");
  count->add_option("f", count_args.f, "first tree, literal or file");
  count->add_option("g", count_args.g, "second tree, literal or file");
  count->add_option("--algo", count_args.algo, "sz | klein | dmrw | auto")
      ->check(CLI::IsMember({"sz", "klein", "dmrw", "auto"}));
  count->add_option("--costs", count_args.costs, "cost table JSON file");
  count->add_option("--format", count_args.format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));
  count->add_option("--families", count_families,
                    "growth mode: comma list of path,comb,zigzag,balanced");
  count->add_option("--sizes", count_sizes, "growth mode: comma list of node counts");
  count->add_option("--algos", count_algos, "growth mode: comma list of algorithms");

  std::string rna_arg, rna_seq;
  CLI::App* rna = app.add_subcommand("rna", "dot-bracket structure to tree");
  rna->add_option("structure", rna_arg, "dot-bracket string, literal or file")
      ->required();
  rna->add_option("--seq", rna_seq, "base sequence, one character per position");

  CLI::App* selftest = app.add_subcommand("selftest", "built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (dist->parsed()) return cmd_dist(dist_args, dist_stats);
    if (script->parsed()) return cmd_script(script_args);
    if (gen->parsed())
      return cmd_gen(gen_family, gen_size, gen_mirror, gen_seed,
                     gen_max_children, gen_alphabet);
    if (count->parsed()) {
      const bool growth = !count_families.empty() || !count_sizes.empty();
      if (growth) {
        if (count_families.empty() || count_sizes.empty())
          throw InputError("growth mode needs --families and --sizes");
        if (!count_args.f.empty())
          throw InputError("growth mode takes no tree arguments");
        return cmd_count_growth(count_families, count_sizes, count_algos);
      }
      if (count_args.f.empty() || count_args.g.empty())
        throw InputError("count needs two trees or --families/--sizes");
      return cmd_count_pair(count_args);
    }
    if (rna->parsed()) return cmd_rna(rna_arg, rna_seq);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
