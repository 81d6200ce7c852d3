#include "defdom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <charconv>
#include <fstream>
#include <sstream>

#include "defdom/bubble_solver.hpp"
#include "defdom/defense.hpp"
#include "defdom/error.hpp"
#include "defdom/generators.hpp"
#include "defdom/greedy.hpp"
#include "defdom/io.hpp"
#include "defdom/oracle.hpp"

namespace defdom {
namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t a = pos;
    std::size_t b = end;
    while (a < b && text[a] == ' ') ++a;
    while (b > a && text[b - 1] == ' ') --b;
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + a, text.data() + b, v);
    if (a == b || ec != std::errc() || p != text.data() + b) {
      throw ParseError(a, std::string("bad entry in ") + what + ": '" + text.substr(a, b - a) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto whole = [&](std::size_t from, std::size_t to) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text.data() + from, text.data() + to, v);
    if (from == to || ec != std::errc() || p != text.data() + to) {
      throw ParseError(from, "bad rational '" + text + "'");
    }
    return v;
  };
  if (slash == std::string::npos) return Rational(whole(0, text.size()));
  const std::int64_t den = whole(slash + 1, text.size());
  if (den <= 0) throw ParseError(slash + 1, "denominator must be positive");
  return Rational(whole(0, slash), den);
}

Instance load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

void print_set(std::ostream& out, const std::vector<Vertex>& d) {
  out << "size=" << d.size() << '\n';
  for (Vertex v : d) out << v << '\n';
}

void check_k(int k) {
  if (k < 1) throw BadParameters("--k must be at least 1");
}

int cmd_solve(const std::string& input, int k, const std::string& algo, bool emit, std::ostream& out) {
  check_k(k);
  const Instance inst = load(input);
  const auto& g = inst.graph;
  std::vector<Vertex> d;
  if (algo == "greedy") {
    d = solve_greedy(g, k);
  } else {
    d = inst.bubbles ? solve_bubble(linear_from_compact(*inst.bubbles), k) : solve_bubble(g, k);
  }
  print_set(out, d);
  if (emit) {
    const int m = std::min(k, g.n());
    for (Vertex first = 1; first + m - 1 <= g.n(); ++first) {
      const AttackRange a{first, first + m - 1};
      const auto f = defends_consecutive(g, d, a);
      out << '[' << a.first << ".." << a.last << ']';
      for (const auto& p : f->pairs) out << ' ' << p.defender << "->" << p.attacker;
      out << '\n';
    }
  }
  return 0;
}

int cmd_verify(const std::string& input, int k, const std::string& list, std::ostream& out) {
  check_k(k);
  const Instance inst = load(input);
  std::vector<Vertex> d;
  try {
    d = parse_int_list(list, "--defenders");
  } catch (const ParseError& e) {
    throw Error(std::string("--defenders: ") + e.what());
  }
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1 || d[i] > inst.graph.n()) {
      throw BadParameters("defender " + std::to_string(d[i]) + " is not a vertex");
    }
    if (i > 0 && d[i] == d[i - 1]) throw BadParameters("defender " + std::to_string(d[i]) + " repeated");
  }
  if (const auto bad = first_undefended(inst.graph, d, k)) {
    out << "FAIL attack [" << bad->first << ".." << bad->last << "]\n";
    return 1;
  }
  out << "OK\n";
  return 0;
}

int cmd_oracle(const std::string& input, int k, int cap, std::ostream& out) {
  check_k(k);
  const Instance inst = load(input);
  const auto [size, witness] = min_defensive_bruteforce(to_edge_list(inst.graph), k, cap);
  (void)size;
  print_set(out, witness);
  return 0;
}

int cmd_bubbles(const std::string& input, bool dot, std::ostream& out) {
  const Instance inst = load(input);
  const LinearBubbleModel lbm = inst.bubbles ? linear_from_compact(*inst.bubbles) : bubbles_from_pig(inst.graph);
  if (!dot) {
    for (int i = 1; i <= lbm.size(); ++i) {
      const Bubble& b = lbm[i];
      out << i << ' ' << b.size << ' ' << b.min_v << ".." << b.max_v << ' ' << b.min_nbr << ' '
          << b.max_nbr << '\n';
    }
    return 0;
  }
  out << "digraph bubbles {\n  rankdir=LR;\n  node [shape=box];\n";
  for (int i = 1; i <= lbm.size(); ++i) out << "  B" << i << " [label=\"B" << i << '(' << lbm[i].size << ")\"];\n";
  for (int i = 1; i < lbm.size(); ++i) out << "  B" << i << " -> B" << i + 1 << ";\n";
  for (int i = 1; i <= lbm.size(); ++i) {
    const int reach = lbm.bubble_of(lbm[i].max_nbr);
    if (reach != i) out << "  B" << i << " -> B" << reach << " [style=dashed];\n";
  }
  out << "}\n";
  return 0;
}

struct GenOptions {
  std::string family;
  int n = 0;
  std::uint64_t seed = 1;
  std::string format = "pig";
  std::string output;
  std::string cliques;
  int clique = 3;
  std::string spread = "1/8";
  bool connected = false;
  int columns = 4;
  int rows = 4;
};

std::string generate(const GenOptions& o) {
  if (o.n < 1) throw BadParameters("--n must be at least 1");
  std::optional<IntervalList> intervals;
  std::optional<CompactBubbleStructure> compact;
  ProperIntervalGraph g;
  if (o.family == "random") {
    Rational spread = parse_rational(o.spread);
    std::uint64_t seed = o.seed;
    // Same redraw rule as gen_random_unit_intervals, keeping the endpoints.
    for (int attempt = 0;; ++attempt) {
      if (attempt == 1000) throw BadParameters("no connected draw in 1000 attempts");
      intervals = random_unit_intervals(o.n, spread, seed + attempt);
      g = from_intervals(*intervals);
      if (!o.connected || is_connected(g)) break;
    }
  } else if (o.family == "bubbles") {
    compact = gen_random_bubbles(o.n, o.columns, o.rows, o.seed);
    g = pig_from_bubbles(*compact);
  } else {
    FamilyParams params;
    params.clique = o.clique;
    if (!o.cliques.empty()) params.sizes = parse_int_list(o.cliques, "--cliques");
    g = gen_family(o.family, o.n, params);
  }
  if (o.format == "pig") return write_pig(g);
  if (o.format == "intervals") return write_intervals(intervals ? *intervals : to_intervals(g));
  return write_bubbles(compact ? *compact : compact_from_pig(g));
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const std::string text = generate(o);
  if (o.output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw Error("cannot write '" + o.output + "'");
  file << text;
  return 0;
}

struct BenchOptions {
  GenOptions gen;
  std::string sizes;
  int k = 2;
  int repeats = 3;
};

template <typename F>
std::int64_t median_nanoseconds(int repeats, F&& f) {
  std::vector<std::int64_t> t;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    t.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  }
  std::nth_element(t.begin(), t.begin() + t.size() / 2, t.end());
  return t[t.size() / 2];
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  check_k(o.k);
  if (o.repeats < 1) throw BadParameters("--repeats must be at least 1");
  out << "instance,n,bubbles,k,algo,nanoseconds,defense_steps,heap_ops,list_ops\n";
  for (int n : parse_int_list(o.sizes, "--sizes")) {
    GenOptions go = o.gen;
    go.n = n;
    go.format = "pig";
    const Instance inst = parse_instance(generate(go));
    const auto& g = inst.graph;
    const std::string name = o.gen.family + "-" + std::to_string(n) + "-s" + std::to_string(o.gen.seed);
    const int bubbles = bubbles_from_pig(g).size();

    GreedyStats gs;
    solve_greedy(g, o.k, &gs);
    const auto tg = median_nanoseconds(o.repeats, [&] { solve_greedy(g, o.k); });
    out << name << ',' << n << ',' << bubbles << ',' << o.k << ",greedy," << tg << ','
        << gs.defense_steps << ",0,0\n";

    BubbleSolverStats bs;
    solve_bubble(g, o.k, &bs);
    const auto tb = median_nanoseconds(o.repeats, [&] { solve_bubble(g, o.k); });
    out << name << ',' << n << ',' << bubbles << ',' << o.k << ",bubble," << tb << ",0,"
        << bs.heap_ops() << ',' << bs.list_ops << '\n';
  }
  return 0;
}

void add_gen_options(CLI::App* app, GenOptions& o) {
  app->add_option("--family", o.family, "path, complete, clique_chain, random or bubbles")
      ->required()
      ->check(CLI::IsMember({"path", "complete", "clique_chain", "random", "bubbles"}));
  app->add_option("--seed", o.seed, "generator seed");
  app->add_option("--cliques", o.cliques, "clique_chain clique sizes, comma separated");
  app->add_option("--clique", o.clique, "clique_chain clique size when --cliques is absent");
  app->add_option("--spread", o.spread, "random: left endpoints lie in [0, spread*n]");
  app->add_flag("--connected", o.connected, "random: redraw until connected");
  app->add_option("--columns", o.columns, "bubbles: maximum column count");
  app->add_option("--rows", o.rows, "bubbles: maximum bubbles per column");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum k-defensive dominating sets of proper interval graphs", "defdom"};
  app.require_subcommand(1);

  std::string input;
  std::string algo = "greedy";
  std::string defenders;
  int k = 0;
  bool emit = false;
  bool dot = false;
  int cap = kMinimumSearchCap;

  auto* solve = app.add_subcommand("solve", "minimum k-defensive set");
  solve->add_option("--input", input, "instance file")->required();
  solve->add_option("--k", k, "attack size bound")->required();
  solve->add_option("--algo", algo, "greedy or bubble")->check(CLI::IsMember({"greedy", "bubble"}));
  solve->add_flag("--emit-defense", emit, "also print the defense of every window");

  auto* verify = app.add_subcommand("verify", "check a defender set");
  verify->add_option("--input", input, "instance file")->required();
  verify->add_option("--k", k, "attack size bound")->required();
  verify->add_option("--defenders", defenders, "comma-separated 1-based vertices")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force minimum");
  oracle->add_option("--input", input, "instance file")->required();
  oracle->add_option("--k", k, "attack size bound")->required();
  oracle->add_option("--cap", cap, "largest vertex count searched")->check(CLI::Range(1, 20));

  auto* bubbles = app.add_subcommand("bubbles", "print the linear bubble model");
  bubbles->add_option("--input", input, "instance file")->required();
  bubbles->add_flag("--dot", dot, "render as Graphviz DOT");

  GenOptions gen;
  auto* gencmd = app.add_subcommand("gen", "write an instance");
  add_gen_options(gencmd, gen);
  gencmd->add_option("--n", gen.n, "vertex count")->required();
  gencmd->add_option("--format", gen.format, "pig, intervals or bubbles")
      ->check(CLI::IsMember({"pig", "intervals", "bubbles"}));
  gencmd->add_option("--output", gen.output, "output file; standard output if absent");

  BenchOptions bench;
  auto* benchcmd = app.add_subcommand("bench", "time both solvers, CSV to standard output");
  add_gen_options(benchcmd, bench.gen);
  benchcmd->add_option("--sizes", bench.sizes, "vertex counts, comma separated")->required();
  benchcmd->add_option("--k", bench.k, "attack size bound")->required();
  benchcmd->add_option("--repeats", bench.repeats, "timed runs per solver; the median is reported");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(solve)) return cmd_solve(input, k, algo, emit, out);
    if (app.got_subcommand(verify)) return cmd_verify(input, k, defenders, out);
    if (app.got_subcommand(oracle)) return cmd_oracle(input, k, cap, out);
    if (app.got_subcommand(bubbles)) return cmd_bubbles(input, dot, out);
    if (app.got_subcommand(gencmd)) return cmd_gen(gen, out);
    return cmd_bench(bench, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace defdom
