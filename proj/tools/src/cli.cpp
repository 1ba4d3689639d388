#include "hunters/cli/cli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <functional>
#include <optional>
#include <string_view>

#include <CLI11.hpp>

#include "hunters/cli/report.hpp"
#include "hunters/cube.hpp"
#include "hunters/dynamics.hpp"
#include "hunters/error.hpp"
#include "hunters/families.hpp"
#include "hunters/graph_io.hpp"
#include "hunters/nesting.hpp"
#include "hunters/order_io.hpp"
#include "hunters/solver.hpp"
#include "hunters/strategy_io.hpp"

namespace hunters::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Session {
  Report report;
  std::vector<std::string> blobs;
  std::optional<std::string> raw;

  std::string load(const std::string& path) {
    auto text = read_text_file(path);
    blobs.push_back(text);
    return text;
  }

  template <class Parse>
  auto parse_file(const std::string& path, Parse&& parse) {
    auto text = load(path);
    try {
      return parse(text);
    } catch (const ParseError& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  Graph graph(const std::string& path) {
    return parse_file(path, [](const std::string& t) { return parse_graph(t); });
  }
  Strategy strategy(const std::string& path) {
    return parse_file(path, [](const std::string& t) { return parse_strategy(t); });
  }
  NestOrder order(const std::string& path) {
    return parse_file(path, [](const std::string& t) { return parse_order(t); });
  }

  Json& results() { return report.results; }
  void warn(std::string w) { report.warnings.push_back(std::move(w)); }
};

std::string_view variant_name(Variant v) { return v == Variant::deaf ? "deaf" : "standard"; }

Json indices(const VertexSet& s) {
  Json a = Json::array();
  for (auto v : s) a.push_back(v);
  return a;
}

Json shot_list(const Strategy& s) {
  Json a = Json::array();
  for (const auto& shot : s.shots) a.push_back(indices(shot));
  return a;
}

// Labels of each shot, listed in the order's ranking when one is given.
Json shot_labels(const Graph& g, const Strategy& s, const std::vector<std::size_t>* rank) {
  Json a = Json::array();
  for (const auto& shot : s.shots) {
    auto members = shot.members();
    if (rank)
      std::stable_sort(members.begin(), members.end(),
                       [rank](Vertex x, Vertex y) { return (*rank)[x] < (*rank)[y]; });
    Json row = Json::array();
    for (auto v : members) row.push_back(g.label(v));
    a.push_back(std::move(row));
  }
  return a;
}

Json verdict_json(const Graph& g, const Verdict& verdict) {
  Json j = Json::object();
  if (const auto* c = std::get_if<Caught>(&verdict)) {
    j["verdict"] = "caught";
    j["step"] = c->step;
  } else {
    const auto& walk = std::get<Escaped>(verdict).witness.walk;
    j["verdict"] = "escaped";
    j["walk"] = walk;
    if (g.has_labels()) {
      Json labels = Json::array();
      for (auto v : walk) labels.push_back(g.label(v));
      j["walk_labels"] = std::move(labels);
    }
  }
  return j;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  return value;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string output;
};

int cmd_gen(Session& s, const GenArgs& a) {
  const std::size_t arity = a.family == "grid" ? 2 : 1;
  if (a.params.size() != arity)
    throw UsageError(a.family + " takes " + std::to_string(arity) + " parameter" + (arity == 1 ? "" : "s"));
  std::vector<std::size_t> p;
  for (const auto& t : a.params) p.push_back(parse_count(t, a.family + " parameter"));
  Graph g;
  try {
    if (a.family == "path") {
      g = build_path(p[0]);
    } else if (a.family == "cycle") {
      g = build_cycle(p[0]);
    } else if (a.family == "grid") {
      g = build_grid(p[0], p[1]);
    } else if (a.family == "hypercube") {
      if (p[0] > max_hypercube_dimension) throw UsageError("hypercube dimension exceeds the generator limit");
      g = build_hypercube(static_cast<unsigned>(p[0]));
    } else {
      g = build_star(p[0]);
    }
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
  if (a.output.empty()) {
    s.raw = format_graph(g);
    return exit_code::ok;
  }
  write_graph_file(a.output, g);
  s.results()["family"] = a.family;
  s.results()["parameters"] = p;
  s.results()["vertices"] = g.vertex_count();
  s.results()["edges"] = g.edge_count();
  s.results()["output"] = a.output;
  return exit_code::ok;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  bool deaf = false;
  std::uint64_t budget = default_budget;
  std::string witness_out;
};

int cmd_solve(Session& s, const SolveArgs& a) {
  auto g = s.graph(a.graph);
  const auto variant = a.deaf ? Variant::deaf : Variant::standard;
  auto& r = s.results();
  r["variant"] = variant_name(variant);
  r["vertices"] = g.vertex_count();
  r["budget"] = a.budget;
  auto solved = exact_hun(g, variant, a.budget);
  r["status"] = "solved";
  r["hunter_number"] = solved.hunter_number;
  r["lower_bound"] = solved.lower_bound_used;
  r["explored_states"] = solved.explored_states;
  r["evaluated_shots"] = solved.evaluated_shots;
  r["witness_length"] = solved.witness.shots.size();
  r["witness"] = shot_list(solved.witness);
  if (g.has_labels()) r["witness_labels"] = shot_labels(g, solved.witness, nullptr);
  r["witness_check"] = verdict_json(g, verify(g, solved.witness));
  if (!a.witness_out.empty()) {
    write_strategy_file(a.witness_out, solved.witness);
    r["witness_file"] = a.witness_out;
  }
  return exit_code::ok;
}

// --- bounds ----------------------------------------------------------------

struct BoundsArgs {
  std::string graph;
  bool deaf = false;
  std::uint64_t budget = default_budget;
};

int cmd_bounds(Session& s, const BoundsArgs& a) {
  auto g = s.graph(a.graph);
  if (g.vertex_count() == 0) throw UsageError("graph has no vertices");
  const auto variant = a.deaf ? Variant::deaf : Variant::standard;
  const auto mode = neighborhood_mode(variant);
  auto& r = s.results();
  r["variant"] = variant_name(variant);
  auto profile = mun_profile(g, Side::all, mode, a.budget);
  r["mun_profile"] = profile.values;
  r["u"] = profile.u();
  r["lower"] = static_cast<std::size_t>(std::max<long long>(1, profile.u() + 1));
  r["degeneracy"] = degeneracy(g);
  if (auto n = recognize_hypercube(g); n && variant == Variant::standard) {
    auto path = build_path(*n + 1);
    std::vector<Vertex> weight(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) weight[v] = static_cast<Vertex>(std::popcount(v));
    r["hypercube_dimension"] = *n;
    r["upper"] = homomorphism_bound(g, path, weight, 1);
  }
  return exit_code::ok;
}

// --- strategy --------------------------------------------------------------

struct StrategyArgs {
  std::string graph;
  std::string order = "weightlex";
  std::string order_file;
  std::optional<std::size_t> hunters;
  bool deaf = false;
  bool extend_parity = false;
  std::string output;
  std::uint64_t budget = default_budget;
};

NestOrder select_order(Session& s, const Graph& g, const StrategyArgs& a) {
  const bool full = a.deaf;
  if (a.order == "weightlex") {
    auto n = recognize_hypercube(g);
    if (!n) throw UsageError("--order weightlex needs a hypercube with bit-string labels");
    return full ? weightlex_full_order(*n) : weightlex_nest_order(*n);
  }
  if (a.order == "grid") {
    auto mn = recognize_grid(g);
    if (!mn) throw UsageError("--order grid needs a grid with \"r,c\" labels");
    return full ? grid_full_order(mn->first, mn->second) : grid_nest_order(mn->first, mn->second);
  }
  if (a.order_file.empty()) throw UsageError("--order file needs --order-file");
  auto order = s.order(a.order_file);
  if ((order.kind == OrderKind::full) != full)
    throw UsageError(full ? "--deaf needs an order of kind full" : "standard play needs an order of kind bipartite");
  return order;
}

std::vector<std::size_t> order_rank(const Graph& g, const NestOrder& order) {
  std::vector<std::size_t> rank(g.vertex_count(), 0);
  auto assign = [&rank](const std::vector<Vertex>& seq, std::size_t offset) {
    for (std::size_t t = 0; t < seq.size(); ++t) rank[seq[t]] = offset + t;
  };
  if (order.kind == OrderKind::full) {
    assign(order.all, 0);
  } else {
    assign(order.even, 0);
    assign(order.odd, order.even.size());
  }
  return rank;
}

int cmd_strategy(Session& s, const StrategyArgs& a) {
  if (a.deaf && a.extend_parity) throw UsageError("--extend-parity applies to the standard rabbit only");
  auto g = s.graph(a.graph);
  const auto variant = a.deaf ? Variant::deaf : Variant::standard;
  auto order = select_order(s, g, a);
  validate_order(g, order);
  auto& r = s.results();
  r["variant"] = variant_name(variant);
  r["order"] = a.order;

  auto check = a.deaf ? check_closed_nesting(g, order, a.budget) : check_isoperimetric_nesting(g, order, a.budget);
  r["nesting_check"] = check.passed() ? "passed" : "failed";
  if (!check.passed()) {
    const auto& v = check.violations.front();
    s.warn("nesting check failed at k = " + std::to_string(v.k) + ": " + v.reason + " (" +
           std::to_string(check.violations.size()) + " violations)");
  }

  std::size_t m = 0;
  if (a.hunters) {
    m = *a.hunters;
    r["hunters_source"] = "given";
  } else {
    m = hun_via_nesting(g, order, a.budget);
    r["hunters_source"] = "nesting";
  }
  if (m == 0) throw UsageError("--hunters must be positive");
  r["hunters"] = m;

  auto strategy = nest_strategy(g, order, m, variant);
  r["nest_length"] = strategy.shots.size();
  if (a.extend_parity) {
    strategy = extend_parity(g, strategy);
    r["extended"] = true;
  }
  r["length"] = strategy.shots.size();
  r["shots"] = shot_list(strategy);
  if (g.has_labels()) {
    auto rank = order_rank(g, order);
    r["shot_labels"] = shot_labels(g, strategy, &rank);
  }

  Json checks = Json::object();
  checks["any"] = verdict_json(g, verify(g, strategy, StartSide::any));
  if (!a.deaf) {
    checks["even"] = verdict_json(g, verify(g, strategy, StartSide::even));
    checks["odd"] = verdict_json(g, verify(g, strategy, StartSide::odd));
  }
  r["verification"] = std::move(checks);

  if (!a.output.empty()) {
    write_strategy_file(a.output, strategy);
    r["output"] = a.output;
  }
  return exit_code::ok;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string strategy;
  std::string start = "any";
};

int cmd_verify(Session& s, const VerifyArgs& a) {
  auto g = s.graph(a.graph);
  auto strategy = s.strategy(a.strategy);
  const auto start = a.start == "even" ? StartSide::even : a.start == "odd" ? StartSide::odd : StartSide::any;
  auto& r = s.results();
  r["variant"] = variant_name(strategy.variant);
  r["start"] = a.start;
  r["length"] = strategy.shots.size();
  r["max_shot_size"] = strategy.max_shot_size();
  auto verdict = verify(g, strategy, start);
  auto outcome = verdict_json(g, verdict);
  for (auto& [key, value] : outcome.items()) r[key] = value;
  return std::holds_alternative<Caught>(verdict) ? exit_code::ok : exit_code::escaped;
}

// --- cube ------------------------------------------------------------------

struct CubeArgs {
  unsigned n = 0;
  std::string what;
  std::string side = "even";
  std::optional<unsigned> layer;
  std::uint64_t budget = default_budget;
};

// Largest dimension cross-checked against brute-force profiles.
constexpr unsigned brute_force_cube_limit = 5;
// Largest dimension also solved by exhaustive search in cube reports.
constexpr unsigned oracle_cube_limit = 4;

void require_sequence_range(unsigned n) {
  if (n < 1 || n > max_sequence_dimension)
    throw UsageError("n must lie in 1.." + std::to_string(max_sequence_dimension));
}

Side to_side(Part p) { return p == Part::even ? Side::even : Side::odd; }

void cube_hun(Session& s, const CubeArgs& a) {
  auto& r = s.results();
  auto formula = hun_qn(a.n);
  r["hun"] = big(formula);
  r["upper"] = big(hun_qn_upper(a.n));
  if (a.n <= max_sequence_dimension) {
    auto scan = cube_u(a.n) + 1;
    r["scan_u_plus_1"] = scan;
    r["scan_flag"] = match_flag(formula == scan);
    if (formula != scan)
      s.warn("closed form gives " + formula.str() + " but the difference-sequence scan gives " + std::to_string(scan));
  }
  if (a.n <= oracle_cube_limit) {
    auto exact = exact_hun(build_hypercube(a.n), Variant::standard, a.budget).hunter_number;
    r["exact"] = exact;
    r["exact_flag"] = match_flag(formula == exact);
  }
}

void cube_diffseq(Session& s, const CubeArgs& a, Part side) {
  require_sequence_range(a.n);
  auto& r = s.results();
  auto d = cube_diff_seq(a.n, side);
  r["side"] = a.side;
  r["length"] = d.values.size();
  r["values"] = d.values;
  if (a.n <= brute_force_cube_limit) {
    auto brute = mun_profile(build_hypercube(a.n), to_side(side), NeighborhoodMode::open, a.budget).differences();
    r["brute_force_flag"] = match_flag(brute == d.values);
  }
  if (a.n == 4) {
    const std::vector<long long> published{4, 2, 1, 0, 1, 0, 0, 0, 0};
    r["published"] = published;
    r["published_flag"] = match_flag(published == d.values);
    s.warn("published difference sequence of Q^4 has 9 entries (4 2 1 0 1 0 0 0 0); each side of Q^4 has 8 "
           "vertices, so the computed sequence has 8 entries and no trailing ninth 0");
  }
}

void cube_mun_profile(Session& s, const CubeArgs& a, Part side) {
  require_sequence_range(a.n);
  auto& r = s.results();
  auto d = cube_diff_seq(a.n, side);
  r["side"] = a.side;
  r["profile"] = d.prefix_sums();
  if (a.n <= brute_force_cube_limit) {
    auto brute = mun_profile(build_hypercube(a.n), to_side(side), NeighborhoodMode::open, a.budget).values;
    std::vector<long long> wide(brute.begin(), brute.end());
    r["brute_force_flag"] = match_flag(wide == d.prefix_sums());
  }
}

void cube_u_report(Session& s, const CubeArgs& a) {
  require_sequence_range(a.n);
  auto& r = s.results();
  auto u = cube_u(a.n);
  r["u"] = u;
  r["hunter_number"] = u + 1;
  if (a.n <= brute_force_cube_limit) {
    auto brute = u_value(build_hypercube(a.n), Side::even, NeighborhoodMode::open, a.budget);
    r["brute_force_u"] = brute;
    r["brute_force_flag"] = match_flag(brute == u);
  }
  if (a.n == 4) {
    r["published_u"] = 5;
    r["published_flag"] = match_flag(u == 5);
    s.warn("published text states u(Q^4) = 5; the scan gives u = 4, and 5 is the hunter number u + 1");
  }
}

void cube_deaf(Session& s, const CubeArgs& a) {
  require_sequence_range(a.n);
  auto& r = s.results();
  auto u = deaf_u_qn_scan(a.n);
  auto formula = deaf_hun_qn_formula(a.n);
  r["scan_u"] = u;
  r["scan_hunter_number"] = u + 1;
  r["formula"] = big(formula);
  r["formula_vs_hunter_number"] = match_flag(formula == u + 1);
  r["formula_vs_u"] = match_flag(formula == u);
  if (a.n <= oracle_cube_limit) {
    auto g = build_hypercube(a.n);
    r["closed_nesting_check"] = check_closed_nesting(g, weightlex_full_order(a.n), a.budget).passed() ? "passed"
                                                                                                    : "failed";
    auto exact = exact_hun(g, Variant::deaf, a.budget).hunter_number;
    r["exact"] = exact;
    r["exact_flag"] = match_flag(exact == static_cast<std::size_t>(u + 1));
  }
  if (formula != u + 1) {
    std::string w = "published deaf formula gives " + formula.str() + "; the closed-coverage scan gives u = " +
                    std::to_string(u) + " and hunter number " + std::to_string(u + 1);
    w += formula == u ? " (the formula matches u, not u + 1)" : " (the formula matches neither)";
    s.warn(std::move(w));
  }
}

void cube_messlemma(Session& s, const CubeArgs& a) {
  if (a.n < 2) throw UsageError("messlemma needs n >= 2");
  std::vector<unsigned> layers;
  if (a.layer) {
    if (*a.layer < 1 || *a.layer >= a.n) throw UsageError("--layer must satisfy 1 <= i < n");
    layers.push_back(*a.layer);
  } else {
    for (unsigned i = 1; i < a.n; ++i) layers.push_back(i);
  }
  Json rows = Json::array();
  for (auto i : layers) {
    auto position = messlemma_position(a.n, i);
    auto value = messlemma_value(a.n, i);
    auto scan = messlemma_scan(a.n, i);
    Json row = Json::object();
    row["i"] = i;
    row["position_formula"] = big(position);
    row["position_scan"] = scan.position;
    row["position_flag"] = match_flag(position == scan.position);
    row["value_formula"] = big(value);
    row["value_scan"] = scan.value;
    row["value_flag"] = match_flag(value == scan.value);
    auto at = "(" + std::to_string(a.n) + ", " + std::to_string(i) + ")";
    if (position != scan.position)
      s.warn("published position formula at " + at + " gives " + position.str() + "; the scan finds the last maximum at " +
             std::to_string(scan.position));
    if (value != scan.value)
      s.warn("published value formula at " + at + " gives " + value.str() + "; the scan of " + std::to_string(a.n) +
             "^" + std::to_string(i) + " gives " + std::to_string(scan.value));
    rows.push_back(std::move(row));
  }
  s.results()["layers"] = std::move(rows);
}

void cube_cumbersome(Session& s, const CubeArgs& a) {
  if (a.n < 2) throw UsageError("cumbersome needs n >= 2");
  auto& r = s.results();
  auto formula = cumbersome_max(a.n);
  r["formula"] = big(formula);
  if (a.n <= max_sequence_dimension) {
    auto scan = cube_u(a.n);
    r["scan"] = scan;
    r["scan_flag"] = match_flag(formula == scan);
    if (formula != scan)
      s.warn("closed form gives " + formula.str() + " but the scan gives " + std::to_string(scan));
  }
}

int cmd_cube(Session& s, const CubeArgs& a) {
  if (a.n < 1) throw UsageError("n must be positive");
  s.results()["n"] = a.n;
  s.results()["quantity"] = a.what;
  const auto side = a.side == "odd" ? Part::odd : Part::even;
  if (a.what == "hun") cube_hun(s, a);
  else if (a.what == "diffseq") cube_diffseq(s, a, side);
  else if (a.what == "mun") cube_mun_profile(s, a, side);
  else if (a.what == "u") cube_u_report(s, a);
  else if (a.what == "deaf") cube_deaf(s, a);
  else if (a.what == "messlemma") cube_messlemma(s, a);
  else cube_cumbersome(s, a);
  return exit_code::ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hunters and rabbits: exact solving, bounds and nest strategies", "hunters"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, timing = false;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_flag("--timing", timing, "Include elapsed time in the report");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a graph from a standard family");
  gen_cmd->add_option("family", gen.family, "path | cycle | grid | hypercube | star")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "grid", "hypercube", "star"}));
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("-o,--output", gen.output, "Graph file (stdout when omitted)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact hunter number with a witness strategy");
  solve_cmd->add_option("graph", solve.graph)->required();
  solve_cmd->add_flag("--deaf", solve.deaf, "Deaf rabbit (closed neighbourhoods)");
  solve_cmd->add_option("--budget", solve.budget, "Shot evaluations before giving up");
  solve_cmd->add_option("--witness-out", solve.witness_out, "Write the witness strategy file");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "mun-based and degeneracy lower bounds");
  bounds_cmd->add_option("graph", bounds.graph)->required();
  bounds_cmd->add_flag("--deaf", bounds.deaf);
  bounds_cmd->add_option("--budget", bounds.budget, "Enumeration nodes for mun");

  StrategyArgs strat;
  auto* strat_cmd = app.add_subcommand("strategy", "Nest strategy from a vertex order");
  strat_cmd->add_option("graph", strat.graph)->required();
  strat_cmd->add_option("--order", strat.order, "weightlex | grid | file")
      ->check(CLI::IsMember({"weightlex", "grid", "file"}));
  strat_cmd->add_option("--order-file", strat.order_file, "Order file for --order file");
  strat_cmd->add_option("--hunters,-m", strat.hunters, "Hunters per round (default: from the nesting)");
  strat_cmd->add_flag("--deaf", strat.deaf);
  strat_cmd->add_flag("--extend-parity", strat.extend_parity, "Extend to a strategy winning from any start");
  strat_cmd->add_option("-o,--output", strat.output, "Write the strategy file");
  strat_cmd->add_option("--budget", strat.budget, "Enumeration nodes for the nesting check");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Simulate a strategy");
  verify_cmd->add_option("graph", ver.graph)->required();
  verify_cmd->add_option("strategy", ver.strategy)->required();
  verify_cmd->add_option("--start", ver.start, "any | even | odd")->check(CLI::IsMember({"any", "even", "odd"}));

  CubeArgs cube;
  auto* cube_cmd = app.add_subcommand("cube", "Hypercube closed forms next to their scans");
  cube_cmd->add_option("n", cube.n)->required();
  cube_cmd->add_option("quantity", cube.what, "hun | diffseq | mun | u | deaf | messlemma | cumbersome")
      ->required()
      ->check(CLI::IsMember({"hun", "diffseq", "mun", "u", "deaf", "messlemma", "cumbersome"}));
  cube_cmd->add_option("--side", cube.side, "even | odd")->check(CLI::IsMember({"even", "odd"}));
  cube_cmd->add_option("--layer,-i", cube.layer, "Single layer for messlemma");
  cube_cmd->add_option("--budget", cube.budget, "Budget for brute-force cross-checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_code::ok : exit_code::usage;
  }

  std::function<int(Session&)> action;
  if (*gen_cmd) action = [&](Session& s) { return cmd_gen(s, gen); };
  else if (*solve_cmd) action = [&](Session& s) { return cmd_solve(s, solve); };
  else if (*bounds_cmd) action = [&](Session& s) { return cmd_bounds(s, bounds); };
  else if (*strat_cmd) action = [&](Session& s) { return cmd_strategy(s, strat); };
  else if (*verify_cmd) action = [&](Session& s) { return cmd_verify(s, ver); };
  else action = [&](Session& s) { return cmd_cube(s, cube); };

  Session session;
  session.report.command = args;
  const auto started = std::chrono::steady_clock::now();
  int code = exit_code::ok;
  try {
    code = action(session);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    session.results()["status"] = "budget_exceeded";
    session.results()["best_lower_bound"] = e.best_lower_bound();
    code = exit_code::budget;
  } catch (const NonTerminating& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::failure;
  }

  if (session.raw) {
    out << *session.raw;
    return code;
  }
  session.report.inputs_digest = digest(session.blobs);
  if (timing)
    session.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  for (const auto& w : session.report.warnings) err << "warning: " << w << '\n';
  if (json)
    out << session.report.to_json().dump(2) << '\n';
  else
    out << session.report.render_text();
  return code;
}

}  // namespace hunters::cli
