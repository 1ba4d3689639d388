// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: hunters_acceptance [--seed N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hunters/cli/cli.hpp"
#include "hunters/cube.hpp"
#include "hunters/error.hpp"
#include "hunters/families.hpp"
#include "hunters/nesting.hpp"
#include "hunters/solver.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace hunters;

namespace {

// Wall-clock ceilings.
constexpr double oracle_instance_seconds = 60.0;
constexpr double closed_form_chain_seconds = 10.0;
constexpr std::size_t property_cases = 1000;
constexpr std::size_t random_compression_samples = 500;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  auto started = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  if (!c.ok) ++failures;
  std::printf("[%s] %2d %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, seconds_since(started),
              c.ok ? "" : ": ", c.ok ? "" : c.detail.str().c_str());
  std::fflush(stdout);
}

nlohmann::json cli_json(std::vector<std::string> args) {
  args.push_back("--json");
  std::ostringstream out, err;
  if (hunters::cli::run(args, out, err) != 0) throw std::runtime_error("cli failed: " + err.str());
  return nlohmann::json::parse(out.str());
}

bool has_warning(const nlohmann::json& doc, const std::string& needle) {
  for (const auto& w : doc["warnings"])
    if (w.get<std::string>().find(needle) != std::string::npos) return true;
  return false;
}

void expect_hun(Check& c, const std::string& name, const Graph& g, std::size_t expected) {
  auto started = Clock::now();
  auto got = exact_hun(g, Variant::standard).hunter_number;
  auto took = seconds_since(started);
  c.require(got == expected, name + " gave " + std::to_string(got) + ", expected " + std::to_string(expected));
  c.require(took < oracle_instance_seconds, name + " took " + std::to_string(took) + "s");
}

std::string joined_labels(const Graph& g, const NestOrder& order, const VertexSet& shot) {
  std::string out;
  for (auto part : {Part::even, Part::odd})
    for (auto v : order.sequence(part))
      if (shot.contains(v)) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

std::vector<Subset> even_side(unsigned n) {
  std::vector<Subset> out;
  for (Subset x = 0; x < (Subset{1} << n); ++x)
    if (std::popcount(x) % 2 == 0) out.push_back(x);
  return out;
}

void compression_case(Check& c, const Family& a, unsigned n, std::size_t& violations) {
  auto before = cube_neighborhood(a, n).size();
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      auto b = compress_ij(a, n, i, j);
      if (b.size() != a.size() || cube_neighborhood(b, n).size() > before) ++violations;
    }
  auto full = compress_fully(a, n);
  if (!is_compressed(full.family, n)) ++violations;
  if (before < cube_neighborhood(initial_weightlex_segment(n, Part::even, a.size()), n).size()) ++violations;
  (void)c;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240611;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      seed = std::strtoull(argv[i] + 7, nullptr, 10);
    } else if (std::strcmp(argv[i], "--golden-dir") == 0 && i + 1 < argc) {
      ++i;
    } else {
      std::fprintf(stderr, "usage: %s [--seed N]\n", argv[0]);
      return 2;
    }
  }
  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));

  criterion(1, "oracle table: paths, stars, cycles, grids, Q^2, Q^3", [](Check& c) {
    for (std::size_t n = 2; n <= 7; ++n) expect_hun(c, "P_" + std::to_string(n), build_path(n), 1);
    for (std::size_t n = 1; n <= 6; ++n) expect_hun(c, "K_1," + std::to_string(n), build_star(n), 1);
    for (std::size_t n = 3; n <= 6; ++n) expect_hun(c, "C_" + std::to_string(n), build_cycle(n), 2);
    for (std::size_t n = 2; n <= 5; ++n) expect_hun(c, "grid 2x" + std::to_string(n), build_grid(2, n), 2);
    expect_hun(c, "grid 3x3", build_grid(3, 3), 2);
    expect_hun(c, "Q^2", build_hypercube(2), 2);
    expect_hun(c, "Q^3", build_hypercube(3), 3);
  });

  criterion(2, "nest strategy on Q^4 reproduces the four published shot sets", [](Check& c) {
    auto q4 = build_hypercube(4);
    auto order = weightlex_nest_order(4);
    auto s = nest_strategy(q4, order, 5, Variant::standard);
    const std::vector<std::string> published{"1001 0110 0101 0011 1111", "0010 0001 1110 1101 1011",
                                             "1100 1010 1001 0110 0101", "1000 0100 0010 0001 1110"};
    c.require(s.length() == published.size(), "length " + std::to_string(s.length()));
    for (std::size_t i = 0; i < std::min(s.length(), published.size()); ++i) {
      auto got = joined_labels(q4, order, s.shots[i]);
      c.require(got == published[i], "H_" + std::to_string(i + 1) + " = {" + got + "}");
    }
    c.require(std::holds_alternative<Caught>(verify(q4, extend_parity(q4, s))), "parity extension escapes");
  });

  criterion(3, "cube difference sequences equal brute-force mun profiles (n <= 5)", [](Check& c) {
    for (unsigned n = 1; n <= 5; ++n) {
      auto g = build_hypercube(n);
      auto even = mun_profile(g, Side::even, NeighborhoodMode::open).values;
      auto odd = mun_profile(g, Side::odd, NeighborhoodMode::open).values;
      auto pool = side_vertices(g, Side::even).to_mask();
      for (auto [part, brute] : {std::pair{Part::even, even}, std::pair{Part::odd, odd}}) {
        auto sums = cube_diff_seq(n, part).prefix_sums();
        c.require(sums.size() == brute.size(), "Q^" + std::to_string(n) + " profile length");
        for (std::size_t k = 1; k <= std::min(sums.size(), brute.size()); ++k)
          c.require(sums[k - 1] == static_cast<long long>(brute[k - 1]),
                    "Q^" + std::to_string(n) + " k=" + std::to_string(k));
      }
      for (std::size_t k = 1; k <= even.size(); ++k)
        c.require(even[k - 1] == oracle::mun(g, pool, k, false), "solver mun vs subset walk");
      c.require(even == odd, "Q^" + std::to_string(n) + " even and odd profiles differ");
    }
  });

  criterion(4, "cube_u + 1 = hun_qn = cumbersome_max + 1 <= upper, 2 <= n <= 14", [](Check& c) {
    auto started = Clock::now();
    for (unsigned n = 2; n <= 14; ++n) {
      auto u = cube_u(n);
      auto tag = "n=" + std::to_string(n);
      c.require(hun_qn(n) == u + 1, tag + " hun_qn");
      c.require(cumbersome_max(n) + 1 == hun_qn(n), tag + " cumbersome");
      c.require(hun_qn(n) <= hun_qn_upper(n), tag + " upper");
    }
    auto took = seconds_since(started);
    c.require(took < closed_form_chain_seconds, "took " + std::to_string(took) + "s");
  });

  criterion(5, "exact_hun(Q^n) = hun_qn(n) for n = 1, 2, 3 (and 4 when solved)", [](Check& c) {
    for (unsigned n = 1; n <= 3; ++n) {
      auto got = exact_hun(build_hypercube(n), Variant::standard).hunter_number;
      c.require(hun_qn(n) == got, "Q^" + std::to_string(n) + " gave " + std::to_string(got));
    }
    try {
      auto got = exact_hun(build_hypercube(4), Variant::standard).hunter_number;
      c.require(got == 5, "Q^4 gave " + std::to_string(got));
    } catch (const BudgetExceeded&) {
      // permitted
    }
  });

  criterion(6, "compression suite: exhaustive Q^4, 500 random families each for n = 5, 6", [seed](Check& c) {
    std::size_t violations = 0, cases = 0;
    auto side4 = even_side(4);
    for (unsigned mask = 0; mask < (1u << side4.size()); ++mask, ++cases) {
      Family a;
      for (std::size_t t = 0; t < side4.size(); ++t)
        if ((mask >> t) & 1) a.push_back(side4[t]);
      compression_case(c, a, 4, violations);
    }
    std::mt19937_64 rng(seed);
    for (unsigned n : {5u, 6u}) {
      auto side = even_side(n);
      for (std::size_t t = 0; t < random_compression_samples; ++t, ++cases) {
        std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.9)(rng));
        Family a;
        for (auto x : side)
          if (coin(rng)) a.push_back(x);
        compression_case(c, a, n, violations);
      }
    }
    c.require(violations == 0, std::to_string(violations) + " violations in " + std::to_string(cases) + " families");
  });

  criterion(7, "nesting checks: Q^n (n <= 5), grids 2x3 and 3x3, closed Q^n (n <= 4)", [](Check& c) {
    for (unsigned n = 1; n <= 5; ++n)
      c.require(check_isoperimetric_nesting(build_hypercube(n), weightlex_nest_order(n)).passed(),
                "Q^" + std::to_string(n));
    c.require(check_isoperimetric_nesting(build_grid(2, 3), grid_nest_order(2, 3)).passed(), "grid 2x3");
    c.require(check_isoperimetric_nesting(build_grid(3, 3), grid_nest_order(3, 3)).passed(), "grid 3x3");
    for (unsigned n = 1; n <= 4; ++n)
      c.require(check_closed_nesting(build_hypercube(n), weightlex_full_order(n)).passed(),
                "closed Q^" + std::to_string(n));
  });

  criterion(8, "deaf rabbit: P_4, C_4, C_5, Q^3 and the formula discrepancy report", [](Check& c) {
    auto deaf = [](const Graph& g) { return exact_hun(g, Variant::deaf).hunter_number; };
    c.require(deaf(build_path(4)) == 2, "P_4");
    c.require(deaf(build_cycle(4)) == 3, "C_4");
    c.require(deaf(build_cycle(5)) == 3, "C_5");
    auto q3 = deaf(build_hypercube(3));
    c.require(q3 == 5 && static_cast<long long>(q3) == deaf_u_qn_scan(3) + 1, "Q^3");
    const long long formula[] = {2, 3, 7}, scan[] = {2, 4, 7};
    for (unsigned n = 2; n <= 4; ++n) {
      auto doc = cli_json({"cube", std::to_string(n), "deaf"});
      auto tag = "n=" + std::to_string(n);
      c.require(doc["results"]["formula"] == formula[n - 2], tag + " formula");
      c.require(doc["results"]["scan_u"] == scan[n - 2], tag + " scan");
      c.require(doc["results"]["formula_vs_hunter_number"] == "MISMATCH", tag + " flag");
      c.require(has_warning(doc, "published deaf formula"), tag + " warning");
    }
  });

  criterion(9, "property suites: 1000 seeded cases each, zero violations", [seed](Check& c) {
    for (auto [name, o] : {std::pair{"monotone dynamics", props::monotone_dynamics(seed, property_cases)},
                           std::pair{"wasted shots", props::wasted_shot_invariance(seed + 1, property_cases)},
                           std::pair{"witness soundness", props::witness_soundness(seed + 2, property_cases)},
                           std::pair{"k-monotonicity", props::k_monotonicity(seed + 3, property_cases)}}) {
      c.require(o.cases >= property_cases, std::string(name) + ": too few cases");
      c.require(o.violations == 0, std::string(name) + ": " + std::to_string(o.violations) + " (" + o.first + ")");
    }
  });

  criterion(10, "known errata are flagged by the cube reports", [](Check& c) {
    auto diffseq = cli_json({"cube", "4", "diffseq"});
    c.require(diffseq["results"]["published_flag"] == "MISMATCH" && has_warning(diffseq, "9 entries"),
              "diffseq trailing zero");
    auto u = cli_json({"cube", "4", "u"});
    c.require(u["results"]["u"] == 4 && has_warning(u, "u(Q^4) = 5"), "u(Q^4)");
    auto mess = cli_json({"cube", "4", "messlemma", "--layer", "1"});
    c.require(mess["results"]["layers"][0]["value_flag"] == "MISMATCH" && has_warning(mess, "(4, 1)"),
              "messlemma value");
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
