// Command-line front end: exact and simulated ratio-set probabilities,
// graph exports, asymptotic constants and the self-test suite.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ratioset/asymptotics.hpp"
#include "ratioset/errors.hpp"
#include "ratioset/exact_prob.hpp"
#include "ratioset/hypergraph.hpp"
#include "ratioset/monte_carlo.hpp"
#include "ratioset/ratio_graph.hpp"
#include "ratioset/recurrences.hpp"
#include "ratioset/selftest.hpp"
#include "ratioset/serialize.hpp"

using namespace ratioset;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCapability = 3;
constexpr std::uint64_t kExactDefaultLimit = 10000;

struct Options {
  std::uint64_t n = 0;
  std::uint64_t n_from = 0;
  std::uint64_t n_to = 0;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::string alpha;
  std::string mode;
  std::string E;
  std::string qs;
  std::string xs;
  std::string format;
  std::string event;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  double z = 3.89;
  unsigned threads = 0;
  std::optional<double> target;
  double tol = 1e-12;
  std::size_t i_max = 40;
  bool quick = false;
  bool no_timing = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

std::vector<ReducedFraction> parse_fraction_list(const std::string& text) {
  if (text.empty()) throw InvalidArgument("--q needs a comma-separated list such as 2/3,3/4");
  std::vector<ReducedFraction> out;
  for (const auto& item : split(text, ',')) {
    const auto q = parse_rational(item);
    if (q <= 0) throw InvalidArgument("fractions must be positive: " + item);
    out.push_back(normalize_fraction(q.get_num().get_ui(), q.get_den().get_ui()).fraction);
  }
  return out;
}

DirectionVector parse_direction(const std::string& text) {
  std::vector<std::uint64_t> coords;
  for (const auto& item : split(text, ',')) {
    const auto q = parse_rational(item);
    if (q.get_den() != 1 || q <= 0) throw InvalidArgument("direction coordinates must be positive integers");
    coords.push_back(q.get_num().get_ui());
  }
  return DirectionVector(std::move(coords));
}

/// Applies the mode rules: decimals are float only; exact alphas default to
/// exact arithmetic up to n = 10^4 and to log-space floats beyond.
AlphaParam resolve_alpha(const Options& o, std::uint64_t n) {
  if (o.alpha.empty()) throw InvalidArgument("--alpha is required");
  const auto alpha = AlphaParam::parse(o.alpha);
  if (o.mode == "exact") {
    if (!alpha.is_exact()) throw InvalidArgument("a decimal alpha cannot be used in exact mode; pass p/q");
    return alpha;
  }
  if (o.mode == "float") return alpha.as_floating();
  if (!o.mode.empty()) throw InvalidArgument("--mode must be exact or float");
  return (alpha.is_exact() && n <= kExactDefaultLimit) ? alpha : alpha.as_floating();
}

NormalizedFraction query_fraction(const Options& o) {
  if (o.r == 0 || o.s == 0) throw InvalidArgument("--r and --s must be positive");
  return normalize_fraction(o.r, o.s);
}

Json fraction_query(const Options& o, const NormalizedFraction& nf) {
  Json q;
  q["input"] = std::to_string(o.r) + "/" + std::to_string(o.s);
  q["r"] = nf.fraction.numerator();
  q["s"] = nf.fraction.denominator();
  q["divided_by_gcd"] = nf.common_divisor;
  q["inverted"] = nf.inverted;
  return q;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o), start_(std::chrono::steady_clock::now()) {}

  int emit(Json query, std::string_view mode, Json result, std::string_view provenance) const {
    Json out;
    out["query"] = std::move(query);
    out["mode"] = mode;
    out["result"] = std::move(result);
    out["provenance"] = provenance;
    if (!o_.no_timing)
      out["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    std::cout << out.dump() << "\n";
    return 0;
  }

  int prob() const {
    const auto nf = query_fraction(o_);
    const auto& q = nf.fraction;
    if (o_.n_from || o_.n_to) return prob_sweep(q);
    if (o_.n == 0) throw InvalidArgument("--n must be positive");
    const auto alpha = resolve_alpha(o_, o_.n);
    const auto p = prob_in_ratio_set(o_.n, q, alpha);
    Json query = fraction_query(o_, nf);
    query["n"] = o_.n;
    query["alpha"] = o_.alpha;
    return emit(std::move(query), to_string(p.mode()), probability_record(o_.n, q, std::nullopt, alpha, p),
                to_string(p.provenance()));
  }

  int prob_sweep(const ReducedFraction& q) const {
    if (o_.n_from == 0 || o_.n_to < o_.n_from) throw InvalidArgument("--n-from/--n-to must satisfy 1 <= from <= to");
    const bool csv = o_.format == "csv";
    if (!csv && !o_.format.empty() && o_.format != "json") throw InvalidArgument("--format must be json or csv");
    Json rows = Json::array();
    if (csv) std::cout << "n,r,s,alpha,mode,p,log_one_minus_p\n";
    for (std::uint64_t n = o_.n_from; n <= o_.n_to; ++n) {
      const auto alpha = resolve_alpha(o_, o_.n_to);
      const auto p = prob_in_ratio_set(n, q, alpha);
      if (csv) {
        std::cout << n << "," << q.numerator() << "," << q.denominator() << "," << alpha.to_string() << ","
                  << to_string(p.mode()) << "," << (p.is_exact() ? to_string(p.exact_value()) : Json(p.value()).dump())
                  << "," << Json(p.log_complement()).dump() << "\n";
      } else {
        rows.push_back(probability_record(n, q, std::nullopt, alpha, p));
      }
    }
    if (csv) return 0;
    Json query;
    query["n_from"] = o_.n_from;
    query["n_to"] = o_.n_to;
    query["r"] = q.numerator();
    query["s"] = q.denominator();
    return emit(std::move(query), to_string(resolve_alpha(o_, o_.n_to).mode()), std::move(rows), "formula");
  }

  int prob_powers() const {
    const auto nf = query_fraction(o_);
    if (o_.n == 0) throw InvalidArgument("--n must be positive");
    const auto E = ExponentSet::parse(o_.E.empty() ? "1" : o_.E);
    const auto alpha = resolve_alpha(o_, o_.n);
    const auto p = prob_in_ratio_set_powers(o_.n, nf.fraction, E, alpha);
    Json query = fraction_query(o_, nf);
    query["n"] = o_.n;
    query["E"] = E.to_string();
    query["alpha"] = o_.alpha;
    return emit(std::move(query), to_string(p.mode()), probability_record(o_.n, nf.fraction, E, alpha, p),
                to_string(p.provenance()));
  }

  int prob_any() const {
    if (o_.n == 0) throw InvalidArgument("--n must be positive");
    const auto qs = canonical_fraction_list(parse_fraction_list(o_.qs));
    const auto alpha = resolve_alpha(o_, o_.n);
    const auto p = prob_any_of(o_.n, qs, alpha);
    Json query;
    query["n"] = o_.n;
    auto list = Json::array();
    for (const auto& q : qs) list.push_back(q.to_string());
    query["fractions"] = std::move(list);
    query["alpha"] = o_.alpha;
    return emit(std::move(query), to_string(p.mode()), probability_json(p), to_string(p.provenance()));
  }

  int graph() const {
    if (o_.n == 0) throw InvalidArgument("--n must be positive");
    const auto format = parse_export_format(o_.format.empty() ? "dot" : o_.format);
    const auto g = [&] {
      if (!o_.qs.empty()) return build_union_graph(o_.n, parse_fraction_list(o_.qs));
      const auto q = query_fraction(o_).fraction;
      return o_.E.empty() ? build_graph(o_.n, q) : build_power_graph(o_.n, q, ExponentSet::parse(o_.E));
    }();
    std::cout << export_graph(g, format);
    return 0;
  }

  int hypergraph() const {
    if (o_.n == 0) throw InvalidArgument("--n must be positive");
    const auto xs = parse_direction(o_.xs);
    if (o_.alpha.empty()) {
      std::cout << export_hypergraph_json(build_hypergraph(o_.n, xs));
      return 0;
    }
    const auto alpha = resolve_alpha(o_, o_.n);
    const auto hit = prob_direction_hit(o_.n, xs, alpha);
    Json query;
    query["n"] = o_.n;
    query["direction"] = xs.coords();
    query["evaluated_direction"] = hit.evaluated.coords();
    query["reduced_to_primitive"] = hit.reduced;
    query["alpha"] = o_.alpha;
    return emit(std::move(query), to_string(hit.probability.mode()), probability_json(hit.probability),
                to_string(hit.probability.provenance()));
  }

  int delta() const {
    if (o_.s < 2) throw InvalidArgument("--s must be at least 2");
    const auto alpha = AlphaParam::parse(o_.alpha.empty() ? throw InvalidArgument("--alpha is required") : o_.alpha);
    const auto d = delta_series(o_.s, alpha, o_.tol);
    Json query;
    query["s"] = o_.s;
    query["alpha"] = o_.alpha;
    query["rel_tol"] = o_.tol;
    Json result = delta_json(d);
    result["roots"] = roots_json(char_roots(alpha.value()));
    return emit(std::move(query), "float", std::move(result), "formula");
  }

  int alternating() const {
    if (o_.alpha.empty()) throw InvalidArgument("--alpha is required");
    const auto alpha = AlphaParam::parse(o_.alpha);
    if (!alpha.is_exact()) throw InvalidArgument("the alternating check runs in exact arithmetic; pass alpha as p/q");
    const auto check = check_alternating(alpha, o_.i_max);
    if (o_.format == "csv") {
      std::cout << "i,gamma_i,gamma_i_pow_signed\n";
      for (std::size_t i = 1; i <= o_.i_max; ++i)
        std::cout << i << "," << to_string(gamma(i, alpha.rational())) << "," << Json(check.values[i - 1]).dump()
                  << "\n";
      return check.passed() ? 0 : 1;
    }
    Json query;
    query["alpha"] = o_.alpha;
    query["i_max"] = o_.i_max;
    Json result;
    result["strictly_decreasing"] = check.strictly_decreasing;
    result["above_one"] = check.above_one;
    result["tends_to_one"] = check.tends_to_one;
    result["passed"] = check.passed();
    result["values"] = check.values;
    emit(std::move(query), "exact", std::move(result), "formula");
    return check.passed() ? 0 : 1;
  }

  int cardinality() const {
    if (o_.alpha.empty()) throw InvalidArgument("--alpha is required");
    const auto alpha = AlphaParam::parse(o_.alpha);
    Json query;
    query["alpha"] = o_.alpha;
    Json result;
    result["constant"] = cardinality_constant(alpha.value());
    result["dilog_1_minus_alpha_sq"] = dilog(1.0 - alpha.value() * alpha.value());
    if (o_.n) {
      query["n"] = o_.n;
      query["trials"] = o_.trials;
      query["seed"] = o_.seed;
      McConfig cfg{o_.trials, o_.seed, o_.z, o_.threads, result["constant"].get<double>()};
      result["simulation"] = estimate_json(mc_estimate(CardinalityQuery{o_.n}, alpha.value(), cfg));
      return emit(std::move(query), "float", std::move(result), "monte-carlo");
    }
    return emit(std::move(query), "float", std::move(result), "formula");
  }

  int mc() const {
    if (o_.n == 0) throw InvalidArgument("--n must be positive");
    if (o_.alpha.empty()) throw InvalidArgument("--alpha is required");
    const auto alpha = AlphaParam::parse(o_.alpha);
    Json query;
    query["event"] = o_.event;
    query["n"] = o_.n;
    query["alpha"] = o_.alpha;
    query["trials"] = o_.trials;
    query["seed"] = o_.seed;
    query["z"] = o_.z;
    std::optional<McEvent> event;
    if (o_.event == "membership") {
      const auto q = query_fraction(o_).fraction;
      query["q"] = q.to_string();
      event = MembershipQuery{o_.n, q};
    } else if (o_.event == "powers") {
      const auto q = query_fraction(o_).fraction;
      const auto E = ExponentSet::parse(o_.E.empty() ? "1" : o_.E);
      query["q"] = q.to_string();
      query["E"] = E.to_string();
      event = PowersQuery{o_.n, q, E};
    } else if (o_.event == "any-of") {
      const auto qs = canonical_fraction_list(parse_fraction_list(o_.qs));
      auto list = Json::array();
      for (const auto& q : qs) list.push_back(q.to_string());
      query["fractions"] = std::move(list);
      event = AnyOfQuery{o_.n, qs};
    } else if (o_.event == "direction-hit") {
      const auto xs = parse_direction(o_.xs);
      query["direction"] = xs.coords();
      event = DirectionQuery{o_.n, xs};
    } else if (o_.event == "cardinality") {
      event = CardinalityQuery{o_.n};
    } else {
      throw InvalidArgument("--event must be membership, powers, any-of, direction-hit or cardinality");
    }
    McConfig cfg{o_.trials, o_.seed, o_.z, o_.threads, o_.target};
    return emit(std::move(query), "float", estimate_json(mc_estimate(*event, alpha.value(), cfg)), "monte-carlo");
  }

  int selftest() const {
    const auto items = run_selftest(o_.quick);
    bool ok = true;
    for (const auto& item : items) {
      std::cout << (item.passed ? "PASS " : "FAIL ") << item.name;
      if (!item.passed) std::cout << " -- " << item.detail;
      std::cout << "\n";
      ok = ok && item.passed;
    }
    std::cout << (ok ? "selftest: all passed" : "selftest: FAILURES") << "\n";
    return ok ? 0 : 1;
  }

 private:
  const Options& o_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and simulated probabilities for random ratio sets A/A"};
  app.require_subcommand(1);
  Options o;

  auto add_alpha = [&](CLI::App* c) {
    c->add_option("--alpha", o.alpha, "selection probability, p/q (exact) or decimal (float)");
    c->add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  };
  auto add_fraction = [&](CLI::App* c) {
    c->add_option("--r", o.r, "numerator");
    c->add_option("--s", o.s, "denominator");
  };
  auto add_timing = [&](CLI::App* c) { c->add_flag("--no-timing", o.no_timing, "omit timing_ms from the output"); };

  auto* prob = app.add_subcommand("prob", "P(r/s in A/A)");
  prob->add_option("--n", o.n, "size of the ground set {1..n}");
  prob->add_option("--n-from", o.n_from, "sweep start");
  prob->add_option("--n-to", o.n_to, "sweep end");
  prob->add_option("--format", o.format, "json or csv (sweeps)");
  add_fraction(prob);
  add_alpha(prob);
  add_timing(prob);

  auto* powers = app.add_subcommand("prob-powers", "P(some (r/s)^e in A/A, e in E)");
  powers->add_option("--n", o.n)->required();
  powers->add_option("--E", o.E, "exponent set: 1,2,5 | all | all-except:2,4");
  add_fraction(powers);
  add_alpha(powers);
  add_timing(powers);

  auto* any = app.add_subcommand("prob-any", "P(some q_i in A/A)");
  any->add_option("--n", o.n)->required();
  any->add_option("--q", o.qs, "comma-separated fractions, e.g. 2/3,3/4")->required();
  add_alpha(any);
  add_timing(any);

  auto* graph = app.add_subcommand("graph", "export G(n;r,s), a power graph (--E) or a union graph (--q)");
  graph->add_option("--n", o.n)->required();
  graph->add_option("--E", o.E);
  graph->add_option("--q", o.qs);
  graph->add_option("--format", o.format, "dot or json");
  add_fraction(graph);

  auto* hyper = app.add_subcommand("hypergraph", "export H(n;x) or, with --alpha, P(direction hit)");
  hyper->add_option("--n", o.n)->required();
  hyper->add_option("--x", o.xs, "comma-separated direction, e.g. 2,3,4")->required();
  add_alpha(hyper);
  add_timing(hyper);

  auto* delta = app.add_subcommand("delta", "the decay rate delta(s)");
  delta->add_option("--s", o.s)->required();
  delta->add_option("--alpha", o.alpha)->required();
  delta->add_option("--tol", o.tol, "relative tolerance");
  add_timing(delta);

  auto* alt = app.add_subcommand("alternating", "check gamma_i^{(-1)^i} decreases to 1");
  alt->add_option("--alpha", o.alpha)->required();
  alt->add_option("--i-max", o.i_max);
  alt->add_option("--format", o.format, "json or csv");
  add_timing(alt);

  auto* card = app.add_subcommand("cardinality", "limit of |A/A|/n^2; with --n also simulate");
  card->add_option("--alpha", o.alpha)->required();
  card->add_option("--n", o.n);
  card->add_option("--trials", o.trials);
  card->add_option("--seed", o.seed);
  card->add_option("--z", o.z);
  card->add_option("--threads", o.threads);
  add_timing(card);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of an event");
  mc->add_option("--event", o.event, "membership | powers | any-of | direction-hit | cardinality")->required();
  mc->add_option("--n", o.n)->required();
  mc->add_option("--E", o.E);
  mc->add_option("--q", o.qs);
  mc->add_option("--x", o.xs);
  mc->add_option("--trials", o.trials);
  mc->add_option("--seed", o.seed);
  mc->add_option("--z", o.z, "normal quantile for the interval");
  mc->add_option("--threads", o.threads);
  mc->add_option("--target", o.target);
  mc->add_option("--alpha", o.alpha)->required();
  add_fraction(mc);
  add_timing(mc);

  auto* self = app.add_subcommand("selftest", "run the invariant suite");
  self->add_flag("--quick", o.quick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  const Runner run(o);
  try {
    if (*prob) return run.prob();
    if (*powers) return run.prob_powers();
    if (*any) return run.prob_any();
    if (*graph) return run.graph();
    if (*hyper) return run.hypergraph();
    if (*delta) return run.delta();
    if (*alt) return run.alternating();
    if (*card) return run.cardinality();
    if (*mc) return run.mc();
    if (*self) return run.selftest();
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  }
  return kExitInvalid;
}
