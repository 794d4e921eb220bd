#include "doctest.h"

#include <numeric>
#include <set>

#include "ratioset/errors.hpp"
#include "ratioset/exact_prob.hpp"
#include "ratioset/hypergraph.hpp"
#include "ratioset/independence.hpp"
#include "ratioset/monte_carlo.hpp"
#include "ratioset/ratio_graph.hpp"

using namespace ratioset;

TEST_CASE("build_hypergraph: examples") {
  const auto h = build_hypergraph(28, DirectionVector({2, 3, 4}));
  CHECK(h.hyperedges.size() == 7);
  CHECK(h.hyperedges[0] == std::vector<std::uint64_t>{2, 3, 4});
  CHECK(build_hypergraph(5, DirectionVector({3, 7})).hyperedges.empty());
  const auto h2 = build_hypergraph(30, DirectionVector({2, 3}));
  const auto g = build_graph(30, ReducedFraction(2, 3));
  REQUIRE(h2.hyperedges.size() == g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    CHECK(h2.hyperedges[k] == std::vector<std::uint64_t>{g.edges[k].first, g.edges[k].second});
  CHECK(build_hypergraph(20, DirectionVector({2, 2, 5})).hyperedges[0] == std::vector<std::uint64_t>{2, 5});
  for (std::uint64_t n = 1; n <= 60; n += 7) CHECK(build_hypergraph(n, DirectionVector({3, 5, 4})).hyperedges.size() == n / 5);
}

TEST_CASE("direction vectors") {
  CHECK_THROWS_AS(DirectionVector({3}), InvalidArgument);
  CHECK_THROWS_AS(DirectionVector({0, 3}), InvalidArgument);
  const DirectionVector v({4, 6, 8});
  CHECK(v.gcd() == 2);
  CHECK_FALSE(v.is_primitive());
  CHECK(v.primitive().coords() == std::vector<std::uint64_t>{2, 3, 4});
}

TEST_CASE("prob_direction_hit: d = 2 collapse") {
  const auto alpha = AlphaParam::exact(1, 2);
  for (std::uint64_t n = 1; n <= 100; n += 9)
    for (std::uint64_t s = 2; s <= 7; ++s)
      for (std::uint64_t r = 1; r < s; ++r) {
        if (std::gcd(r, s) != 1) continue;
        const auto hit = prob_direction_hit(n, DirectionVector({r, s}), alpha);
        CHECK(hit.probability.exact_value() == prob_in_ratio_set(n, ReducedFraction(r, s), alpha).exact_value());
        CHECK_FALSE(hit.reduced);
      }
}

TEST_CASE("prob_direction_hit: examples") {
  const auto half = AlphaParam::exact(1, 2);
  const auto hit = prob_direction_hit(28, DirectionVector({2, 3, 4}), half);
  CHECK(hit.probability.exact_value() == prob_bruteforce(direction_event(28, {2, 3, 4}), half).exact_value());
  CHECK(prob_direction_hit(5, DirectionVector({3, 7}), half).probability.exact_value() == 0);
  const auto reduced = prob_direction_hit(28, DirectionVector({4, 6, 8}), half);
  CHECK(reduced.reduced);
  CHECK(reduced.evaluated.coords() == std::vector<std::uint64_t>{2, 3, 4});
  CHECK(reduced.probability.exact_value() == hit.probability.exact_value());
  const auto f = prob_direction_hit(28, DirectionVector({2, 3, 4}), half.as_floating());
  CHECK(f.probability.value() == doctest::Approx(hit.probability.exact_value().get_d()).epsilon(1e-13));
}

TEST_CASE("prob_direction_hit: monotone in n and alpha") {
  const DirectionVector xs({2, 3, 5});
  Rational prev = 0;
  for (std::uint64_t n = 1; n <= 120; ++n) {
    const auto p = prob_direction_hit(n, xs, AlphaParam::exact(1, 2)).probability.exact_value();
    CHECK(p >= prev);
    prev = p;
  }
  prev = 0;
  for (int k = 1; k <= 9; ++k) {
    const auto p = prob_direction_hit(90, xs, AlphaParam::exact(k, 10)).probability.exact_value();
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("hyper_components omit isolated vertices and are vertex-disjoint") {
  const auto h = build_hypergraph(40, DirectionVector({2, 3, 4}));
  std::set<std::uint64_t> seen;
  std::size_t edges = 0;
  for (const auto& c : hyper_components(h)) {
    CHECK(c.vertices.size() >= 2);
    for (auto v : c.vertices) CHECK(seen.insert(v).second);
    edges += c.hyperedges.size();
  }
  CHECK(edges == h.hyperedges.size());
}

TEST_CASE("is_visible") {
  CHECK(is_visible(DirectionVector({2, 3}), {2, 3}));
  CHECK_FALSE(is_visible(DirectionVector({4, 6}), {2, 3, 4, 6}));
  CHECK(is_visible(DirectionVector({4, 6}), {4, 6, 5}));
  CHECK_FALSE(is_visible(DirectionVector({2, 3}), {2}));
}

TEST_CASE("visible points biject with the ratio set (d = 2)") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto A = sample_set(60, 0.3, 99, trial);
    const auto members = A.members();
    const std::set<std::uint64_t> set(members.begin(), members.end());
    std::set<std::pair<std::uint64_t, std::uint64_t>> from_visible, from_ratios;
    for (auto a : members)
      for (auto b : members) {
        const auto g = std::gcd(a, b);
        from_ratios.insert({a / g, b / g});
        if (is_visible(DirectionVector({a, b}), set)) from_visible.insert({a / g, b / g});
      }
    CHECK(from_visible == from_ratios);
  }
}

TEST_CASE("export_hypergraph_json") {
  const auto text = export_hypergraph_json(build_hypergraph(12, DirectionVector({2, 3, 4})));
  CHECK(text.find("[2,3,4]") != std::string::npos);
  CHECK(text.find("[4,6,8]") != std::string::npos);
}

TEST_CASE("independence DP matches enumeration") {
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  const Rational a = make_rational(2, 5);
  for (int round = 0; round < 40; ++round) {
    const std::size_t vertices = 4 + next() % 18;
    std::vector<std::uint64_t> constraints;
    const std::size_t count = 1 + next() % 20;
    for (std::size_t k = 0; k < count; ++k) {
      std::uint64_t mask = 0;
      const std::size_t size = 1 + next() % 3;
      for (std::size_t j = 0; j < size; ++j) mask |= std::uint64_t{1} << (next() % vertices);
      constraints.push_back(mask);
    }
    const auto dp = no_constraint_selected(constraints, vertices, a);
    CHECK(dp == no_constraint_selected_enumerated(constraints, vertices, a));
    CHECK(no_constraint_selected(constraints, vertices, a.get_d()) == doctest::Approx(dp.get_d()).epsilon(1e-12));
  }
  std::vector<std::uint64_t> too_big{1};
  CHECK_THROWS_AS(no_constraint_selected_enumerated(too_big, 26, a), CapabilityError);
}
