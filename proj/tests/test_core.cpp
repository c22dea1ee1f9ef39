#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <vector>

#include "swarmnet/geometry.hpp"
#include "swarmnet/rng.hpp"
#include "swarmnet/stats.hpp"
#include "swarmnet/types.hpp"

using namespace swarmnet;

namespace {
constexpr std::uint64_t kSeed = 20240817;
}

TEST_CASE("identical (seed, stream id) replays the same sequence") {
  RngStream a = derive_stream(42, {"iter", 0});
  RngStream b = derive_stream(42, {"iter", 0});
  for (int i = 0; i < 256; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("sibling and cross-seed streams diverge") {
  auto first_draws = [](RngStream s) {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < 64; ++i) out.push_back(s.next_u64());
    return out;
  };
  const auto base = first_draws(derive_stream(42, {"iter", 0}));
  REQUIRE(base != first_draws(derive_stream(42, {"iter", 1})));
  REQUIRE(base != first_draws(derive_stream(43, {"iter", 0})));
  REQUIRE(base != first_draws(derive_stream(42, {"other", 0})));
}

TEST_CASE("label types are distinguished") {
  RngStream text = derive_stream(7, {"1"});
  RngStream number = derive_stream(7, {1});
  REQUIRE(text.stream_id() != number.stream_id());
}

TEST_CASE("unit draws stay in (0,1]") {
  RngStream s = derive_stream(kSeed, {"unit"});
  for (int i = 0; i < 100000; ++i) {
    const double u = s.next_unit();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
  }
}

TEST_CASE("exponential sampler matches its mean at a million draws") {
  RngStream s = derive_stream(kSeed, {"exp-mean"});
  const int n = 1000000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += sample_exponential(s, 1.0);
  const double mean = acc / n;
  REQUIRE(mean > 0.997);
  REQUIRE(mean < 1.003);
}

TEST_CASE("exponential of a degenerate unit draw is zero") {
  REQUIRE(exponential_from_unit(1.0, 1.0) == 0.0);
  REQUIRE(exponential_from_unit(1.0, 123.0) == 0.0);
}

TEST_CASE("exponential variance equals mean squared") {
  RngStream s = derive_stream(kSeed, {"exp-var"});
  const int n = 1000000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = sample_exponential(s, 0.5);
  const double m = mean_of(xs);
  double var = 0.0;
  for (double x : xs) var += (x - m) * (x - m);
  var /= (n - 1);
  REQUIRE(var > 0.2475);
  REQUIRE(var < 0.2525);
}

TEST_CASE("samplers reject non-positive means") {
  RngStream s = derive_stream(kSeed, {"bad"});
  REQUIRE_THROWS_AS(sample_exponential(s, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(sample_exponential(s, -1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(sample_poisson(s, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(sample_poisson(s, -2.0), std::invalid_argument);
}

TEST_CASE("poisson sampler matches mean and zero mass") {
  RngStream s = derive_stream(kSeed, {"poisson"});
  const int n = 1000000;
  long long acc = 0;
  int zeros = 0;
  for (int i = 0; i < n; ++i) {
    const int k = sample_poisson(s, 5.0);
    acc += k;
    if (k == 0) ++zeros;
  }
  const double mean = static_cast<double>(acc) / n;
  REQUIRE(mean > 4.99);
  REQUIRE(mean < 5.01);
  const double zero_frac = static_cast<double>(zeros) / n;
  REQUIRE(zero_frac == Catch::Approx(std::exp(-5.0)).margin(0.0005));
}

TEST_CASE("poisson with vanishing mean draws zero") {
  RngStream s = derive_stream(kSeed, {"poisson-small"});
  REQUIRE(sample_poisson(s, 0.0001) == 0);
}

TEST_CASE("normal sampler moments") {
  RngStream s = derive_stream(kSeed, {"normal"});
  const int n = 200000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = sample_normal(s, 2.0, 0.5);
  REQUIRE(mean_of(xs) == Catch::Approx(2.0).margin(0.005));
  REQUIRE(sample_stddev(xs) == Catch::Approx(0.5).margin(0.005));
}

TEST_CASE("built-in network profiles carry the published constants") {
  const NetworkProfile g5 = profiles::five_g();
  REQUIRE(g5.base_latency_ms == 1.0);
  REQUIRE(g5.reliability == 0.99999);
  REQUIRE(g5.base_collision_rate == 0.02);
  const NetworkProfile g6 = profiles::six_g();
  REQUIRE(g6.base_latency_ms == 0.5);
  REQUIRE(g6.reliability == 0.99999999);
  REQUIRE(g6.base_collision_rate == 0.001);
  REQUIRE_NOTHROW(validate_profile(g5));
  REQUIRE_NOTHROW(validate_profile(g6));
}

TEST_CASE("swarm config guards its bounds") {
  SwarmConfig c;
  REQUIRE_NOTHROW(validate_swarm(c));
  c.n_drones = 0;
  REQUIRE_THROWS_AS(validate_swarm(c), std::invalid_argument);
  c.n_drones = 80;  // beyond max_swarm
  REQUIRE_THROWS_AS(validate_swarm(c), std::invalid_argument);
  c.allow_extrapolation = true;
  REQUIRE_NOTHROW(validate_swarm(c));
}

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

namespace {

Polygon square(double side) {
  return Polygon{{{0, 0}, {side, 0}, {side, side}, {0, side}}};
}

}  // namespace

TEST_CASE("polygon validity") {
  std::string why;
  REQUIRE(is_valid_polygon(square(100)));
  REQUIRE_FALSE(is_valid_polygon(Polygon{{{0, 0}, {1, 1}}}, &why));
  REQUIRE(why == "fewer than 3 vertices");
  REQUIRE_FALSE(is_valid_polygon(Polygon{{{0, 0}, {1, 1}, {2, 2}}}, &why));  // collinear
  Polygon bowtie{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
  REQUIRE_FALSE(is_valid_polygon(bowtie, &why));
  REQUIRE(why == "self-intersecting boundary");
}

TEST_CASE("area and centroid of a square") {
  const Polygon p = square(100);
  REQUIRE(polygon_area(p) == Catch::Approx(10000.0));
  const GeoPoint c = polygon_centroid(p);
  REQUIRE(c.x_m == Catch::Approx(50.0));
  REQUIRE(c.y_m == Catch::Approx(50.0));
}

TEST_CASE("point-in-polygon even-odd") {
  const Polygon p = square(10);
  REQUIRE(point_in_polygon({5, 5}, p));
  REQUIRE_FALSE(point_in_polygon({15, 5}, p));
  REQUIRE_FALSE(point_in_polygon({-1, -1}, p));
}

TEST_CASE("scanline intervals clip to the polygon") {
  const Polygon p = square(10);
  auto spans = scanline_intervals(p, 5.0);
  REQUIRE(spans.size() == 1);
  REQUIRE(spans[0].first == Catch::Approx(0.0));
  REQUIRE(spans[0].second == Catch::Approx(10.0));
  REQUIRE(scanline_intervals(p, 15.0).empty());

  // Concave "U" produces two spans across the notch.
  Polygon u{{{0, 0}, {30, 0}, {30, 20}, {20, 20}, {20, 10}, {10, 10}, {10, 20}, {0, 20}}};
  auto two = scanline_intervals(u, 15.0);
  REQUIRE(two.size() == 2);
  REQUIRE(two[0].first == Catch::Approx(0.0));
  REQUIRE(two[0].second == Catch::Approx(10.0));
  REQUIRE(two[1].first == Catch::Approx(20.0));
  REQUIRE(two[1].second == Catch::Approx(30.0));
}

TEST_CASE("point-segment distance") {
  REQUIRE(point_segment_distance({5, 5}, {0, 0}, {10, 0}) == Catch::Approx(5.0));
  REQUIRE(point_segment_distance({-3, 4}, {0, 0}, {10, 0}) == Catch::Approx(5.0));
  REQUIRE(point_segment_distance({2, 0}, {2, 0}, {2, 0}) == Catch::Approx(0.0));
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

TEST_CASE("percentile interpolation") {
  std::vector<double> xs{1, 2, 3, 4, 5};
  REQUIRE(percentile_sorted(xs, 0.0) == 1.0);
  REQUIRE(percentile_sorted(xs, 1.0) == 5.0);
  REQUIRE(percentile_sorted(xs, 0.5) == 3.0);
  REQUIRE(percentile_sorted(xs, 0.25) == 2.0);
}

TEST_CASE("summary brackets the mean on skewed samples") {
  RngStream s = derive_stream(kSeed, {"summary"});
  std::vector<double> xs(5000);
  for (auto& x : xs) x = sample_exponential(s, 2.0);
  const SampleSummary sum = summarize(xs);
  REQUIRE(sum.p2_5 <= sum.mean);
  REQUIRE(sum.mean <= sum.p97_5);
  REQUIRE(sum.stddev > 0.0);
  REQUIRE(sum.n == 5000);
}

TEST_CASE("summary is order independent") {
  std::vector<double> xs{5, 1, 4, 2, 3, 9, 7};
  std::vector<double> ys{9, 7, 5, 4, 3, 2, 1};
  const SampleSummary a = summarize(xs);
  const SampleSummary b = summarize(ys);
  REQUIRE(a.mean == b.mean);
  REQUIRE(a.stddev == b.stddev);
  REQUIRE(a.p2_5 == b.p2_5);
  REQUIRE(a.p97_5 == b.p97_5);
}
