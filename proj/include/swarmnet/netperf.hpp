#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "swarmnet/rng.hpp"
#include "swarmnet/stats.hpp"
#include "swarmnet/types.hpp"

namespace swarmnet {

enum class Metric { CollisionRatePct, DetectionTimeMs };

/// Per-configuration Monte Carlo aggregate. The confidence band is
/// empirical (2.5th/97.5th percentiles of the per-iteration samples).
struct TrialStats {
  Metric metric = Metric::CollisionRatePct;
  double mean = 0.0;
  double std = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  int n_iterations = 0;
};

/// Two collision-rate conventions:
///  - TableCalibrated: CR% = 100 * alpha * n / n_0, the percentage scale
///    the reference results are reported on. Default.
///  - LiteralFormula: P_c = alpha * (n/n_0) * (1 - R), a fraction. The
///    (1-R) factor puts this 5-7 orders of magnitude below the
///    calibrated scale; both are kept so the discrepancy stays visible.
enum class PerfMode { TableCalibrated, LiteralFormula };

struct PerfScenario {
  NetworkProfile profile;
  SwarmConfig swarm;
  int iterations = 100;
  double cr_noise_coeff = 0.04;  // sigma = c * sqrt(CR%) around the calibrated value
  PerfMode mode = PerfMode::TableCalibrated;
};

inline double collision_prob(const NetworkProfile& profile, const SwarmConfig& swarm,
                             PerfMode mode, bool* saturated = nullptr) {
  if (swarm.n_drones < 1) throw std::invalid_argument("collision_prob: n_drones must be >= 1");
  if (saturated) *saturated = false;
  const double scale = static_cast<double>(swarm.n_drones) / static_cast<double>(swarm.reference_size);
  if (mode == PerfMode::LiteralFormula)
    return profile.base_collision_rate * scale * (1.0 - profile.reliability);
  double pct = 100.0 * profile.base_collision_rate * scale;
  if (pct > 100.0) {
    if (saturated) *saturated = true;
    pct = 100.0;
  }
  return pct;
}

/// One detection-time draw: T_d = L_b * (1 + n/n_max) + eps,
/// eps ~ Exponential(mean = L_b). Always exceeds the congestion term.
inline double sample_detection_time(const NetworkProfile& profile, const SwarmConfig& swarm,
                                    RngStream& stream) {
  if (swarm.max_swarm < 1) throw std::invalid_argument("sample_detection_time: max_swarm must be >= 1");
  const double congestion =
      1.0 + static_cast<double>(swarm.n_drones) / static_cast<double>(swarm.max_swarm);
  return profile.base_latency_ms * congestion + sample_exponential(stream, profile.base_latency_ms);
}

// Deterministic part plus the exponential tail's mean.
inline double expected_detection_time(const NetworkProfile& profile, const SwarmConfig& swarm) {
  const double congestion =
      1.0 + static_cast<double>(swarm.n_drones) / static_cast<double>(swarm.max_swarm);
  return profile.base_latency_ms * congestion + profile.base_latency_ms;
}

struct IterationSample {
  double cr = 0.0;                     // percent (calibrated) or fraction (literal)
  std::optional<double> dt_mean_ms;    // absent when the period had no faults
  int n_faults = 0;
};

/// One simulated period: Poisson fault count, per-fault detection
/// times, and a noisy collision-rate observation. Draw order is fixed,
/// so a given stream always reproduces the same sample.
inline IterationSample run_iteration(const PerfScenario& scenario, RngStream& stream) {
  IterationSample out;
  out.n_faults = sample_poisson(stream, scenario.swarm.fault_rate_mean);
  if (out.n_faults > 0) {
    double acc = 0.0;
    for (int f = 0; f < out.n_faults; ++f)
      acc += sample_detection_time(scenario.profile, scenario.swarm, stream);
    out.dt_mean_ms = acc / out.n_faults;
  }
  const double center = collision_prob(scenario.profile, scenario.swarm, scenario.mode);
  if (scenario.mode == PerfMode::TableCalibrated && scenario.cr_noise_coeff > 0.0) {
    const double sigma = scenario.cr_noise_coeff * std::sqrt(center);
    out.cr = std::max(0.0, sample_normal(stream, center, sigma));
  } else {
    out.cr = center;
  }
  return out;
}

struct ScenarioResult {
  TrialStats collision;
  std::optional<TrialStats> detection;  // absent when < 2 iterations saw a fault
};

namespace detail {

inline TrialStats to_trial_stats(Metric metric, std::vector<double> samples) {
  const SampleSummary s = summarize(std::move(samples));
  return {metric, s.mean, s.stddev, s.p2_5, s.p97_5, s.n};
}

}  // namespace detail

/// Runs `scenario.iterations` independent periods. Iteration i draws
/// from derive_stream(master_seed, {"iter", i}), so results are
/// identical for any thread count. threads: 0 = auto, 1 = serial.
inline ScenarioResult run_scenario(const PerfScenario& scenario, std::uint64_t master_seed,
                                   unsigned threads = 0) {
  validate_profile(scenario.profile);
  validate_swarm(scenario.swarm);
  if (scenario.iterations < 2) throw std::invalid_argument("run_scenario: iterations must be >= 2");

  const int n = scenario.iterations;
  std::vector<IterationSample> samples(static_cast<std::size_t>(n));
  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      RngStream stream = derive_stream(master_seed, {"iter", i});
      samples[static_cast<std::size_t>(i)] = run_iteration(scenario, stream);
    }
  };

  if (threads == 0) threads = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  if (threads <= 1 || n < 256) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (n + static_cast<int>(threads) - 1) / static_cast<int>(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const int begin = static_cast<int>(t) * chunk;
      const int end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<double> cr;
  std::vector<double> dt;
  cr.reserve(samples.size());
  for (const auto& s : samples) {
    cr.push_back(s.cr);
    if (s.dt_mean_ms) dt.push_back(*s.dt_mean_ms);
  }
  ScenarioResult result;
  result.collision = detail::to_trial_stats(Metric::CollisionRatePct, std::move(cr));
  if (dt.size() >= 2)
    result.detection = detail::to_trial_stats(Metric::DetectionTimeMs, std::move(dt));
  return result;
}

struct Table1Row {
  int n_drones = 0;
  Network network = Network::FiveG;
  TrialStats cr;
  std::optional<TrialStats> dt;
};

/// The full 5G-vs-6G comparison: swarm sizes {10,20,30,40,50} on both
/// networks, 100 iterations each, Poisson(5) faults per period.
inline std::vector<Table1Row> table1_report(std::uint64_t seed, int iterations = 100,
                                            unsigned threads = 0) {
  std::vector<Table1Row> rows;
  for (int n : {10, 20, 30, 40, 50}) {
    for (Network net : {Network::FiveG, Network::SixG}) {
      PerfScenario scenario;
      scenario.profile = profiles::by_name(net);
      scenario.swarm.n_drones = n;
      scenario.iterations = iterations;
      const std::uint64_t sub_seed = derive_seed(seed, {"table1", n, network_label(net)});
      ScenarioResult res = run_scenario(scenario, sub_seed, threads);
      rows.push_back({n, net, res.collision, res.detection});
    }
  }
  return rows;
}

}  // namespace swarmnet
