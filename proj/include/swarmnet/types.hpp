#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swarmnet {

enum class Network { FiveG, SixG };

inline std::string network_label(Network n) { return n == Network::FiveG ? "5G" : "6G"; }

inline Network parse_network(std::string_view s) {
  if (s == "5g" || s == "5G") return Network::FiveG;
  if (s == "6g" || s == "6G") return Network::SixG;
  throw std::invalid_argument("unknown network '" + std::string(s) + "'; expected 5g or 6g");
}

/// Link-level model of one network generation.
struct NetworkProfile {
  Network name = Network::FiveG;
  double base_latency_ms = 1.0;      // L_b
  double reliability = 0.99999;      // successful-delivery probability
  double base_collision_rate = 0.02; // per reference swarm, as a fraction

  friend bool operator==(const NetworkProfile&, const NetworkProfile&) = default;
};

namespace profiles {

inline NetworkProfile five_g() { return {Network::FiveG, 1.0, 0.99999, 0.02}; }
inline NetworkProfile six_g() { return {Network::SixG, 0.5, 0.99999999, 0.001}; }

inline NetworkProfile by_name(Network n) { return n == Network::FiveG ? five_g() : six_g(); }

}  // namespace profiles

inline void validate_profile(const NetworkProfile& p) {
  if (!(p.base_latency_ms > 0.0))
    throw std::invalid_argument("network profile: base_latency_ms must be > 0");
  if (!(p.reliability > 0.0 && p.reliability < 1.0))
    throw std::invalid_argument("network profile: reliability must be in (0,1)");
  if (!(p.base_collision_rate >= 0.0 && p.base_collision_rate < 1.0))
    throw std::invalid_argument("network profile: base_collision_rate must be in [0,1)");
}

/// Swarm sizing and fault-arrival parameters.
struct SwarmConfig {
  int n_drones = 10;
  int reference_size = 10;      // n_0 in the collision model
  int max_swarm = 50;           // n_max in the congestion factor
  double fault_rate_mean = 5.0; // Poisson mean per simulation period
  bool allow_extrapolation = false;

  friend bool operator==(const SwarmConfig&, const SwarmConfig&) = default;
};

inline void validate_swarm(const SwarmConfig& c) {
  if (c.n_drones < 1) throw std::invalid_argument("swarm: n_drones must be >= 1");
  if (c.reference_size < 1) throw std::invalid_argument("swarm: reference_size must be >= 1");
  if (c.max_swarm < 1) throw std::invalid_argument("swarm: max_swarm must be >= 1");
  if (c.max_swarm < c.n_drones && !c.allow_extrapolation)
    throw std::invalid_argument(
        "swarm: max_swarm < n_drones; set allow_extrapolation to run beyond the design size");
  if (!(c.fault_rate_mean > 0.0)) throw std::invalid_argument("swarm: fault_rate_mean must be > 0");
}

}  // namespace swarmnet
