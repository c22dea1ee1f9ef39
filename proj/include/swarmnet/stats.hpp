#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace swarmnet {

inline double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean_of: empty sample");
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

// Sample standard deviation (n-1 denominator).
inline double sample_stddev(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  if (n < 2) throw std::invalid_argument("sample_stddev: need at least 2 samples");
  const double m = mean_of(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(n - 1));
}

// Linear-interpolation percentile of a sorted sample, p in [0,1].
inline double percentile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("percentile_sorted: empty sample");
  if (p <= 0.0) return sorted.front();
  if (p >= 1.0) return sorted.back();
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

struct SampleSummary {
  double mean = 0.0;
  double stddev = 0.0;
  double p2_5 = 0.0;
  double p97_5 = 0.0;
  int n = 0;
};

// Empirical 95% band (2.5th/97.5th percentiles); samples are sorted
// internally, so aggregation order never affects the result.
inline SampleSummary summarize(std::vector<double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("summarize: need at least 2 samples");
  SampleSummary s;
  s.n = static_cast<int>(xs.size());
  s.mean = mean_of(xs);
  s.stddev = sample_stddev(xs);
  std::sort(xs.begin(), xs.end());
  s.p2_5 = percentile_sorted(xs, 0.025);
  s.p97_5 = percentile_sorted(xs, 0.975);
  return s;
}

}  // namespace swarmnet
