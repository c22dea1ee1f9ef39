#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace swarmnet {

namespace detail {

// SplitMix64 finalizer. All arithmetic is on fixed-width unsigned
// integers, so sequences are identical on every platform.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x00000100000001b3ULL;

inline std::uint64_t fnv1a_byte(std::uint64_t h, std::uint8_t b) {
  return (h ^ b) * kFnvPrime;
}

inline std::uint64_t fnv1a_u64(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) h = fnv1a_byte(h, static_cast<std::uint8_t>(v >> (8 * i)));
  return h;
}

inline std::uint64_t fnv1a_bytes(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) h = fnv1a_byte(h, c);
  return fnv1a_u64(h, s.size());
}

}  // namespace detail

/// Counter-based uniform stream. A stream is a pure function of
/// (master_seed, stream_id, draw index): copies replay identically,
/// and distinct streams never interfere regardless of draw order.
class RngStream {
 public:
  RngStream() = default;
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_seed_(master_seed),
        stream_id_(stream_id),
        key_(detail::mix64(master_seed ^ detail::mix64(stream_id))) {}

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() {
    ++counter_;
    return detail::mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  // Uniform in (0,1]; never returns 0, so log() of a draw is finite.
  double next_unit() {
    const std::uint64_t bits = next_u64() >> 11;  // top 53 bits
    return static_cast<double>(bits + 1) * (1.0 / 9007199254740992.0);
  }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * (1.0 - next_unit()); }

 private:
  std::uint64_t master_seed_ = 0;
  std::uint64_t stream_id_ = 0;
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

/// Label element for substream derivation: either an integer or a name.
struct StreamLabel {
  StreamLabel(std::uint64_t v) : is_text(false), number(v) {}
  StreamLabel(int v) : is_text(false), number(static_cast<std::uint64_t>(v)) {}
  StreamLabel(const char* s) : is_text(true), text(s) {}
  StreamLabel(std::string_view s) : is_text(true), text(s) {}

  bool is_text;
  std::uint64_t number = 0;
  std::string text;
};

/// Derives an independent substream from a label path, e.g.
/// derive_stream(seed, {"iter", i}). Stable across runs and platforms;
/// derivation order does not matter.
inline RngStream derive_stream(std::uint64_t master_seed, std::initializer_list<StreamLabel> labels) {
  std::uint64_t h = detail::kFnvOffset;
  for (const auto& label : labels) {
    if (label.is_text) {
      h = detail::fnv1a_byte(h, 0x01);
      h = detail::fnv1a_bytes(h, label.text);
    } else {
      h = detail::fnv1a_byte(h, 0x02);
      h = detail::fnv1a_u64(h, label.number);
    }
  }
  return RngStream(master_seed, detail::mix64(h));
}

/// Collapses a label path into a fresh master seed (for nested runs).
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::initializer_list<StreamLabel> labels) {
  RngStream s = derive_stream(master_seed, labels);
  return detail::mix64(s.master_seed() ^ detail::mix64(s.stream_id() + 0x632be59bd9b4e019ULL));
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

// Inverse-CDF transform; split out so degenerate u values can be tested.
inline double exponential_from_unit(double u, double mean) {
  return -mean * std::log(u);
}

inline double sample_exponential(RngStream& stream, double mean) {
  if (!(mean > 0.0)) throw std::invalid_argument("sample_exponential: mean must be > 0");
  return exponential_from_unit(stream.next_unit(), mean);
}

// Arrival counting in log space: count unit-exponential arrivals until
// their sum exceeds the mean. Stable for any mean, O(mean) per draw.
inline int sample_poisson(RngStream& stream, double mean) {
  if (!(mean > 0.0)) throw std::invalid_argument("sample_poisson: mean must be > 0");
  int count = 0;
  double acc = exponential_from_unit(stream.next_unit(), 1.0);
  while (acc <= mean) {
    ++count;
    acc += exponential_from_unit(stream.next_unit(), 1.0);
  }
  return count;
}

// Box-Muller; consumes exactly two uniforms per draw.
inline double sample_normal(RngStream& stream, double mean, double stddev) {
  if (stddev < 0.0) throw std::invalid_argument("sample_normal: stddev must be >= 0");
  const double u1 = stream.next_unit();
  const double u2 = stream.next_unit();
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  return mean + stddev * z;
}

}  // namespace swarmnet
