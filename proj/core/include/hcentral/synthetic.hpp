#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hcentral/citation_distribution.hpp"
#include "hcentral/types.hpp"

namespace hcentral {

/// Deterministic generator built on std::mt19937_64, whose output sequence
/// the standard pins down exactly. Value mapping is done here rather than
/// through std distributions (which vary across standard libraries), so a
/// seed fully determines every synthetic dataset on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1): top 53 bits of the next engine output.
  double unit();

  /// Uniform integer on [lo, hi] inclusive via rejection sampling;
  /// requires lo <= hi (std::invalid_argument otherwise).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class SyntheticProfile { selective, producer, power_law };

SyntheticProfile parse_synthetic_profile(const std::string& name);
std::string to_string(SyntheticProfile profile);

struct SyntheticOptions {
  int h_target = 10;      ///< >= 2 (no central radius exists below h = 2)
  int amplitude = 2;      ///< >= 1; citation multiplier (selective) or paper multiplier (producer)
  double exponent = 1.0;  ///< > 0; power-law decay rate
};

/// Few heavily cited papers: h_target papers with amplitude * h_target
/// citations each. h = h_target exactly.
CitationDistribution generate_selective(const SyntheticOptions& options);

/// Many modestly cited papers: amplitude * h_target papers with h_target
/// citations each. h = h_target exactly; total citations match
/// generate_selective for the same options.
CitationDistribution generate_producer(const SyntheticOptions& options);

/// Ranked power-law decay c_i = floor(C * i^-exponent). The scale C and
/// paper count are drawn from rng within ranges where the decay keeps
/// c_h >= h; the count at rank h_target + 1 is then capped below h_target
/// (and the count at rank h_target raised to it, should the draw ever
/// undershoot), so h = h_target always.
CitationDistribution generate_power_law(const SyntheticOptions& options, Rng& rng);

CitationDistribution generate(SyntheticProfile profile, const SyntheticOptions& options, Rng& rng);
CitationDistribution generate(SyntheticProfile profile, const SyntheticOptions& options,
                              std::uint64_t seed);

/// (selective, producer) with the same h_target and amplitude: equal h by
/// construction, and the selective member's central area index strictly
/// dominates at every shared radius when amplitude >= 2 (enforced here).
/// The seed is accepted for interface stability; the constant profiles do
/// not consume randomness.
std::pair<CitationDistribution, CitationDistribution> generate_matched_pair(int h_target,
                                                                            int amplitude,
                                                                            std::uint64_t seed);

}  // namespace hcentral
