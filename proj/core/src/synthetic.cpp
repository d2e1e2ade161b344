#include "hcentral/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcentral {
namespace {

void validate_common(const SyntheticOptions& options) {
  if (options.h_target < 2) {
    throw Error("h target must be at least 2 (no central radius exists below h = 2)");
  }
  if (options.amplitude < 1) throw Error("amplitude must be at least 1");
}

}  // namespace

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int requires lo <= hi");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // reject the partial block at the bottom of the 64-bit range so every
  // residue is equally likely
  const std::uint64_t reject_below = (0 - span) % span;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= reject_below) {
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
    }
  }
}

SyntheticProfile parse_synthetic_profile(const std::string& name) {
  if (name == "selective") return SyntheticProfile::selective;
  if (name == "producer") return SyntheticProfile::producer;
  if (name == "power_law") return SyntheticProfile::power_law;
  throw Error("unknown profile \"" + name + "\" (expected selective, producer, or power_law)");
}

std::string to_string(SyntheticProfile profile) {
  switch (profile) {
    case SyntheticProfile::selective: return "selective";
    case SyntheticProfile::producer: return "producer";
    case SyntheticProfile::power_law: return "power_law";
  }
  return "power_law";
}

CitationDistribution generate_selective(const SyntheticOptions& options) {
  validate_common(options);
  const Count citations = static_cast<Count>(options.amplitude) * options.h_target;
  return CitationDistribution(
      std::vector<Count>(static_cast<std::size_t>(options.h_target), citations));
}

CitationDistribution generate_producer(const SyntheticOptions& options) {
  validate_common(options);
  const auto papers = static_cast<std::size_t>(options.amplitude) *
                      static_cast<std::size_t>(options.h_target);
  return CitationDistribution(std::vector<Count>(papers, static_cast<Count>(options.h_target)));
}

CitationDistribution generate_power_law(const SyntheticOptions& options, Rng& rng) {
  validate_common(options);
  if (!(options.exponent > 0.0)) throw Error("exponent must be positive");
  const int h = options.h_target;
  const double alpha = options.exponent;

  // c_i = floor(C * i^-alpha). C >= h^(1+alpha) makes c_h >= h; keeping
  // C below (h+1)(h+2)^alpha makes every count from rank h+2 on at most h,
  // so capping rank h+1 is the only edit ever needed for h = h_target.
  const double scale_floor = std::pow(static_cast<double>(h), 1.0 + alpha);
  const double ratio_max =
      ((h + 1) * std::pow(static_cast<double>(h + 2), alpha) - 1.0) / scale_floor;
  const double spread = std::max(0.0, ratio_max - 1.0) * 0.95;
  const double scale = std::ceil(scale_floor * (1.0 + spread * rng.unit()));

  const int papers = static_cast<int>(rng.uniform_int(2 * h + 1, 4 * h));
  std::vector<Count> counts(static_cast<std::size_t>(papers));
  for (int i = 1; i <= papers; ++i) {
    counts[static_cast<std::size_t>(i) - 1] =
        static_cast<Count>(std::floor(scale * std::pow(static_cast<double>(i), -alpha)));
  }
  // the stated adjustment rule, guarding the float edge cases as well
  counts[static_cast<std::size_t>(h) - 1] = std::max<Count>(counts[static_cast<std::size_t>(h) - 1], h);
  counts[static_cast<std::size_t>(h)] = std::min<Count>(counts[static_cast<std::size_t>(h)], h);
  return CitationDistribution(std::move(counts));
}

CitationDistribution generate(SyntheticProfile profile, const SyntheticOptions& options,
                              Rng& rng) {
  switch (profile) {
    case SyntheticProfile::selective: return generate_selective(options);
    case SyntheticProfile::producer: return generate_producer(options);
    case SyntheticProfile::power_law: return generate_power_law(options, rng);
  }
  throw std::invalid_argument("unknown profile");
}

CitationDistribution generate(SyntheticProfile profile, const SyntheticOptions& options,
                              std::uint64_t seed) {
  Rng rng(seed);
  return generate(profile, options, rng);
}

std::pair<CitationDistribution, CitationDistribution> generate_matched_pair(int h_target,
                                                                            int amplitude,
                                                                            std::uint64_t seed) {
  if (amplitude < 2) throw Error("matched pair requires amplitude >= 2 for strict dominance");
  SyntheticOptions options;
  options.h_target = h_target;
  options.amplitude = amplitude;
  (void)seed;  // constant profiles draw nothing; parameter kept for interface stability
  return {generate_selective(options), generate_producer(options)};
}

}  // namespace hcentral
