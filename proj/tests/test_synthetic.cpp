#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hcentral/citation_distribution.hpp"
#include "hcentral/core_metrics.hpp"
#include "hcentral/synthetic.hpp"

using namespace hcentral;

TEST_SUITE("synthetic") {
  TEST_CASE("rng determinism and mapping") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

    // next() is the raw engine stream, pinned by the standard.
    std::mt19937_64 reference(42);
    Rng c(42);
    for (int i = 0; i < 10; ++i) CHECK(c.next() == reference());

    Rng u(7);
    for (int i = 0; i < 1000; ++i) {
      const double value = u.unit();
      CHECK(value >= 0.0);
      CHECK(value < 1.0);
    }

    Rng bounded(11);
    bool saw_lo = false;
    bool saw_hi = false;
    for (int i = 0; i < 2000; ++i) {
      const auto value = bounded.uniform_int(3, 7);
      CHECK(value >= 3);
      CHECK(value <= 7);
      saw_lo = saw_lo || value == 3;
      saw_hi = saw_hi || value == 7;
    }
    CHECK(saw_lo);
    CHECK(saw_hi);
    CHECK(bounded.uniform_int(5, 5) == 5);
    CHECK_THROWS_AS(bounded.uniform_int(5, 4), std::invalid_argument);
  }

  TEST_CASE("selective and producer shapes") {
    const SyntheticOptions options{.h_target = 10, .amplitude = 2};
    const auto selective = generate_selective(options);
    CHECK(selective.size() == 10);
    CHECK(selective.at(1) == 20);
    CHECK(selective.at(10) == 20);
    CHECK(selective.total() == 200);
    CHECK(h_index(selective) == 10);

    const auto producer = generate_producer(options);
    CHECK(producer.size() == 20);
    CHECK(producer.at(1) == 10);
    CHECK(producer.at(20) == 10);
    CHECK(producer.total() == 200);  // same total impact, different shape
    CHECK(h_index(producer) == 10);

    // The selective profile's central area is flat at amplitude * h^2.
    const auto series = radius_series(selective);
    for (int j = 1; j <= series.max_radius(); ++j) CHECK(series.area(j) == 200);

    CHECK_THROWS_AS(generate_selective({.h_target = 1}), Error);
    CHECK_THROWS_AS(generate_producer({.h_target = 5, .amplitude = 0}), Error);
  }

  TEST_CASE("power-law draws hit the target h and stay in range") {
    for (const std::uint64_t seed : {1u, 2u, 77u, 901u}) {
      Rng rng(seed);
      for (int h_target = 2; h_target <= 30; ++h_target) {
        for (double exponent : {0.5, 1.0, 1.7}) {
          const SyntheticOptions options{.h_target = h_target, .exponent = exponent};
          const auto d = generate_power_law(options, rng);
          CAPTURE(seed);
          CAPTURE(h_target);
          CAPTURE(exponent);
          REQUIRE(h_index(d) == h_target);
          REQUIRE(d.size() >= 2 * h_target + 1);
          REQUIRE(d.size() <= 4 * h_target);
          REQUIRE(radius_series(d).max_radius() == h_target - 1);
        }
      }
    }
    Rng rng(5);
    CHECK_THROWS_AS(generate_power_law({.h_target = 4, .exponent = 0.0}, rng), Error);
    CHECK_THROWS_AS(generate_power_law({.h_target = 4, .exponent = -1.0}, rng), Error);
  }

  TEST_CASE("seeded generation is reproducible") {
    for (const auto profile :
         {SyntheticProfile::selective, SyntheticProfile::producer, SyntheticProfile::power_law}) {
      const SyntheticOptions options{.h_target = 12, .amplitude = 3, .exponent = 1.2};
      const auto first = generate(profile, options, 2026);
      const auto second = generate(profile, options, 2026);
      CHECK(first == second);
    }
    // Different seeds give different power-law draws (almost surely).
    const auto a = generate(SyntheticProfile::power_law, {.h_target = 12}, 1);
    const auto b = generate(SyntheticProfile::power_law, {.h_target = 12}, 2);
    CHECK(a != b);
  }

  TEST_CASE("matched pairs share h and the selective side dominates") {
    for (const std::uint64_t seed : {1u, 9u, 500u}) {
      for (int h_target = 2; h_target <= 20; ++h_target) {
        for (int amplitude = 2; amplitude <= 4; ++amplitude) {
          const auto [selective, producer] = generate_matched_pair(h_target, amplitude, seed);
          CAPTURE(h_target);
          CAPTURE(amplitude);
          REQUIRE(h_index(selective) == h_target);
          REQUIRE(h_index(producer) == h_target);
          const auto s = radius_series(selective);
          const auto p = radius_series(producer);
          REQUIRE(s.max_radius() == p.max_radius());
          for (int j = 1; j <= s.max_radius(); ++j) {
            REQUIRE(s.area(j) > p.area(j));  // strict dominance at every shared radius
          }
        }
      }
    }
    CHECK_THROWS_AS(generate_matched_pair(10, 1, 0), Error);
  }

  TEST_CASE("profile names round-trip") {
    CHECK(parse_synthetic_profile("selective") == SyntheticProfile::selective);
    CHECK(parse_synthetic_profile("producer") == SyntheticProfile::producer);
    CHECK(parse_synthetic_profile("power_law") == SyntheticProfile::power_law);
    CHECK(to_string(SyntheticProfile::power_law) == "power_law");
    CHECK_THROWS_AS(parse_synthetic_profile("uniform"), Error);
  }
}
