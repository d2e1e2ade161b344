#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hcentral/analysis.hpp"
#include "hcentral/citation_distribution.hpp"
#include "hcentral/cohort.hpp"
#include "hcentral/fixtures.hpp"
#include "hcentral/synthetic.hpp"

using namespace hcentral;

namespace {

constexpr double kTight = 1e-9;  // frozen reference values carry 12+ digits

doctest::Approx near(double value) { return doctest::Approx(value).epsilon(kTight); }

Cohort two_epoch_cohort() {
  // Three authors over epochs t0 < t1; "c" misses t1.
  Cohort cohort;
  cohort.add_snapshot("a", "t0", Snapshot(CitationDistribution({9, 7, 6, 5, 3, 2, 1})));
  cohort.add_snapshot("b", "t0", Snapshot(CitationDistribution({5, 4, 3, 3, 1})));
  cohort.add_snapshot("c", "t0", Snapshot(CitationDistribution({4, 2, 2})));
  cohort.add_snapshot("a", "t1", Snapshot(CitationDistribution({12, 9, 7, 5, 4, 2, 1})));
  cohort.add_snapshot("b", "t1", Snapshot(CitationDistribution({7, 5, 4, 3, 2})));
  return cohort;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("pearson basics") {
    const std::vector<double> x{1, 2, 3, 4};
    CHECK(*pearson(x, x) == near(1.0));
    CHECK(*pearson({1, 2, 3}, {3, 2, 1}) == near(-1.0));
    // Affine maps preserve the magnitude, the slope sign sets the sign.
    CHECK(*pearson(x, {5, 7, 9, 11}) == near(1.0));
    CHECK(*pearson(x, {-1, -3, -5, -7}) == near(-1.0));
    const std::vector<double> y{2, 9, 4, 7};
    CHECK(*pearson(x, y) == *pearson(y, x));  // exactly symmetric
    CHECK_FALSE(pearson({}, {}).has_value());
    CHECK_FALSE(pearson({1}, {2}).has_value());
    CHECK_FALSE(pearson({3, 3, 3}, {1, 2, 3}).has_value());  // zero variance
    CHECK_THROWS_AS(pearson({1, 2}, {1, 2, 3}), std::invalid_argument);
  }

  TEST_CASE("index vectors over the bundled cohort") {
    const Cohort cohort = reference_cohort();
    const auto h99 = index_vectors(cohort, IndexKind::h, "1999");
    REQUIRE(h99.size() == 15);
    CHECK(*h99.at("Braun, T") == 24);
    CHECK(*h99.at("Zitt, M") == 3);

    const auto a7 = index_vectors(cohort, IndexKind::area, "1999", 7);
    REQUIRE(a7.size() == 15);
    std::vector<std::string> missing;
    for (const auto& [author, value] : a7)
      if (!value.has_value()) missing.push_back(author);
    CHECK(missing == std::vector<std::string>{"Ingwersen, P", "Rousseau, R", "Vinkler, P",
                                              "Zitt, M"});
    CHECK(*a7.at("Leydesdorff, L") == 171);
    CHECK(*a7.at("McCain, KW") == 264);

    CHECK_THROWS_AS(index_vectors(cohort, IndexKind::h, "1999", 3), std::invalid_argument);
    CHECK_THROWS_AS(index_vectors(cohort, IndexKind::area, "1999"), std::invalid_argument);
    CHECK_THROWS_AS(index_vectors(cohort, IndexKind::area, "1999", 0), std::invalid_argument);
    CHECK_THROWS_AS(index_vectors(cohort, IndexKind::h, "1789"), Error);
  }

  TEST_CASE("h correlations across the bundled snapshots") {
    const Cohort cohort = reference_cohort();
    const auto c1 = correlate_h(cohort, "1999", "2004");
    const auto c2 = correlate_h(cohort, "1999", "2009");
    const auto c3 = correlate_h(cohort, "2004", "2009");
    CHECK(c1.pairs == 15);
    CHECK(c2.pairs == 15);
    CHECK(c3.pairs == 15);
    CHECK(*c1.value == near(0.977060782393454));
    CHECK(*c2.value == near(0.812157820712059));
    CHECK(*c3.value == near(0.889424881224817));

    CHECK_THROWS_AS(correlate_h(cohort, "2004", "1999"), Error);   // order matters
    CHECK_THROWS_AS(correlate_h(cohort, "1999", "1999"), Error);   // strict precedence
    CHECK_THROWS_AS(correlate_h(cohort, "1999", "1888"), Error);   // unknown epoch
    CHECK_THROWS_AS(correlate_h(cohort, "1999", "2004", {.min_pairs = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(correlate_h(cohort, "1999", "2004", {.max_radius = 0}),
                    std::invalid_argument);
  }

  TEST_CASE("radius-index correlation matrices on the bundled cohort") {
    const Cohort cohort = reference_cohort();
    const CorrelationOptions options;  // max_radius 10, min_pairs 9
    CHECK(options.max_radius == 10);
    CHECK(options.min_pairs == 9);

    const auto area = correlate_radius_indexes(cohort, RadiusIndexKind::area, "1999", "2004");
    CHECK(area.cell(1, 1).pairs == 15);
    CHECK(*area.cell(1, 1).value == near(0.986413805672102));
    CHECK(area.cell(10, 1).pairs == 9);
    CHECK(*area.cell(10, 1).value == near(0.9406449939359212));
    CHECK(*area.cell(7, 7).value == near(0.985939333747));
    CHECK(*area.cell(10, 2).value == near(0.938421243045));

    const auto interval =
        correlate_radius_indexes(cohort, RadiusIndexKind::interval, "1999", "2004");
    CHECK(*interval.cell(1, 1).value == near(0.977259215046990));

    int available = 0;
    double lowest = 2.0;
    for (int j = 1; j <= 10; ++j)
      for (int k = 1; k <= 10; ++k) {
        const auto& cell = area.cell(j, k);
        CHECK(cell.pairs >= 9);  // every cell keeps at least nine authors
        if (cell.value.has_value()) {
          ++available;
          lowest = std::min(lowest, *cell.value);
        }
      }
    CHECK(available == 100);
    CHECK(lowest == near(0.938421243045));

    const auto far = correlate_radius_indexes(cohort, RadiusIndexKind::area, "1999", "2009");
    double far_lowest = 2.0;
    for (int j = 1; j <= 10; ++j)
      for (int k = 1; k <= 10; ++k)
        if (far.cell(j, k).value.has_value()) far_lowest = std::min(far_lowest, *far.cell(j, k).value);
    CHECK(far_lowest == near(0.665611168067));

    CHECK_THROWS_AS(area.cell(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(area.cell(1, 11), std::invalid_argument);
  }

  TEST_CASE("pairwise deletion keeps the pair count even for suppressed cells") {
    const Cohort cohort = two_epoch_cohort();
    // Radius 1 exists for everyone at t0 but only a and b at t1: two pairs.
    const auto strict = correlate_radius_indexes(cohort, RadiusIndexKind::area, "t0", "t1",
                                                 {.max_radius = 2, .min_pairs = 3});
    CHECK(strict.cell(1, 1).pairs == 2);
    CHECK_FALSE(strict.cell(1, 1).value.has_value());

    const auto loose = correlate_radius_indexes(cohort, RadiusIndexKind::area, "t0", "t1",
                                                {.max_radius = 2, .min_pairs = 2});
    CHECK(loose.cell(1, 1).pairs == 2);
    REQUIRE(loose.cell(1, 1).value.has_value());
    // Two points always correlate to +-1; these move together.
    CHECK(*loose.cell(1, 1).value == near(1.0));
  }

  TEST_CASE("difference grids") {
    const Cohort cohort = reference_cohort();
    const auto area = correlate_radius_indexes(cohort, RadiusIndexKind::area, "1999", "2004");
    const auto interval =
        correlate_radius_indexes(cohort, RadiusIndexKind::interval, "1999", "2004");

    const auto self = matrix_difference(area, area);
    CHECK(self.available_count() == 100);
    CHECK(self.negative_count() == 0);
    for (int j = 1; j <= 10; ++j)
      for (int k = 1; k <= 10; ++k) CHECK(*self.cell(j, k) == 0.0);

    const auto diff = matrix_difference(area, interval);
    CHECK(diff.available_count() == 100);
    CHECK(diff.negative_count() == 6);
    CHECK(*diff.cell(1, 1) == near(*area.cell(1, 1).value - *interval.cell(1, 1).value));
    CHECK_THROWS_AS(diff.cell(0, 1), std::invalid_argument);

    const auto late_area = correlate_radius_indexes(cohort, RadiusIndexKind::area, "2004", "2009");
    CHECK_THROWS_AS(matrix_difference(area, late_area), Error);  // epoch mismatch

    const auto narrow = correlate_radius_indexes(cohort, RadiusIndexKind::area, "1999", "2004",
                                                 {.max_radius = 5});
    CHECK_THROWS_AS(matrix_difference(area, narrow), Error);  // radius-bound mismatch

    // Negative counts across the three epoch pairs: 6 + 2 + 15.
    const auto late_interval =
        correlate_radius_indexes(cohort, RadiusIndexKind::interval, "2004", "2009");
    const auto far_area = correlate_radius_indexes(cohort, RadiusIndexKind::area, "1999", "2009");
    const auto far_interval =
        correlate_radius_indexes(cohort, RadiusIndexKind::interval, "1999", "2009");
    CHECK(matrix_difference(far_area, far_interval).negative_count() == 2);
    CHECK(matrix_difference(late_area, late_interval).negative_count() == 15);
  }

  TEST_CASE("optimal radius on the bundled cohort") {
    const Cohort cohort = reference_cohort();
    const auto result = optimal_radius(cohort, RadiusIndexKind::area, "1999", "2004");
    CHECK(result.best_radius == 10);
    CHECK(result.best_score == near(0.9899089256718822));
    REQUIRE(result.scores.size() == 10);
    CHECK(result.scores.front().radius == 1);
    CHECK(result.scores.front().cells == 10);  // row 1 averages cells k = 1..10
    CHECK(result.scores.back().cells == 1);    // row 10 only has (10, 10)
  }

  TEST_CASE("optimal radius tie-break and failure") {
    CorrelationMatrix m(RadiusIndexKind::area, "t0", "t1", 3, 2);
    m.cell(1, 2) = {0.8, 5};
    m.cell(2, 2) = {0.8, 5};
    m.cell(3, 3) = {0.5, 5};
    const auto result = optimal_radius(m);
    CHECK(result.best_radius == 1);  // ties resolve to the smallest radius
    CHECK(result.best_score == near(0.8));
    CHECK(result.scores.size() == 3);

    const CorrelationMatrix empty(RadiusIndexKind::area, "t0", "t1", 3, 2);
    CHECK_THROWS_WITH_AS(optimal_radius(empty), doctest::Contains("insufficient data"), Error);

    // Only cells with to-radius >= from-radius count toward a row's score.
    CorrelationMatrix lower(RadiusIndexKind::area, "t0", "t1", 2, 2);
    lower.cell(2, 1) = {0.99, 5};
    lower.cell(1, 1) = {0.4, 5};
    const auto from_upper = optimal_radius(lower);
    CHECK(from_upper.best_radius == 1);
    CHECK(from_upper.scores.size() == 1);
  }

  TEST_CASE("half-mean-h heuristic") {
    const Cohort cohort = reference_cohort();
    CHECK(half_mean_h_heuristic(cohort, "1999") == 6);
    CHECK(half_mean_h_heuristic(cohort, "2004") == 7);
    CHECK(half_mean_h_heuristic(cohort, "2009") == 10);
    CHECK_THROWS_AS(half_mean_h_heuristic(cohort, "1600"), Error);

    Cohort tiny;
    tiny.add_snapshot("a", "t0", Snapshot(CitationDistribution({1})));
    CHECK(half_mean_h_heuristic(tiny, "t0") == 1);  // clamps to 1
  }

  TEST_CASE("regression on an exact line") {
    Cohort cohort;
    cohort.add_snapshot("a", "t0", Snapshot(PrecomputedSnapshot{1, 1, 2, {}, {}}));
    cohort.add_snapshot("b", "t0", Snapshot(PrecomputedSnapshot{1, 2, 4, {}, {}}));
    cohort.add_snapshot("c", "t0", Snapshot(PrecomputedSnapshot{1, 3, 6, {}, {}}));
    const auto result = regress_impact_on_production(cohort, "t0");
    CHECK(result.fit.slope == near(2.0));
    CHECK(result.fit.intercept == doctest::Approx(0.0).scale(1));
    CHECK(result.fit.r == near(1.0));
    CHECK(result.fit.n == 3);
    REQUIRE(result.rows.size() == 3);
    // All residuals are zero, so rows fall back to author order.
    CHECK(result.rows[0].author == "a");
    CHECK(result.rows[2].author == "c");
    for (const auto& row : result.rows) CHECK(row.residual == doctest::Approx(0.0).scale(1));
  }

  TEST_CASE("regression on the bundled cohort") {
    const Cohort cohort = reference_cohort();
    const auto fit99 = regress_impact_on_production(cohort, "1999");
    CHECK(fit99.fit.slope == near(21.427154272811542));
    CHECK(fit99.fit.intercept == near(-297.896130362053214));
    CHECK(fit99.fit.r == near(0.825933002618891));
    CHECK(fit99.fit.n == 15);
    REQUIRE(fit99.rows.size() == 15);
    CHECK(fit99.rows[0].author == "Small, H");
    CHECK(fit99.rows[1].author == "Garfield, E");
    CHECK(fit99.rows[0].residual == doctest::Approx(1980.69).epsilon(1e-4));
    CHECK(fit99.rows[1].residual == doctest::Approx(492.27).epsilon(1e-4));

    const auto fit04 = regress_impact_on_production(cohort, "2004");
    CHECK(fit04.fit.slope == near(20.461872914330023));
    CHECK(fit04.fit.intercept == near(-211.951148589706008));
    CHECK(fit04.fit.r == near(0.745731033871808));

    const auto fit09 = regress_impact_on_production(cohort, "2009");
    CHECK(fit09.fit.slope == near(18.904595387554586));
    CHECK(fit09.fit.intercept == near(195.776524972707193));
    CHECK(fit09.fit.r == near(0.671237785047221));

    for (const auto* fit : {&fit99, &fit04, &fit09}) {
      double residual_sum = 0.0;
      double magnitude = 0.0;
      for (const auto& row : fit->rows) {
        residual_sum += row.residual;
        magnitude += std::abs(row.citations);
      }
      CHECK(std::abs(residual_sum) / magnitude <= 1e-9);
    }
  }

  TEST_CASE("regression validation") {
    Cohort thin;
    thin.add_snapshot("a", "t0", Snapshot(PrecomputedSnapshot{1, 1, 2, {}, {}}));
    thin.add_snapshot("b", "t0", Snapshot(PrecomputedSnapshot{1, 2, 4, {}, {}}));
    CHECK_THROWS_AS(regress_impact_on_production(thin, "t0"), Error);
    CHECK_THROWS_AS(regress_impact_on_production(thin, "t9"), Error);

    Cohort flat;
    flat.add_snapshot("a", "t0", Snapshot(PrecomputedSnapshot{1, 5, 2, {}, {}}));
    flat.add_snapshot("b", "t0", Snapshot(PrecomputedSnapshot{1, 5, 4, {}, {}}));
    flat.add_snapshot("c", "t0", Snapshot(PrecomputedSnapshot{1, 5, 6, {}, {}}));
    CHECK_THROWS_WITH_AS(regress_impact_on_production(flat, "t0"),
                         doctest::Contains("constant"), Error);

    Cohort level;
    level.add_snapshot("a", "t0", Snapshot(PrecomputedSnapshot{1, 1, 5, {}, {}}));
    level.add_snapshot("b", "t0", Snapshot(PrecomputedSnapshot{1, 2, 5, {}, {}}));
    level.add_snapshot("c", "t0", Snapshot(PrecomputedSnapshot{1, 3, 5, {}, {}}));
    const auto result = regress_impact_on_production(level, "t0");
    CHECK(result.fit.slope == doctest::Approx(0.0).scale(1));
    CHECK(result.fit.intercept == near(5.0));
    CHECK(result.fit.r == 0.0);  // flat response: correlation defined as zero
  }

  TEST_CASE("kind names round-trip") {
    CHECK(to_string(RadiusIndexKind::area) == "area");
    CHECK(to_string(RadiusIndexKind::interval) == "interval");
    CHECK(parse_radius_index_kind("area") == RadiusIndexKind::area);
    CHECK(parse_radius_index_kind("interval") == RadiusIndexKind::interval);
    CHECK_THROWS_AS(parse_radius_index_kind("perimeter"), Error);
    CHECK(to_string(IndexKind::h) == "h");
  }
}
