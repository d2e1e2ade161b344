#include "hcentral/cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcentral/analysis.hpp"
#include "hcentral/fixtures.hpp"
#include "hcentral/io.hpp"
#include "hcentral/report.hpp"
#include "hcentral/reproduce.hpp"
#include "hcentral/synthetic.hpp"

namespace hcentral::cli {
namespace {

struct IoOptions {
  std::string input;
  bool fixtures = false;
  std::string output;
  std::string format = "csv";
  std::vector<std::string> epochs;
};

/// Input layout and format are detected from content: a leading '{' means
/// the json schema, anything else the csv schemas.
Cohort read_cohort_auto(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream in(text);
  if (first != std::string::npos && text[first] == '{') return read_cohort_json(in);
  return read_cohort_csv(in);
}

Cohort load_cohort(const IoOptions& io) {
  if (io.fixtures == !io.input.empty()) {
    throw Error("exactly one of --input and --fixtures is required");
  }
  Cohort cohort = io.fixtures ? reference_cohort() : read_cohort_auto(io.input);
  if (!io.epochs.empty()) cohort.set_epoch_order(io.epochs);
  return cohort;
}

void emit(const IoOptions& io, const std::string& text) {
  if (io.output.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(io.output, text);
  }
}

void print_warnings(const Cohort& cohort) {
  for (const auto& warning : cohort.warnings()) {
    std::cerr << "warning: " << warning << "\n";
  }
}

void add_io_options(CLI::App& cmd, IoOptions& io, bool reads_cohort) {
  if (reads_cohort) {
    auto* input = cmd.add_option("--input", io.input, "cohort file, csv or json (detected)");
    auto* fixtures =
        cmd.add_flag("--fixtures", io.fixtures, "use the bundled 15-researcher reference cohort");
    input->excludes(fixtures);
    fixtures->excludes(input);
    cmd.add_option("--epochs", io.epochs, "declared epoch order, comma separated")
        ->delimiter(',');
  }
  cmd.add_option("--output", io.output, "output file (written atomically); stdout if omitted");
  cmd.add_option("--format", io.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_correlation_options(CLI::App& cmd, CorrelationOptions& options) {
  cmd.add_option("--min-n", options.min_pairs, "fewest complete pairs a cell may use")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  cmd.add_option("--max-radius", options.max_radius, "radius bound of the matrices")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"central citation index analytics: h-index decomposition, central area and "
               "interval indexes, cross-snapshot correlation, and synthetic cohorts"};
  app.require_subcommand(1);
  int exit_status = 0;

  // indexes: per-snapshot indicator profiles
  auto io_indexes = std::make_shared<IoOptions>();
  auto count_uncited = std::make_shared<bool>(false);
  {
    auto* cmd = app.add_subcommand("indexes", "per-author indicator table (h, H, U, L, ...)");
    add_io_options(*cmd, *io_indexes, true);
    cmd->add_flag("--count-uncited", *count_uncited,
                  "count zero-citation papers in Np (affects Np and nc only)");
    cmd->callback([io_indexes, count_uncited] {
      const Cohort cohort = load_cohort(*io_indexes);
      print_warnings(cohort);
      DecomposeOptions options;
      options.count_uncited_papers = *count_uncited;
      emit(*io_indexes,
           render_profile_table(profile_rows(cohort, options), parse_format(io_indexes->format)));
    });
  }

  // series: central index table to a radius bound
  auto io_series = std::make_shared<IoOptions>();
  auto series_radius = std::make_shared<int>(10);
  {
    auto* cmd = app.add_subcommand("series", "central area/interval index table per author");
    add_io_options(*cmd, *io_series, true);
    cmd->add_option("--max-radius", *series_radius, "largest radius column")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    cmd->callback([io_series, series_radius] {
      const Cohort cohort = load_cohort(*io_series);
      print_warnings(cohort);
      emit(*io_series, serialize_cohort(cohort, parse_format(io_series->format),
                                        CohortLayout::index_table, *series_radius));
    });
  }

  // correlate: cross-epoch matrices plus their difference
  auto io_correlate = std::make_shared<IoOptions>();
  auto correlate_options = std::make_shared<CorrelationOptions>();
  auto correlate_from = std::make_shared<std::string>();
  auto correlate_to = std::make_shared<std::string>();
  {
    auto* cmd = app.add_subcommand(
        "correlate", "area and interval correlation matrices between two epochs");
    add_io_options(*cmd, *io_correlate, true);
    add_correlation_options(*cmd, *correlate_options);
    cmd->add_option("--from", *correlate_from, "earlier epoch")->required();
    cmd->add_option("--to", *correlate_to, "later epoch")->required();
    cmd->callback([io_correlate, correlate_options, correlate_from, correlate_to] {
      const Cohort cohort = load_cohort(*io_correlate);
      print_warnings(cohort);
      emit(*io_correlate,
           render_correlation_bundle(
               correlate_bundle(cohort, *correlate_from, *correlate_to, *correlate_options),
               parse_format(io_correlate->format)));
    });
  }

  // radius: optimal radius against the half-mean-h rule of thumb
  auto io_radius = std::make_shared<IoOptions>();
  auto radius_options = std::make_shared<CorrelationOptions>();
  auto radius_kind = std::make_shared<std::string>("area");
  auto radius_from = std::make_shared<std::string>();
  auto radius_to = std::make_shared<std::string>();
  {
    auto* cmd = app.add_subcommand("radius", "most predictive source radius for an epoch pair");
    add_io_options(*cmd, *io_radius, true);
    add_correlation_options(*cmd, *radius_options);
    cmd->add_option("--kind", *radius_kind, "index family")
        ->check(CLI::IsMember({"area", "interval"}))
        ->capture_default_str();
    cmd->add_option("--from", *radius_from, "earlier epoch")->required();
    cmd->add_option("--to", *radius_to, "later epoch")->required();
    cmd->callback([io_radius, radius_options, radius_kind, radius_from, radius_to] {
      const Cohort cohort = load_cohort(*io_radius);
      print_warnings(cohort);
      const RadiusIndexKind kind = parse_radius_index_kind(*radius_kind);
      const OptimalRadiusResult result =
          optimal_radius(cohort, kind, *radius_from, *radius_to, *radius_options);
      emit(*io_radius,
           render_radius_report(result, kind, *radius_from, *radius_to,
                                half_mean_h_heuristic(cohort, *radius_from),
                                parse_format(io_radius->format)));
    });
  }

  // regress: production-impact least squares
  auto io_regress = std::make_shared<IoOptions>();
  auto regress_epoch = std::make_shared<std::string>();
  {
    auto* cmd = app.add_subcommand(
        "regress", "citations-on-papers regression with residual ranking");
    add_io_options(*cmd, *io_regress, true);
    cmd->add_option("--epoch", *regress_epoch, "epoch to regress")->required();
    cmd->callback([io_regress, regress_epoch] {
      const Cohort cohort = load_cohort(*io_regress);
      print_warnings(cohort);
      emit(*io_regress, render_regression(regress_impact_on_production(cohort, *regress_epoch),
                                          *regress_epoch, parse_format(io_regress->format)));
    });
  }

  // generate: synthetic cohorts
  auto io_generate = std::make_shared<IoOptions>();
  auto generate_profile = std::make_shared<std::string>();
  auto generate_pair = std::make_shared<bool>(false);
  auto generate_count = std::make_shared<int>(1);
  auto generate_seed = std::make_shared<std::uint64_t>(1);
  auto generate_epoch = std::make_shared<std::string>("t0");
  auto generate_options = std::make_shared<SyntheticOptions>();
  {
    auto* cmd = app.add_subcommand("generate", "synthetic citation distributions as raw cohorts");
    add_io_options(*cmd, *io_generate, false);
    auto* profile = cmd->add_option("--profile", *generate_profile, "selective|producer|power_law");
    auto* pair = cmd->add_flag("--pair", *generate_pair,
                               "emit a matched selective/producer pair with equal h");
    profile->excludes(pair);
    pair->excludes(profile);
    cmd->add_option("--h-target", generate_options->h_target, "h-index of every generated author")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    cmd->add_option("--amplitude", generate_options->amplitude,
                    "citation (selective) or paper (producer) multiplier")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    cmd->add_option("--exponent", generate_options->exponent, "power-law decay rate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--count", *generate_count, "number of generated authors")
        ->check(CLI::Range(1, 999))
        ->capture_default_str();
    cmd->add_option("--seed", *generate_seed, "generator seed")->capture_default_str();
    cmd->add_option("--epoch", *generate_epoch, "epoch label of the generated snapshots")
        ->capture_default_str();
    cmd->callback([io_generate, generate_profile, generate_pair, generate_count, generate_seed,
                   generate_epoch, generate_options] {
      Cohort cohort;
      if (*generate_pair) {
        auto [selective, producer] = generate_matched_pair(
            generate_options->h_target, generate_options->amplitude, *generate_seed);
        cohort.add_snapshot("selective", *generate_epoch, Snapshot(std::move(selective)));
        cohort.add_snapshot("producer", *generate_epoch, Snapshot(std::move(producer)));
      } else {
        if (generate_profile->empty()) {
          throw Error("either --profile or --pair is required");
        }
        const SyntheticProfile profile = parse_synthetic_profile(*generate_profile);
        Rng rng(*generate_seed);
        for (int i = 1; i <= *generate_count; ++i) {
          std::string author = *generate_profile;
          if (*generate_count > 1) {
            char suffix[16];
            std::snprintf(suffix, sizeof suffix, "_%03d", i);
            author += suffix;
          }
          cohort.add_snapshot(author, *generate_epoch,
                              Snapshot(generate(profile, *generate_options, rng)));
        }
      }
      emit(*io_generate, serialize_cohort(cohort, parse_format(io_generate->format),
                                          CohortLayout::raw_citations));
    });
  }

  // curve: plot-ready rank/citation pairs
  auto io_curve = std::make_shared<IoOptions>();
  auto curve_max_rank = std::make_shared<int>(100);
  {
    auto* cmd = app.add_subcommand("curve", "citation curve points per author and epoch");
    add_io_options(*cmd, *io_curve, true);
    cmd->add_option("--max-rank", *curve_max_rank, "last rank shown")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    cmd->callback([io_curve, curve_max_rank] {
      const Cohort cohort = load_cohort(*io_curve);
      print_warnings(cohort);
      emit(*io_curve,
           render_curves(cohort, *curve_max_rank, parse_format(io_curve->format)));
    });
  }

  // reproduce: the claim checklist over the bundled cohort
  auto io_reproduce = std::make_shared<IoOptions>();
  auto reproduce_options = std::make_shared<CorrelationOptions>();
  {
    auto* cmd = app.add_subcommand(
        "reproduce", "check the published claims against the bundled reference cohort");
    add_correlation_options(*cmd, *reproduce_options);
    cmd->add_option("--output", io_reproduce->output,
                    "also write the checklist here (written atomically)");
    cmd->callback([io_reproduce, reproduce_options, &exit_status] {
      const ReproductionReport report = run_reproduction(*reproduce_options);
      const std::string text = render_text(report);
      std::cout << text;
      if (!io_reproduce->output.empty()) write_file_atomic(io_reproduce->output, text);
      if (report.has_failures()) exit_status = 3;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_status;
}

}  // namespace hcentral::cli
