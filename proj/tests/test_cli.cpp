#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "hcentral/cli.hpp"
#include "hcentral/analysis.hpp"
#include "hcentral/core_metrics.hpp"
#include "hcentral/io.hpp"

using namespace hcentral;

namespace {

int run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"hcentral"};
  argv.insert(argv.end(), args.begin(), args.end());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "hcentral_cli_test") {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

const std::string kRawWorked =
    "author,epoch,citations\n"
    "a,t0,9\na,t0,7\na,t0,6\na,t0,5\na,t0,3\na,t0,2\na,t0,1\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("series emits the index table for the worked distribution") {
    TempDir dir;
    const auto in = dir.file("raw.csv");
    const auto out = dir.file("series.csv");
    write_file_atomic(in, kRawWorked);
    REQUIRE(run_cli({"series", "--input", in.c_str(), "--output", out.c_str()}) == 0);
    CHECK(read_file(out) ==
          "author,epoch,h,Np,Nc,A1,A2,A3,A4,A5,A6,A7,A8,A9,A10,"
          "I1,I2,I3,I4,I5,I6,I7,I8,I9,I10\n"
          "a,t0,4,7,33,26,30,33,-,-,-,-,-,-,-,14,23,33,-,-,-,-,-,-,-\n");

    const auto trimmed = dir.file("series3.csv");
    REQUIRE(run_cli({"series", "--input", in.c_str(), "--max-radius", "3", "--output",
                     trimmed.c_str()}) == 0);
    CHECK(read_file(trimmed) ==
          "author,epoch,h,Np,Nc,A1,A2,A3,I1,I2,I3\n"
          "a,t0,4,7,33,26,30,33,14,23,33\n");
  }

  TEST_CASE("indexes reports the decomposition") {
    TempDir dir;
    const auto in = dir.file("raw.csv");
    const auto out = dir.file("profiles.csv");
    write_file_atomic(in, "author,epoch,citations\na,t0,4\na,t0,4\na,t0,4\na,t0,0\n");
    REQUIRE(run_cli({"indexes", "--input", in.c_str(), "--output", out.c_str()}) == 0);
    CHECK(read_file(out) ==
          "author,epoch,h,H,U,L,Np,Nc,nc,tail_class\n"
          "a,t0,3,9,3,0,3,12,4.000000,light\n");

    REQUIRE(run_cli({"indexes", "--input", in.c_str(), "--count-uncited", "--output",
                     out.c_str()}) == 0);
    CHECK(read_file(out) ==
          "author,epoch,h,H,U,L,Np,Nc,nc,tail_class\n"
          "a,t0,3,9,3,0,4,12,3.000000,light\n");
  }

  TEST_CASE("indexes covers the bundled cohort") {
    TempDir dir;
    const auto out = dir.file("profiles.csv");
    REQUIRE(run_cli({"indexes", "--fixtures", "--output", out.c_str()}) == 0);
    const std::string text = read_file(out);
    CHECK(text.find("author,epoch,h,H,U,L,Np,Nc,nc,tail_class\n") == 0);
    // Imported rows carry no tail split, hence the missing U and L cells.
    CHECK(text.find("\"Braun, T\",1999,24,576,-,-,135,1966,14.562963,intermediate\n") !=
          std::string::npos);
    CHECK(text.find("\"Zitt, M\",1999,3,9,-,-,6,17,2.833333,light\n") != std::string::npos);
  }

  TEST_CASE("correlate orders epochs and honors overrides") {
    TempDir dir;
    const auto out = dir.file("grid.csv");
    REQUIRE(run_cli({"correlate", "--fixtures", "--from", "1999", "--to", "2004", "--output",
                     out.c_str()}) == 0);
    const std::string text = read_file(out);
    CHECK(text.find("matrix,from_radius,to_1,to_2,to_3,to_4,to_5,to_6,to_7,to_8,to_9,to_10\n") ==
          0);
    CHECK(text.find("area,1,0.986,") != std::string::npos);
    CHECK(text.find("\ninterval,1,0.977,") != std::string::npos);
    CHECK(text.find("\narea_n,1,15,") != std::string::npos);

    // The reversed pair violates the declared order and fails cleanly.
    CHECK(run_cli({"correlate", "--fixtures", "--from", "2004", "--to", "1999", "--output",
                   out.c_str()}) == 1);
    // Re-declaring the order makes the reversed pair legal.
    REQUIRE(run_cli({"correlate", "--fixtures", "--epochs", "2009,2004,1999", "--from", "2004",
                     "--to", "1999", "--output", out.c_str()}) == 0);

    // min-n above the cohort size suppresses every cell.
    REQUIRE(run_cli({"correlate", "--fixtures", "--from", "1999", "--to", "2004", "--min-n",
                     "16", "--output", out.c_str()}) == 0);
    CHECK(read_file(out).find("area,1,-,-,-,-,-,-,-,-,-,-\n") != std::string::npos);
  }

  TEST_CASE("radius report in both formats") {
    TempDir dir;
    const auto out = dir.file("radius.csv");
    REQUIRE(run_cli({"radius", "--fixtures", "--from", "1999", "--to", "2004", "--output",
                     out.c_str()}) == 0);
    const std::string text = read_file(out);
    CHECK(text.find("row,radius,score,cells\n") == 0);
    CHECK(text.find("best,10,0.989909,-") != std::string::npos);
    CHECK(text.find("half_mean_h,6,-,-") != std::string::npos);

    const auto out_json = dir.file("radius.json");
    REQUIRE(run_cli({"radius", "--fixtures", "--kind", "interval", "--from", "1999", "--to",
                     "2004", "--format", "json", "--output", out_json.c_str()}) == 0);
    const std::string json_text = read_file(out_json);
    CHECK(json_text.front() == '{');
    CHECK(json_text.find("\"kind\": \"interval\"") != std::string::npos);
    CHECK(json_text.find("\"half_mean_h\": 6") != std::string::npos);
  }

  TEST_CASE("regress emits the fitted rows") {
    TempDir dir;
    const auto out = dir.file("fit.csv");
    REQUIRE(run_cli({"regress", "--fixtures", "--epoch", "1999", "--output", out.c_str()}) == 0);
    const std::string text = read_file(out);
    CHECK(text.find("author,papers,citations,fitted,residual,slope,intercept,r,n\n") == 0);
    const auto small = text.find("\"Small, H\"");
    const auto garfield = text.find("\"Garfield, E\"");
    REQUIRE(small != std::string::npos);
    REQUIRE(garfield != std::string::npos);
    CHECK(small < garfield);  // rows sort by residual, largest first
    CHECK(run_cli({"regress", "--fixtures", "--epoch", "1777", "--output", out.c_str()}) == 1);
  }

  TEST_CASE("generate is deterministic per seed") {
    TempDir dir;
    const auto first = dir.file("one.csv");
    const auto second = dir.file("two.csv");
    REQUIRE(run_cli({"generate", "--profile", "power_law", "--h-target", "8", "--seed", "5",
                     "--output", first.c_str()}) == 0);
    REQUIRE(run_cli({"generate", "--profile", "power_law", "--h-target", "8", "--seed", "5",
                     "--output", second.c_str()}) == 0);
    CHECK(read_file(first) == read_file(second));
    REQUIRE(run_cli({"generate", "--profile", "power_law", "--h-target", "8", "--seed", "6",
                     "--output", second.c_str()}) == 0);
    CHECK(read_file(first) != read_file(second));

    const Cohort cohort = read_cohort_file(first, Format::csv);
    const Snapshot* snapshot = cohort.find("power_law", "t0");
    REQUIRE(snapshot != nullptr);
    CHECK(snapshot->h() == 8);
  }

  TEST_CASE("generate emits matched pairs and batches") {
    TempDir dir;
    const auto out = dir.file("pair.csv");
    REQUIRE(run_cli({"generate", "--pair", "--h-target", "6", "--output", out.c_str()}) == 0);
    const Cohort cohort = read_cohort_file(out, Format::csv);
    const Snapshot* selective = cohort.find("selective", "t0");
    const Snapshot* producer = cohort.find("producer", "t0");
    REQUIRE(selective != nullptr);
    REQUIRE(producer != nullptr);
    CHECK(selective->h() == 6);
    CHECK(producer->h() == 6);
    for (int j = 1; j <= 5; ++j) CHECK(*selective->area(j) > *producer->area(j));

    const auto batch = dir.file("batch.csv");
    REQUIRE(run_cli({"generate", "--profile", "selective", "--h-target", "4", "--count", "3",
                     "--epoch", "e1", "--output", batch.c_str()}) == 0);
    const Cohort many = read_cohort_file(batch, Format::csv);
    CHECK(many.author_count() == 3);
    CHECK(many.find("selective_001", "e1") != nullptr);
    CHECK(many.find("selective_003", "e1") != nullptr);

    // --pair and --profile exclude each other.
    CHECK(run_cli({"generate", "--pair", "--profile", "producer", "--output",
                   out.c_str()}) != 0);
  }

  TEST_CASE("curve prints rank-citation points") {
    TempDir dir;
    const auto in = dir.file("raw.csv");
    const auto out = dir.file("curve.csv");
    write_file_atomic(in, kRawWorked);
    REQUIRE(run_cli({"curve", "--input", in.c_str(), "--max-rank", "2", "--output",
                     out.c_str()}) == 0);
    CHECK(read_file(out) == "author,epoch,rank,citations\na,t0,1,9\na,t0,2,7\n");
    // The bundled table keeps no raw papers, so no curve exists for it.
    CHECK(run_cli({"curve", "--fixtures", "--output", out.c_str()}) == 1);
  }

  TEST_CASE("reproduce runs every check and writes the report on request") {
    TempDir dir;
    const auto out = dir.file("report.txt");
    REQUIRE(run_cli({"reproduce", "--output", out.c_str()}) == 0);
    const std::string text = read_file(out);
    CHECK(text.find("24 checks:") != std::string::npos);
    CHECK(text.find("0 failed") != std::string::npos);
    CHECK(text.find("FLAG area_1999_2004_all_above_0.94") != std::string::npos);
    CHECK(text.find("PASS corr_h_1999_2004") != std::string::npos);
  }

  TEST_CASE("usage and input failures exit nonzero") {
    TempDir dir;
    const auto out = dir.file("ignored.csv");
    CHECK(run_cli({}) != 0);                       // a subcommand is required
    CHECK(run_cli({"frobnicate"}) != 0);           // unknown subcommand
    CHECK(run_cli({"series"}) == 1);               // neither --input nor --fixtures
    CHECK(run_cli({"series", "--input", dir.file("absent.csv").c_str()}) == 1);
    CHECK(run_cli({"series", "--input", dir.file("absent.csv").c_str(), "--fixtures"}) != 0);
    CHECK(run_cli({"series", "--fixtures", "--format", "yaml"}) != 0);
    CHECK(run_cli({"generate", "--profile", "zipf", "--output", out.c_str()}) != 0);
    CHECK(run_cli({"generate", "--profile", "selective", "--h-target", "1", "--output",
                   out.c_str()}) != 0);
    CHECK(run_cli({"correlate", "--fixtures", "--from", "1999"}) != 0);  // --to required

    const auto bad = dir.file("bad.csv");
    write_file_atomic(bad, "author,epoch,citations\na,t0,oops\n");
    CHECK(run_cli({"indexes", "--input", bad.c_str()}) == 1);
  }

  TEST_CASE("json cohort input is detected") {
    TempDir dir;
    const auto in = dir.file("cohort.json");
    const auto out = dir.file("series.csv");
    Cohort cohort;
    cohort.add_snapshot("a", "t0", Snapshot(CitationDistribution({9, 7, 6, 5, 3, 2, 1})));
    write_file_atomic(in, serialize_cohort(cohort, Format::json, CohortLayout::raw_citations));
    REQUIRE(run_cli({"series", "--input", in.c_str(), "--max-radius", "3", "--output",
                     out.c_str()}) == 0);
    CHECK(read_file(out).find("a,t0,4,7,33,26,30,33,14,23,33\n") != std::string::npos);
  }
}
