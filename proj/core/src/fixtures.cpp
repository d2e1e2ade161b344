#include "hcentral/fixtures.hpp"

#include <sstream>

#include "hcentral/io.hpp"

namespace hcentral {
namespace {

// 15 researchers, snapshots 1999/2004/2009. Cited-paper, citation, and h
// values per author-epoch, plus the published square of h.
const std::vector<ReferenceProductionRow>& production_rows() {
  static const std::vector<ReferenceProductionRow> rows = {
    {"Braun, T", 1958, "1999", 135, 1966, 24, 576},
    {"Braun, T", 1958, "2004", 152, 2498, 27, 729},
    {"Braun, T", 1958, "2009", 170, 3116, 30, 900},
    {"Egghe, L", 1978, "1999", 47, 299, 10, 100},
    {"Egghe, L", 1978, "2004", 78, 571, 12, 144},
    {"Egghe, L", 1978, "2009", 122, 1277, 18, 324},
    {"Garfield, E", 1954, "1999", 163, 3687, 25, 625},
    {"Garfield, E", 1954, "2004", 174, 4298, 26, 676},
    {"Garfield, E", 1954, "2009", 180, 5294, 29, 841},
    {"Glänzel, W", 1983, "1999", 52, 616, 14, 196},
    {"Glänzel, W", 1983, "2004", 74, 991, 18, 324},
    {"Glänzel, W", 1983, "2009", 112, 2228, 28, 784},
    {"Ingwersen, P", 1982, "1999", 18, 239, 7, 49},
    {"Ingwersen, P", 1982, "2004", 27, 686, 12, 144},
    {"Ingwersen, P", 1982, "2009", 35, 1160, 16, 256},
    {"Leydesdorff, L", 1981, "1999", 38, 235, 9, 81},
    {"Leydesdorff, L", 1981, "2004", 54, 477, 13, 169},
    {"Leydesdorff, L", 1981, "2009", 107, 1541, 21, 441},
    {"McCain, KW", 1983, "1999", 25, 328, 11, 121},
    {"McCain, KW", 1983, "2004", 32, 761, 15, 225},
    {"McCain, KW", 1983, "2009", 40, 1261, 17, 289},
    {"Moed, HF", 1985, "1999", 31, 386, 12, 144},
    {"Moed, HF", 1985, "2004", 50, 804, 16, 256},
    {"Moed, HF", 1985, "2009", 64, 1608, 22, 484},
    {"Rousseau, R", 1986, "1999", 40, 165, 6, 36},
    {"Rousseau, R", 1986, "2004", 76, 494, 11, 121},
    {"Rousseau, R", 1986, "2009", 122, 1339, 20, 400},
    {"Schubert, A", 1981, "1999", 75, 726, 14, 196},
    {"Schubert, A", 1981, "2004", 104, 1126, 18, 324},
    {"Schubert, A", 1981, "2009", 121, 1904, 24, 576},
    {"Small, H", 1961, "1999", 59, 2947, 21, 441},
    {"Small, H", 1961, "2004", 64, 3543, 24, 576},
    {"Small, H", 1961, "2009", 69, 4296, 25, 625},
    {"Van-Raan, AFJ", 1976, "1999", 47, 488, 13, 169},
    {"Van-Raan, AFJ", 1976, "2004", 64, 909, 17, 289},
    {"Van-Raan, AFJ", 1976, "2009", 78, 1750, 24, 576},
    {"Vinkler, P", 1986, "1999", 20, 149, 7, 49},
    {"Vinkler, P", 1986, "2004", 26, 266, 10, 100},
    {"Vinkler, P", 1986, "2009", 31, 411, 13, 169},
    {"Vlachy, J", 1963, "1999", 41, 361, 11, 121},
    {"Vlachy, J", 1963, "2004", 42, 374, 11, 121},
    {"Vlachy, J", 1963, "2009", 43, 382, 11, 121},
    {"Zitt, M", 1991, "1999", 6, 17, 3, 9},
    {"Zitt, M", 1991, "2004", 12, 78, 6, 36},
    {"Zitt, M", 1991, "2009", 23, 267, 10, 100},
  };
  return rows;
}

// Same dataset in index-table form with the central area and interval
// values to radius 10; "-" marks radii past h-1.
constexpr const char* kIndexTableCsv = R"fix(author,epoch,h,Np,Nc,A1,A2,A3,A4,A5,A6,A7,A8,A9,A10,I1,I2,I3,I4,I5,I6,I7,I8,I9,I10
"Braun, T",1999,24,135,1966,597,618,660,701,722,797,817,869,903,950,69,114,160,207,254,304,353,404,455,508
"Egghe, L",1999,10,47,299,109,134,142,168,175,185,194,218,231,-,29,50,70,93,115,137,160,192,231,-
"Garfield, E",1999,25,163,3687,870,917,985,1197,1300,1379,1541,1694,1935,2086,88,147,208,277,350,425,504,590,690,798
"Glänzel, W",1999,14,52,616,237,275,298,330,341,352,369,384,398,411,45,77,108,141,173,205,237,269,302,336
"Ingwersen, P",1999,7,18,239,70,106,155,166,211,230,-,-,-,-,25,46,77,110,163,230,-,-,-,-
"Leydesdorff, L",1999,9,38,235,97,112,119,136,155,161,171,179,-,-,27,46,64,84,107,129,153,179,-,-
"McCain, KW",1999,11,25,328,142,171,204,218,225,240,264,286,301,320,34,59,85,110,135,160,189,224,264,320
"Moed, HF",1999,12,31,386,167,186,221,228,249,267,283,293,297,315,37,60,85,109,135,162,191,221,249,284
"Rousseau, R",1999,6,40,165,53,63,69,80,88,-,-,-,-,-,21,36,51,68,88,-,-,-,-,-
"Schubert, A",1999,14,75,726,223,248,282,324,336,355,372,388,403,428,43,72,102,135,168,201,234,268,303,341
"Small, H",1999,21,59,2947,543,581,688,806,869,944,987,1066,1164,1187,68,113,161,214,269,328,389,454,526,597
"Van-Raan, AFJ",1999,13,47,488,182,194,226,255,265,274,283,302,315,335,39,64,91,119,146,172,198,226,255,287
"Vinkler, P",1999,7,20,149,87,96,119,124,132,140,-,-,-,-,27,44,65,86,110,140,-,-,-,-
"Vlachy, J",1999,11,41,361,153,162,187,196,222,230,246,262,275,286,36,58,82,106,132,158,186,216,249,286
"Zitt, M",1999,3,6,17,13,15,-,-,-,-,-,-,-,-,9,15,-,-,-,-,-,-,-,-
"Braun, T",2004,27,152,2498,755,805,853,876,921,964,986,1046,1085,1123,80,133,186,238,291,344,397,452,507,563
"Egghe, L",2004,12,78,571,179,201,222,234,252,280,310,344,365,380,39,66,94,122,150,180,214,254,297,343
"Garfield, E",2004,26,174,4298,954,1004,1099,1586,1716,2001,2064,2105,2259,2389,90,153,219,305,396,500,606,711,819,934
"Glänzel, W",2004,18,74,991,342,376,393,423,464,491,505,549,571,583,54,91,127,163,200,238,275,315,355,394
"Ingwersen, P",2004,12,27,686,213,224,332,356,369,417,473,575,611,636,43,71,108,146,183,227,281,359,447,543
"Leydesdorff, L",2004,13,54,477,178,209,228,254,262,284,298,306,318,328,35,59,84,110,136,164,193,222,252,282
"McCain, KW",2004,15,32,761,239,278,339,351,422,450,458,493,506,567,44,74,108,141,179,218,255,295,336,387
"Moed, HF",2004,16,50,804,318,348,375,388,434,447,469,513,585,605,52,88,123,157,194,231,269,310,357,405
"Rousseau, R",2004,11,76,494,142,152,162,179,195,209,222,231,248,258,34,56,78,101,125,149,174,199,228,258
"Schubert, A",2004,18,104,1126,341,357,373,401,428,465,489,501,522,550,53,87,121,154,188,223,259,294,330,368
"Small, H",2004,24,64,3543,623,666,686,726,897,1041,1091,1122,1211,1281,73,120,166,213,267,327,387,447,511,579
"Van-Raan, AFJ",2004,17,64,909,306,337,353,394,444,469,482,504,525,545,51,85,119,154,191,229,266,304,343,383
"Vinkler, P",2004,10,26,266,148,163,169,193,198,219,229,247,254,-,36,58,79,103,126,153,181,216,254,-
"Vlachy, J",2004,11,42,374,153,171,188,197,223,236,252,268,279,294,36,59,83,107,133,160,189,220,253,294
"Zitt, M",2004,6,12,78,52,57,64,73,76,-,-,-,-,-,20,33,46,61,76,-,-,-,-,-
"Braun, T",2009,30,170,3116,958,986,1014,1067,1144,1218,1266,1312,1356,1379,90,149,208,267,328,390,452,514,576,638
"Egghe, L",2009,18,122,1277,341,358,390,419,447,474,511,555,586,623,53,88,124,159,195,232,271,312,354,399
"Garfield, E",2009,29,180,5294,985,1120,1146,1222,1368,1439,2124,2590,2674,2733,94,158,221,286,356,427,528,650,774,897
"Glänzel, W",2009,28,112,2228,812,839,866,916,964,988,1033,1097,1120,1196,84,139,194,249,304,358,413,470,526,584
"Ingwersen, P",2009,16,35,1160,301,342,394,417,504,523,577,586,649,733,49,82,118,153,194,235,281,327,379,443
"Leydesdorff, L",2009,21,107,1541,461,557,577,611,627,703,732,760,785,798,62,107,152,195,237,283,329,376,422,468
"McCain, KW",2009,17,40,1261,404,420,450,479,528,616,637,693,711,769,59,98,138,179,220,266,313,365,417,475
"Moed, HF",2009,22,64,1608,548,609,629,703,791,827,876,892,919,969,68,115,161,210,263,317,372,424,475,529
"Rousseau, R",2009,20,122,1339,438,456,491,508,540,570,586,614,630,666,60,99,139,178,218,258,298,339,380,423
"Schubert, A",2009,24,121,1904,623,647,712,734,755,793,813,833,868,901,73,122,172,221,269,317,365,413,462,511
"Small, H",2009,25,69,4296,675,721,853,917,959,1132,1170,1309,1456,1502,77,127,181,237,294,358,422,493,571,648
"Van-Raan, AFJ",2009,24,78,1750,648,671,715,758,856,896,934,955,990,1022,76,125,175,226,280,335,390,445,500,554
"Vinkler, P",2009,13,31,411,219,241,259,276,292,300,324,344,353,361,43,71,97,124,152,180,209,240,272,305
"Vlachy, J",2009,11,43,382,153,173,190,199,225,238,254,270,281,299,36,61,85,109,135,162,191,222,255,299
"Zitt, M",2009,10,23,267,137,161,169,193,204,221,230,237,261,-,33,56,79,103,128,155,182,211,261,-
)fix";

}  // namespace

const std::vector<ReferenceProductionRow>& reference_production() { return production_rows(); }

const std::vector<ReferenceAverageRow>& reference_printed_averages() {
  static const std::vector<ReferenceAverageRow> rows = {
      {"1999", 53.1, 840.6, 12.5, 194.2},
      {"2004", 68.6, 1191.7, 15.7, 282.3},
      {"2009", 87.8, 1855.6, 20.5, 459.1},
  };
  return rows;
}

double reference_printed_mean_first_year() { return 1977.0; }

const std::string& reference_index_table_csv() {
  static const std::string csv = kIndexTableCsv;
  return csv;
}

Cohort reference_cohort() {
  std::istringstream in(reference_index_table_csv());
  return read_cohort_csv(in);
}

}  // namespace hcentral
