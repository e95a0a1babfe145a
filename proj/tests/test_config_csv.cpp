#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "fqhe/config.hpp"
#include "fqhe/csv.hpp"

using namespace fqhe;

namespace {

std::string error_path(std::string_view text) {
  try {
    (void)parse_config(text);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

bool same_bits(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) {
    return std::isnan(a) && std::isnan(b);
  }
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

} // namespace

TEST_CASE("empty document gives the reference defaults") {
  for (std::string_view text : {"", "  \n", "{}"}) {
    const SweepConfig cfg = parse_config(text);
    CHECK(cfg.base.well.mass == 9.11e-31);
    CHECK(cfg.base.well.chi == 0.5);
    CHECK(cfg.base.hot_temperature == 2.0);
    CHECK(cfg.base.cold_temperature == 1.0);
    CHECK(cfg.base.series.tolerance == 1e-14);
    CHECK(cfg.alpha_grid == std::vector<double>{2.0, 1.8, 1.5, 1.2});
    REQUIRE(cfg.a_grid_nm.size() == 200);
    CHECK(cfg.a_grid_nm.front() == 0.5);
    CHECK(cfg.a_grid_nm.back() == 200.0);
    // log spacing: constant ratio
    const double ratio = cfg.a_grid_nm[1] / cfg.a_grid_nm[0];
    CHECK(cfg.a_grid_nm[100] / cfg.a_grid_nm[99] == doctest::Approx(ratio).epsilon(1e-12));
  }
}

TEST_CASE("full document") {
  const SweepConfig cfg = parse_config(R"({
    "mass_kg": 1e-30, "chi": 0.25, "t_hot_k": 4, "t_cold_k": 0.5, "tolerance": 1e-12,
    "max_terms": 5000,
    "a_grid": {"min_nm": 1, "max_nm": 3, "count": 5, "spacing": "linear"},
    "alpha_list": [1.0, 0.5], "output_path": "out.csv"})");
  CHECK(cfg.base.well.mass == 1e-30);
  CHECK(cfg.base.well.chi == 0.25);
  CHECK(cfg.base.hot_temperature == 4.0);
  CHECK(cfg.base.cold_temperature == 0.5);
  CHECK(cfg.base.series.tolerance == 1e-12);
  CHECK(cfg.base.series.max_terms == 5000);
  CHECK(cfg.a_grid_nm == std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0});
  CHECK(cfg.alpha_grid == std::vector<double>{1.0, 0.5});
  CHECK(cfg.output_path == "out.csv");

  const SweepConfig list = parse_config(R"({"a_list_nm": [5, 1, 3]})");
  CHECK(list.a_grid_nm == std::vector<double>{5.0, 1.0, 3.0});
}

TEST_CASE("schema and range violations name the field") {
  CHECK(error_path(R"({"t_hot_k": 1, "t_cold_k": 2})") == "/t_cold_k");
  CHECK(error_path(R"({"alpha_list": [2.0, 2.5]})") == "/alpha_list/1");
  CHECK(error_path(R"({"alpha_list": []})") == "/alpha_list");
  CHECK(error_path(R"({"alpha_list": [1, "x"]})") == "/alpha_list/1");
  CHECK(error_path(R"({"mass_kg": -1})") == "/mass_kg");
  CHECK(error_path(R"({"mass_kg": "heavy"})") == "/mass_kg");
  CHECK(error_path(R"({"tolerance": 0.1})") == "/tolerance");
  CHECK(error_path(R"({"bogus": 1})") == "/bogus");
  CHECK(error_path(R"({"a_grid": {"min_nm": 1, "max_nm": 2}})") == "/a_grid/count");
  CHECK(error_path(R"({"a_grid": {"min_nm": 1, "max_nm": 2, "count": 3, "spacing": "cubic"}})") ==
        "/a_grid/spacing");
  CHECK(error_path(R"({"a_grid": {"min_nm": 3, "max_nm": 2, "count": 3}})") == "/a_grid/max_nm");
  CHECK(error_path(R"({"a_grid": {"min_nm": 1, "max_nm": 2, "count": 2.5}})") == "/a_grid/count");
  CHECK(error_path(R"({"a_grid": {"min_nm": 1, "max_nm": 2, "count": 2, "step": 1}})") ==
        "/a_grid/step");
  CHECK(error_path(R"({"a_list_nm": [1, -2]})") == "/a_list_nm/1");
  CHECK(error_path(R"({"a_list_nm": [1], "a_grid": {"min_nm": 1, "max_nm": 2, "count": 2}})") ==
        "/a_list_nm");
  CHECK(error_path("[1, 2]") == "/");
  CHECK(error_path("{not json") == "/");
}

TEST_CASE("CSV with no records is just the header") {
  CHECK(format_csv({}) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("CSV formatting") {
  SweepRecord r;
  r.alpha = 1.5;
  r.a_nm = 20.0;
  r.work = 0.1;
  r.q_ab = 1.0;
  r.q_bc = -2.0;
  r.q_cd = 3.0;
  r.q_da = -4.0;
  r.status = SweepStatus::EtaUndefined;
  const std::vector<SweepRecord> one{r};
  CHECK(format_csv(one) == std::string(kCsvHeader) +
                               "\n1.5,20,0.10000000000000001,,1,-2,3,-4,eta-undefined\n");
}

TEST_CASE("CSV round-trips the numeric columns bit for bit") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> exponent(-40.0, 10.0);
  const auto random_value = [&] {
    return std::pow(10.0, exponent(rng)) * ((rng() & 1U) ? 1.0 : -1.0);
  };
  std::vector<SweepRecord> records(300);
  for (auto& r : records) {
    r.alpha = random_value();
    r.a_nm = random_value();
    r.work = random_value();
    r.q_ab = random_value();
    r.q_bc = (rng() % 5 == 0) ? -0.0 : random_value();
    r.q_cd = (rng() % 7 == 0) ? std::numeric_limits<double>::quiet_NaN() : random_value();
    r.q_da = random_value();
    if (rng() & 1U) {
      r.efficiency = random_value();
    }
    r.status = static_cast<SweepStatus>(rng() % 4);
  }
  const auto back = parse_csv(format_csv(records));
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& a = records[i];
    const auto& b = back[i];
    CHECK(same_bits(a.alpha, b.alpha));
    CHECK(same_bits(a.a_nm, b.a_nm));
    CHECK(same_bits(a.work, b.work));
    CHECK(same_bits(a.q_ab, b.q_ab));
    CHECK(same_bits(a.q_bc, b.q_bc));
    CHECK(same_bits(a.q_cd, b.q_cd));
    CHECK(same_bits(a.q_da, b.q_da));
    REQUIRE(a.efficiency.has_value() == b.efficiency.has_value());
    if (a.efficiency) {
      CHECK(same_bits(*a.efficiency, *b.efficiency));
    }
    CHECK(a.status == b.status);
  }
}

TEST_CASE("CSV errors") {
  CHECK_THROWS_WITH_AS(write_csv({}, "/nonexistent-dir/x.csv"),
                       doctest::Contains("/nonexistent-dir/x.csv"), std::runtime_error);
  CHECK_THROWS((void)parse_csv("wrong,header\n"));
  CHECK_THROWS((void)parse_csv(std::string(kCsvHeader) + "\n1,2,3\n"));
  CHECK_THROWS((void)parse_csv(std::string(kCsvHeader) + "\n1,2,3,,4,5,6,7,broken\n"));
}
