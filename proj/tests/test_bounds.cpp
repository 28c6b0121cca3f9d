#include <doctest.h>

#include <cmath>

#include "evencycle/bounds.hpp"

using namespace evencycle;

namespace {

double value_of(const BoundReport& r, const std::string& name) {
  const BoundValue* b = r.find(name);
  REQUIRE(b != nullptr);
  REQUIRE(b->value.has_value());
  return std::stod(*b->value);
}

double log10_of_threshold(int k, const std::string& name) {
  for (const auto& t : thresholds(k)) {
    if (t.name == name) return t.log10_value;
  }
  FAIL("missing threshold " << name);
  return 0;
}

long double main_coeff(int k) {
  const long double kk = k;
  return 16 * std::sqrt(5.0L) * std::sqrt(kk * std::log(kk));
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("closed-form values") {
    const BoundReport r = eval_bounds(100, 3);
    CHECK(value_of(r, "bondy_simonovits") == doctest::Approx(27849.5).epsilon(1e-5));
    CHECK(value_of(r, "bondy_simonovits") == doctest::Approx(60 * std::pow(100.0, 4.0 / 3.0)).epsilon(1e-13));
    CHECK(value_of(r, "pikhurko") == doctest::Approx(2 * std::pow(100.0, 4.0 / 3.0)).epsilon(1e-13));
    CHECK(value_of(eval_bounds(100, 2), "pikhurko") == doctest::Approx(1000.0).epsilon(1e-13));
    for (const auto& b : r.bounds) CHECK(b.relative_gap < 1e-12);
  }

  TEST_CASE("coefficients") {
    CHECK(static_cast<double>(main_coefficient(4)) == doctest::Approx(84.25).epsilon(1e-3));
    CHECK(static_cast<double>(bukh_jiang_coefficient(4)) == doctest::Approx(221.8).epsilon(1e-3));
    CHECK(static_cast<double>(main_coefficient(4, true)) / static_cast<double>(main_coefficient(4)) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK(static_cast<double>(pikhurko_coefficient(7)) == 6.0);
    CHECK(static_cast<double>(bondy_simonovits_coefficient(7)) == 140.0);
  }

  TEST_CASE("thresholds") {
    CHECK(log10_of_threshold(4, "delta") == doctest::Approx(0.5 * std::log10(4.0) + 8 * std::log10(80.0)).epsilon(1e-12));
    CHECK(log10_of_threshold(4, "delta") == doctest::Approx(15.526).epsilon(1e-4));
    CHECK(log10_of_threshold(4, "n_floor") == doctest::Approx(548.09).epsilon(1e-5));
    CHECK(log10_of_threshold(2, "delta") == doctest::Approx(std::log10(std::sqrt(2.0) * 2560000.0)).epsilon(1e-13));
    for (int k = 2; k <= 8; ++k) {
      for (const auto& t : thresholds(k)) CHECK(t.relative_gap <= 1e-9);
    }
  }

  TEST_CASE("bounds grow with n") {
    double prev = 0;
    for (std::uint64_t n = 10; n <= 100000; n *= 10) {
      const double v = eval_bounds(n, 5).find("main")->log10_value;
      CHECK(v > prev);
      prev = v;
    }
  }

  TEST_CASE("huge inputs stay in log space") {
    const BoundReport r = eval_bounds(std::uint64_t{1} << 62, 2);
    const BoundValue* b = r.find("bondy_simonovits");
    REQUIRE(b != nullptr);
    CHECK_FALSE(b->value.has_value());
    CHECK(b->log10_value == doctest::Approx(std::log10(40.0) + 1.5 * 62 * std::log10(2.0)).epsilon(1e-12));
  }

  TEST_CASE("crossover agrees with a direct scan") {
    const CrossoverReport c = crossover(20000);
    CHECK(c.stable);
    CHECK(c.bukh_jiang == 2);
    int first = 0;
    for (int k = 2; k <= 20000 && !first; ++k) {
      if (main_coeff(k) < static_cast<long double>(k - 1)) first = k;
    }
    CHECK(c.pikhurko == first);
    CHECK_FALSE(crossover(1000).pikhurko.has_value());
  }

  TEST_CASE("improvement factor identity") {
    for (int k = 3; k <= 100; ++k) {
      const auto [ratio, root] = improvement_factor(k);
      CHECK(static_cast<double>(abs(ratio - root) / root) <= 1e-9);
      CHECK(static_cast<double>(root) == doctest::Approx(std::sqrt(5 * std::log(static_cast<double>(k)))));
    }
  }
}
