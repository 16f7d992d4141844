#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rainbow/thresholds.hpp"

namespace th = rainbow;

TEST_SUITE("thresholds") {
  TEST_CASE("the constant C") {
    CHECK(th::conjecture_constant(3) == 3.0);
    CHECK(th::conjecture_constant(4) == 8.0);
    CHECK(th::conjecture_constant(5) == doctest::Approx(125.0 / 6).epsilon(1e-15));
    CHECK_THROWS_AS(th::conjecture_constant(2), std::domain_error);
  }

  TEST_CASE("conjectured threshold spot value") {
    CHECK(th::conjectured_threshold(1000, 3, 0.0) ==
          doctest::Approx(0.02747).epsilon(2e-4));
    CHECK_THROWS_AS(th::conjectured_threshold(1000, 2, 0.0), std::domain_error);
    CHECK_THROWS_AS(th::conjectured_threshold(1, 3, 0.0), std::domain_error);
    CHECK_THROWS_AS(th::conjectured_threshold(1000, 3, -1.0), std::domain_error);
  }

  TEST_CASE("diameter threshold spot values") {
    const double e = std::exp(1.0);
    CHECK(th::diameter_threshold(e, 2) ==
          doctest::Approx(0.8578).epsilon(1e-4));
    CHECK(th::diameter_threshold(1000, 3) ==
          doctest::Approx(0.02400).epsilon(1e-3));
    CHECK_THROWS_AS(th::diameter_threshold(1000, 1), std::domain_error);
  }

  TEST_CASE("conjectured over diameter ratio is (C/2)^(1/r)") {
    for (int r = 3; r <= 7; ++r)
      for (double n : {3.0, 10.0, 1e3, 1e6}) {
        const double ratio =
            th::conjectured_threshold(n, r, 0.0) / th::diameter_threshold(n, r);
        const double expected = std::pow(th::conjecture_constant(r) / 2.0, 1.0 / r);
        CHECK(ratio == doctest::Approx(expected).epsilon(1e-12));
      }
  }

  TEST_CASE("semisharp bounds") {
    const double e = std::exp(1.0);
    CHECK(th::semisharp_bounds(e, 3).lower ==
          doctest::Approx(std::exp(-2.0 / 3.0)).epsilon(1e-12));
    CHECK(th::semisharp_bounds(1000, 3).lower ==
          doctest::Approx(0.01904).epsilon(1e-3));
    for (int r = 2; r <= 7; ++r)
      for (double n : {3.0, 50.0, 1e4}) {
        const auto b = th::semisharp_bounds(n, r);
        CHECK(b.upper / b.lower ==
              doctest::Approx(1048576.0).epsilon(1e-12));  // 2^20
      }
  }

  TEST_CASE("expected path count matches its closed form at the threshold") {
    for (int r : {3, 4, 5, 7})
      for (double n : {10.0, 100.0, 1000.0, 1e6})
        for (double eps : {0.0, 0.1, 1.0, 3.0}) {
          const double p = th::conjectured_threshold(n, r, eps);
          if (p > 1.0) continue;
          const double got = th::expected_rainbow_r_path_count(n, r, p);
          const double want = (1.0 + eps) * (1.0 - 1.0 / r) * std::log(n);
          CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
    CHECK(th::expected_rainbow_r_path_count(1000, 3, 0.0) == 0.0);
    CHECK(th::expected_rainbow_r_path_count(1000, 3, 0.02747) ==
          doctest::Approx(4.605).epsilon(1e-3));
  }

  TEST_CASE("bad pair heuristic") {
    const auto at_zero = th::heuristic_bad_pair_estimate(1000, 3, 0.0);
    CHECK(at_zero.per_pair_prob == 1.0);
    CHECK(at_zero.expected_bad_pairs == doctest::Approx(499500.0));

    const double p = th::conjectured_threshold(1000, 3, 0.0);
    const auto at_threshold = th::heuristic_bad_pair_estimate(1000, 3, p);
    CHECK(at_threshold.per_pair_prob == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(at_threshold.expected_bad_pairs ==
          doctest::Approx(4995.0).epsilon(1e-12));
  }

  TEST_CASE("the four curves keep their order") {
    for (int r = 3; r <= 8; ++r)
      for (double n : {3.0, 10.0, 100.0, 1e4}) {
        const auto b = th::semisharp_bounds(n, r);
        const double diam = th::diameter_threshold(n, r);
        const double conj = th::conjectured_threshold(n, r, 0.0);
        CHECK(b.lower < diam);
        CHECK(diam < conj);
        CHECK(conj < b.upper);
      }
  }

  TEST_CASE("every curve decreases in n") {
    for (int r = 3; r <= 5; ++r) {
      double prev_c = th::conjectured_threshold(3, r, 0.0);
      double prev_d = th::diameter_threshold(3, r);
      double prev_l = th::semisharp_bounds(3, r).lower;
      double prev_u = th::semisharp_bounds(3, r).upper;
      for (int n = 4; n <= 200; ++n) {
        const double c = th::conjectured_threshold(n, r, 0.0);
        const double d = th::diameter_threshold(n, r);
        const auto b = th::semisharp_bounds(n, r);
        CHECK(c < prev_c);
        CHECK(d < prev_d);
        CHECK(b.lower < prev_l);
        CHECK(b.upper < prev_u);
        prev_c = c;
        prev_d = d;
        prev_l = b.lower;
        prev_u = b.upper;
      }
    }
  }

  TEST_CASE("summary mirrors the individual formulas") {
    const auto s = th::threshold_summary(500, 4, 0.25);
    CHECK(s.C == th::conjecture_constant(4));
    CHECK(s.conjectured == th::conjectured_threshold(500, 4, 0.25));
    CHECK(s.diameter == th::diameter_threshold(500, 4));
    CHECK(s.semisharp.lower == th::semisharp_bounds(500, 4).lower);
    CHECK(s.semisharp.upper == th::semisharp_bounds(500, 4).upper);
    CHECK(s.expected_paths_at_conjectured ==
          th::expected_rainbow_r_path_count(500, 4, s.conjectured));
    CHECK(s.bad_pairs_at_conjectured.per_pair_prob ==
          th::heuristic_bad_pair_estimate(500, 4, s.conjectured).per_pair_prob);
  }
}
