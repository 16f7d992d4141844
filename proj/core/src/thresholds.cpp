#include "rainbow/thresholds.hpp"

#include <cmath>
#include <string>

namespace rainbow {

namespace {

void check_nr(double n, int r, int min_r) {
  if (r < min_r)
    throw std::domain_error("r must be >= " + std::to_string(min_r));
  if (!(n >= 2.0)) throw std::domain_error("n must be >= 2");
}

// (x ln n)^{1/r} / n^{1 - 1/r}, the shape shared by all threshold curves.
double threshold_curve(double n, int r, double x) {
  return std::pow(x * std::log(n), 1.0 / r) / std::pow(n, 1.0 - 1.0 / r);
}

// Repeated multiplication keeps these exact up to 2^53, well past any
// practical r, and avoids the libm pow() drift on integer arguments.
double int_pow(int base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

double factorial(int x) {
  double out = 1.0;
  for (int i = 2; i <= x; ++i) out *= i;
  return out;
}

}  // namespace

double conjecture_constant(int r) {
  if (r < 3) throw std::domain_error("conjecture constant needs r >= 3");
  return int_pow(r, r - 2) / factorial(r - 2);
}

double conjectured_threshold(double n, int r, double epsilon) {
  check_nr(n, r, 3);
  if (!(epsilon > -1.0))
    throw std::domain_error("epsilon must exceed -1");
  return threshold_curve(n, r, conjecture_constant(r) * (1.0 + epsilon));
}

double diameter_threshold(double n, int r) {
  check_nr(n, r, 2);
  return threshold_curve(n, r, 2.0);
}

SemisharpBounds semisharp_bounds(double n, int r) {
  check_nr(n, r, 2);
  return {threshold_curve(n, r, 1.0),
          threshold_curve(n, r, std::exp2(20.0 * r))};
}

double expected_rainbow_r_path_count(double n, int r, double p) {
  check_nr(n, r, 2);
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0, 1]");
  return factorial(r) / int_pow(r, r) * std::pow(n, r - 1) * std::pow(p, r);
}

BadPairEstimate heuristic_bad_pair_estimate(double n, int r, double p) {
  const double expected = expected_rainbow_r_path_count(n, r, p);
  const double per_pair = std::exp(-expected);
  return {per_pair, n * (n - 1) / 2.0 * per_pair};
}

ThresholdSummary threshold_summary(double n, int r, double epsilon) {
  ThresholdSummary s;
  s.n = n;
  s.r = r;
  s.epsilon = epsilon;
  s.C = conjecture_constant(r);
  s.conjectured = conjectured_threshold(n, r, epsilon);
  s.diameter = diameter_threshold(n, r);
  s.semisharp = semisharp_bounds(n, r);
  s.expected_paths_at_conjectured =
      expected_rainbow_r_path_count(n, r, s.conjectured);
  s.bad_pairs_at_conjectured = heuristic_bad_pair_estimate(n, r, s.conjectured);
  return s;
}

}  // namespace rainbow
