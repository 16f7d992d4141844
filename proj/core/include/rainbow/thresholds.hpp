#pragma once
// Closed-form threshold curves and first-moment heuristics for rainbow
// connectivity of G(n,p) with a palette of r colours. Natural logarithms
// throughout. n is a double so the formulas can be probed at analytic
// points, not just integer orders.

#include <stdexcept>

namespace rainbow {

// C(r) = r^{r-2} / (r-2)!. Throws std::domain_error for r < 3.
double conjecture_constant(int r);

// ((C (1 + epsilon) ln n)^{1/r}) / n^{1 - 1/r}.
// Throws std::domain_error for r < 3, n < 2 or epsilon <= -1.
double conjectured_threshold(double n, int r, double epsilon);

// ((2 ln n)^{1/r}) / n^{1 - 1/r}; where the diameter drops to r.
// Throws std::domain_error for r < 2 or n < 2.
double diameter_threshold(double n, int r);

struct SemisharpBounds {
  double lower;  // ((ln n)^{1/r}) / n^{1 - 1/r}
  double upper;  // ((2^{20 r} ln n)^{1/r}) / n^{1 - 1/r}
};
// Throws std::domain_error for r < 2 or n < 2.
SemisharpBounds semisharp_bounds(double n, int r);

// First-moment count of rainbow paths of length r between a fixed pair:
// (r!/r^r) n^{r-1} p^r. Throws std::domain_error for r < 2, n < 2 or p
// outside [0, 1].
double expected_rainbow_r_path_count(double n, int r, double p);

struct BadPairEstimate {
  double per_pair_prob;       // exp(-expected count), Poisson heuristic
  double expected_bad_pairs;  // C(n,2) * per_pair_prob
};
BadPairEstimate heuristic_bad_pair_estimate(double n, int r, double p);

// Everything above evaluated in one place, handy for reporting.
struct ThresholdSummary {
  double n = 0;
  int r = 0;
  double epsilon = 0;
  double C = 0;
  double conjectured = 0;
  double diameter = 0;
  SemisharpBounds semisharp{};
  double expected_paths_at_conjectured = 0;
  BadPairEstimate bad_pairs_at_conjectured{};
};
ThresholdSummary threshold_summary(double n, int r, double epsilon);

}  // namespace rainbow
