#pragma once

#include <span>
#include <string>

#include "strofa/errors.hpp"

namespace strofa {

struct Correlation {
    double r = 0.0;
    double p = 1.0;  // two-tailed
};

// Product-moment correlation with a t-distribution p-value
// (t = r*sqrt((n-2)/(1-r^2)), n-2 degrees of freedom).
// Requires |x| = |y| >= 3 and nonzero variance on both sides.
Correlation pearson_r(std::span<const double> x, std::span<const double> y);

// Cohen's kappa over two equal-length label sequences. When chance agreement
// is 1, returns 1 for perfect observed agreement and 0 otherwise.
double cohen_kappa(std::span<const std::string> a, std::span<const std::string> b);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation,
// absolute accuracy ~1e-8 or better. Exposed for direct testing.
double regularized_incomplete_beta(double a, double b, double x);

// P(|T| >= t) for Student's t with df degrees of freedom.
double student_t_two_tailed(double t, int df);

}  // namespace strofa
