#pragma once

#include <cstdint>

namespace qform {

/// Standard normal CDF via erfc.
double normal_cdf(double x);

/// Quantile of the standard normal, |error| well below 1e-9: a rational
/// initial guess polished by two Halley steps on erfc. p must be in (0,1).
double inverse_normal_cdf(double p);

/// Regularized lower incomplete gamma P(a,x) (series / continued fraction).
double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x).
double regularized_gamma_q(double a, double x);

/// Chi-squared CDF and survival with k degrees of freedom.
double chi_squared_cdf(double k, double x);
double chi_squared_sf(double k, double x);

/// P(X <= k) and P(X >= k) for X ~ Binomial(n, p), exact up to double
/// rounding. Sums the pmf by multiplicative recurrence anchored at k, so the
/// cost is the count of non-negligible terms, not n.
double binomial_cdf(std::int64_t k, std::int64_t n, double p);
double binomial_sf(std::int64_t k, std::int64_t n, double p);

/// Exact (Clopper-Pearson) two-sided confidence interval for a binomial
/// proportion, found by bisection on the binomial CDF to an inversion
/// residual of 1e-9. k successes of n, confidence in (0,1).
struct BinomialInterval {
    double low = 0.0;
    double high = 1.0;
};
BinomialInterval clopper_pearson(std::int64_t k, std::int64_t n, double confidence);

}  // namespace qform
