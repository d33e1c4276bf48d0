#include "qform/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qform {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

// Abramowitz & Stegun 26.2.23 rational tail approximation, |error| < 4.5e-4.
double inverse_normal_guess(double p) {
    const bool lower = p < 0.5;
    const double pp = lower ? p : 1.0 - p;
    const double t = std::sqrt(-2.0 * std::log(pp));
    const double num = 2.515517 + t * (0.802853 + t * 0.010328);
    const double den = 1.0 + t * (1.432788 + t * (0.189269 + t * 0.001308));
    const double x = t - num / den;
    return lower ? -x : x;
}

double normal_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

}  // namespace

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse_normal_cdf: p must be in (0,1)");
    double x = inverse_normal_guess(p);
    for (int i = 0; i < 2; ++i) {
        const double err = normal_cdf(x) - p;
        const double pdf = normal_pdf(x);
        if (pdf <= 0.0) break;
        const double newton = err / pdf;
        x -= newton / (1.0 + 0.5 * x * newton);  // Halley step
    }
    return x;
}

namespace {

// Lower incomplete gamma by power series, x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("regularized_gamma_p: series did not converge");
}

// Upper incomplete gamma by Lentz continued fraction, x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("regularized_gamma_q: continued fraction did not converge");
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("regularized_gamma_p: invalid arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("regularized_gamma_q: invalid arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_squared_cdf(double k, double x) {
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(0.5 * k, 0.5 * x);
}

double chi_squared_sf(double k, double x) {
    if (x <= 0.0) return 1.0;
    return regularized_gamma_q(0.5 * k, 0.5 * x);
}

namespace {

double log_binomial_pmf(std::int64_t k, std::int64_t n, double p) {
    const double dk = static_cast<double>(k), dn = static_cast<double>(n);
    return std::lgamma(dn + 1.0) - std::lgamma(dk + 1.0) - std::lgamma(dn - dk + 1.0) +
           dk * std::log(p) + (dn - dk) * std::log1p(-p);
}

}  // namespace

double binomial_cdf(std::int64_t k, std::int64_t n, double p) {
    if (n < 0 || k > n) throw std::domain_error("binomial_cdf: need 0 <= k <= n");
    if (k < 0) return 0.0;
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return k >= n ? 1.0 : 0.0;
    if (k == n) return 1.0;

    // Terms below the anchor decay once i is under the mode; stop when they
    // no longer move the sum.
    const double anchor = std::exp(log_binomial_pmf(k, n, p));
    if (anchor == 0.0) {
        // Anchor underflowed: decide which side of the mode we are on.
        return static_cast<double>(k) < p * static_cast<double>(n) ? 0.0 : 1.0;
    }
    const double odds = (1.0 - p) / p;
    double term = anchor;
    double sum = anchor;
    for (std::int64_t i = k; i > 0; --i) {
        term *= static_cast<double>(i) * odds / static_cast<double>(n - i + 1);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return std::min(sum, 1.0);
}

double binomial_sf(std::int64_t k, std::int64_t n, double p) {
    if (n < 0 || k < 0) throw std::domain_error("binomial_sf: need 0 <= k <= n");
    if (k > n) return 0.0;
    if (k == 0) return 1.0;
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;

    const double anchor = std::exp(log_binomial_pmf(k, n, p));
    if (anchor == 0.0) {
        return static_cast<double>(k) < p * static_cast<double>(n) ? 1.0 : 0.0;
    }
    const double ratio = p / (1.0 - p);
    double term = anchor;
    double sum = anchor;
    for (std::int64_t i = k; i < n; ++i) {
        term *= static_cast<double>(n - i) * ratio / static_cast<double>(i + 1);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return std::min(sum, 1.0);
}

BinomialInterval clopper_pearson(std::int64_t k, std::int64_t n, double confidence) {
    if (n <= 0 || k < 0 || k > n) throw std::domain_error("clopper_pearson: need 0 <= k <= n");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::domain_error("clopper_pearson: confidence must be in (0,1)");
    const double alpha2 = 0.5 * (1.0 - confidence);
    const double residual_tol = 1e-9;

    BinomialInterval ci;

    if (k == 0) {
        ci.low = 0.0;
    } else {
        // Largest p with P(X >= k) <= alpha/2: solve binomial_sf(k,n,p) = alpha/2.
        double lo = 0.0, hi = static_cast<double>(k) / static_cast<double>(n);
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double v = binomial_sf(k, n, mid);
            if (std::abs(v - alpha2) <= residual_tol) {
                lo = hi = mid;
                break;
            }
            (v < alpha2 ? lo : hi) = mid;
        }
        ci.low = 0.5 * (lo + hi);
    }

    if (k == n) {
        ci.high = 1.0;
    } else {
        // Smallest p with P(X <= k) <= alpha/2: solve binomial_cdf(k,n,p) = alpha/2.
        double lo = static_cast<double>(k) / static_cast<double>(n), hi = 1.0;
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double v = binomial_cdf(k, n, mid);
            if (std::abs(v - alpha2) <= residual_tol) {
                lo = hi = mid;
                break;
            }
            (v > alpha2 ? lo : hi) = mid;
        }
        ci.high = 0.5 * (lo + hi);
    }

    return ci;
}

}  // namespace qform
