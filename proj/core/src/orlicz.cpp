#include "qform/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qform {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_index(OrliczIndex p) {
    if (p.p != 1 && p.p != 2) throw std::invalid_argument("OrliczIndex: p must be 1 or 2");
}

void check_expectation_value(double v) {
    if (std::isnan(v)) throw std::runtime_error("expectation functional returned NaN");
    if (v < 1.0 - 1e-9)
        throw std::runtime_error(
            "expectation functional evaluated below 1; psi_p >= 0 forces E >= 1");
}

NormEstimate bisect_luxemburg(const ExpectationFunctional& h, double relTol) {
    if (!(relTol > 0.0)) throw std::invalid_argument("relTol must be positive");

    const int max_steps = 200;
    NormEstimate est;

    double k = 1.0;
    double hk = h(k);
    check_expectation_value(hk);

    double lo, hi;
    if (hk <= 2.0) {
        // Walk down until the functional exceeds 2; if it never does the
        // infimum is 0 (the zero variable).
        hi = k;
        int steps = 0;
        for (;;) {
            if (++steps > max_steps) {
                est.value = 0.0;
                est.bracketLow = 0.0;
                est.bracketHigh = hi;
                est.degenerateZero = true;
                return est;
            }
            k *= 0.5;
            hk = h(k);
            check_expectation_value(hk);
            if (hk > 2.0) {
                lo = k;
                break;
            }
            hi = k;
        }
    } else {
        lo = k;
        int steps = 0;
        for (;;) {
            if (++steps > max_steps)
                throw std::runtime_error(
                    "luxemburg bracket search failed: functional never drops to 2");
            k *= 2.0;
            hk = h(k);
            check_expectation_value(hk);
            if (hk <= 2.0) {
                hi = k;
                break;
            }
            lo = k;
        }
    }

    // Invariant: h(lo) > 2 >= h(hi).
    int iters = 0;
    while (hi - lo > relTol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // double precision exhausted
        const double hm = h(mid);
        check_expectation_value(hm);
        if (hm <= 2.0)
            hi = mid;
        else
            lo = mid;
        ++iters;
    }

    est.value = hi;
    est.bracketLow = lo;
    est.bracketHigh = hi;
    est.iterations = iters;
    return est;
}

}  // namespace

OrliczIndex orlicz_p1() { return OrliczIndex{1}; }
OrliczIndex orlicz_p2() { return OrliczIndex{2}; }

NormEstimate luxemburg_norm_from_functional(const ExpectationFunctional& h, OrliczIndex p,
                                            double relTol) {
    check_index(p);
    return bisect_luxemburg(h, relTol);
}

NormEstimate empirical_luxemburg_norm(std::span<const double> samples, OrliczIndex p,
                                      double relTol) {
    check_index(p);
    if (samples.empty()) throw std::invalid_argument("empirical_luxemburg_norm: no samples");
    bool all_zero = true;
    for (double x : samples) {
        if (!std::isfinite(x))
            throw std::invalid_argument("empirical_luxemburg_norm: non-finite sample");
        if (x != 0.0) all_zero = false;
    }
    if (all_zero) {
        NormEstimate est;
        est.degenerateZero = true;
        return est;
    }

    const double n = static_cast<double>(samples.size());
    const bool square = p.p == 2;
    const auto plug_in = [&](double k) {
        double sum = 0.0;
        for (double x : samples) {
            const double r = std::abs(x) / k;
            sum += std::exp(square ? r * r : r);
        }
        return sum / n;
    };

    NormEstimate est = bisect_luxemburg(plug_in, relTol);

    // Diagnostic: how much of the expectation the largest 1% of |x| carries.
    if (est.value > 0.0) {
        std::vector<double> mags(samples.begin(), samples.end());
        for (double& x : mags) x = std::abs(x);
        const std::size_t top =
            std::max<std::size_t>(1, (samples.size() + 99) / 100);
        std::nth_element(mags.begin(), mags.begin() + (top - 1), mags.end(),
                         std::greater<double>());
        double top_sum = 0.0, total = 0.0;
        const double cutoff = mags[top - 1];
        std::size_t taken = 0;
        for (double x : samples) {
            const double r = std::abs(x) / est.value;
            const double c = std::exp(square ? r * r : r);
            total += c;
            if (std::abs(x) >= cutoff && taken < top) {
                top_sum += c;
                ++taken;
            }
        }
        est.heavyTailFraction = total > 0.0 ? top_sum / total : 0.0;
    }
    return est;
}

double tau_from_logmgf(const LogMgf& m, std::span<const double> tGrid) {
    if (tGrid.empty()) throw std::invalid_argument("tau_from_logmgf: empty grid");
    double sup = 0.0;
    for (double t : tGrid) {
        if (t == 0.0) throw std::invalid_argument("tau_from_logmgf: grid must not contain 0");
        const double v = m(t);
        if (!std::isfinite(v))
            throw std::domain_error("tau_from_logmgf: logMGF non-finite on grid point");
        sup = std::max(sup, std::sqrt(2.0 * std::max(v, 0.0)) / std::abs(t));
    }
    return sup;
}

std::vector<double> default_tau_grid() {
    const int per_sign = 400;
    const double lo = 1e-3, hi = 1e3;
    std::vector<double> grid;
    grid.reserve(2 * per_sign);
    const double step = std::log(hi / lo) / (per_sign - 1);
    for (int i = 0; i < per_sign; ++i) {
        const double t = lo * std::exp(step * i);
        grid.push_back(-t);
        grid.push_back(t);
    }
    return grid;
}

std::vector<double> restrict_grid_to_domain(const LogMgf& m, std::span<const double> grid) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double t : grid)
        if (std::isfinite(m(t))) out.push_back(t);
    return out;
}

GaussianVectorNorms gaussian_vector_norms(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("gaussian_vector_norms: matrix not square");
    const double op = matrix_norms(m).operatorNorm;
    return {op, op * std::sqrt(8.0 / 3.0)};
}

namespace functionals {

ExpectationFunctional gaussian_psi2(double sigma) {
    return [sigma](double k) {
        const double r = 2.0 * sigma * sigma / (k * k);
        return r < 1.0 ? 1.0 / std::sqrt(1.0 - r) : kInf;
    };
}

ExpectationFunctional gaussian_square_psi1() {
    return [](double k) {
        const double r = 2.0 / k;
        return r < 1.0 ? 1.0 / std::sqrt(1.0 - r) : kInf;
    };
}

ExpectationFunctional rademacher_psi2() {
    return [](double k) { return std::exp(1.0 / (k * k)); };
}

ExpectationFunctional constant_one_psi1() {
    return [](double k) { return std::exp(1.0 / k); };
}

ExpectationFunctional laplace_psi1() {
    return [](double k) { return k > 1.0 ? k / (k - 1.0) : kInf; };
}

ExpectationFunctional centered_exponential_psi1() {
    return [](double k) {
        if (k <= 1.0) return kInf;
        const double u = 1.0 / k;
        const double below = std::exp(u) * (1.0 - std::exp(-(1.0 + u))) / (1.0 + u);
        const double above = std::exp(-u) * std::exp(-(1.0 - u)) / (1.0 - u);
        return below + above;
    };
}

ExpectationFunctional centered_chi1_psi1() {
    // E exp(|g^2-1|/K) split at g^2 = 1; each side reduces to a scaled
    // chi^2_1 tail, i.e. erf/erfc.
    return [](double k) {
        if (k <= 2.0) return kInf;
        const double a = 1.0 - 2.0 / k;
        const double b = 1.0 + 2.0 / k;
        const double upper = std::exp(-1.0 / k) / std::sqrt(a) * std::erfc(std::sqrt(0.5 * a));
        const double lower = std::exp(1.0 / k) / std::sqrt(b) * std::erf(std::sqrt(0.5 * b));
        return upper + lower;
    };
}

}  // namespace functionals

}  // namespace qform
