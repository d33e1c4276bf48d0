#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qform/matrix.hpp"

namespace qform {

/// Selects psi_p(t) = exp(|t|^p) - 1. Only p = 1 (sub-exponential) and
/// p = 2 (sub-gaussian) are meaningful here.
struct OrliczIndex {
    int p;
};
OrliczIndex orlicz_p1();
OrliczIndex orlicz_p2();

/// K -> E exp(|xi|^p / K^p). Must be nonincreasing in K with limit 1; may
/// return +infinity where the expectation diverges. Providers must be
/// side-effect-free: all norm routines assume they can re-evaluate freely.
using ExpectationFunctional = std::function<double(double)>;

/// t -> ln E exp(t xi) on the interval where it is finite.
using LogMgf = std::function<double(double)>;

struct NormEstimate {
    double value = 0.0;
    double bracketLow = 0.0;
    double bracketHigh = 0.0;
    int iterations = 0;
    /// Share of the empirical expectation carried by the top 1% of samples
    /// at the returned K. Values near 1 mean the plug-in estimate hangs on a
    /// handful of draws. Zero for analytic functionals.
    double heavyTailFraction = 0.0;
    /// Set when the input was identically zero and the norm is exactly 0.
    bool degenerateZero = false;
};

/// Smallest K (to relTol) with h(K) <= 2: the Luxemburg norm when h is the
/// exact expectation functional. Bracket by doubling/halving from K = 1 (200
/// steps each way), then bisection. Throws if h never drops to 2 or if h
/// evaluates below 1 (not an expectation of exp(...) >= 1).
NormEstimate luxemburg_norm_from_functional(const ExpectationFunctional& h, OrliczIndex p,
                                            double relTol);

/// Plug-in estimate: the same bisection applied to K -> mean exp(|x_i|^p/K^p).
/// All-zero samples give the degenerate zero estimate; non-finite samples
/// throw.
NormEstimate empirical_luxemburg_norm(std::span<const double> samples, OrliczIndex p,
                                      double relTol);

/// Smallest K validating ln E e^{t xi} <= K^2 t^2 / 2 across the grid:
/// sup sqrt(2 max(m(t),0)) / |t|. Grid must avoid 0 and stay inside the MGF
/// domain (non-finite evaluations throw).
double tau_from_logmgf(const LogMgf& m, std::span<const double> tGrid);

/// 400 log-spaced points per sign over |t| in [1e-3, 1e3].
std::vector<double> default_tau_grid();

/// Drops grid points where m is non-finite (outside the MGF domain).
std::vector<double> restrict_grid_to_domain(const LogMgf& m, std::span<const double> grid);

/// For the Gaussian vector M g: tau(Mg) <= ||M|| and every marginal is
/// N(0, |M^T t|^2), so the vector psi2 norm is ||M|| sqrt(8/3).
struct GaussianVectorNorms {
    double tauUpper;
    double psi2;
};
GaussianVectorNorms gaussian_vector_norms(const Matrix& m);

/// Closed-form expectation functionals for reference distributions.
namespace functionals {

/// E exp((sigma g)^2/K^2) = (1 - 2 sigma^2/K^2)^{-1/2}, +inf for K^2 <= 2 sigma^2.
ExpectationFunctional gaussian_psi2(double sigma = 1.0);
/// E exp(g^2/K) = (1 - 2/K)^{-1/2}: the psi1 functional of g^2 (chi^2_1).
ExpectationFunctional gaussian_square_psi1();
/// E exp(eps^2/K^2) = exp(1/K^2) for eps = +-1.
ExpectationFunctional rademacher_psi2();
/// E exp(|1|/K) = exp(1/K) for the constant variable 1.
ExpectationFunctional constant_one_psi1();
/// E exp(|X|/K) for X Laplace(1): K/(K-1) for K > 1.
ExpectationFunctional laplace_psi1();
/// E exp(|E - 1|/K) for E ~ Exp(1), via the two-piece closed form.
ExpectationFunctional centered_exponential_psi1();
/// E exp(|g^2 - 1|/K|), via erf/erfc pieces; +inf for K <= 2.
ExpectationFunctional centered_chi1_psi1();

}  // namespace functionals

}  // namespace qform
