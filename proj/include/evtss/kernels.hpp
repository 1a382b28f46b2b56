#pragma once

#include <cstddef>
#include <span>

// Batch arithmetic kernels behind the distribution and likelihood code.
// Every operation has a scalar reference implementation and, on x86 with
// AVX2+FMA, a vectorized variant selected once at startup. The two are
// equivalence-tested; force_isa() lets tests pin a specific lane.
//
// Shape conventions: per-observation location mu[i] (covariates already
// folded in by the caller), shared scale/shape. Likelihood kernels return
// +infinity when any observation violates the support constraint
// 1 + xi*(x-mu)/sigma > 0.

namespace evtss::kernels {

enum class Isa { scalar, avx2 };

Isa active_isa();
bool isa_supported(Isa isa);
// Pin the dispatch lane (tests); throws DomainError if unsupported.
void force_isa(Isa isa);
// Back to auto-detection.
void reset_isa();

// Shape magnitudes below this evaluate the Gumbel / exponential limits.
inline constexpr double kXiEps = 1e-6;

// Negative log-likelihoods. x and mu must have equal length.
double gev_nll(std::span<const double> x, std::span<const double> mu,
               double sigma, double xi);
double gumbel_nll(std::span<const double> x, std::span<const double> mu,
                  double sigma);
// GPD over excesses y >= 0; exponential limit taken internally for tiny xi.
double gpd_nll(std::span<const double> y, double sigma, double xi);

// z[i] = (1/xi) log1p(xi*(x[i]-mu[i])/sigma)  (Gumbel limit: (x-mu)/sigma).
// Returns false if any observation is outside the support (out untouched
// at and after the first violation).
bool gev_standardize(std::span<const double> x, std::span<const double> mu,
                     double sigma, double xi, std::span<double> out);

// mean_i [ 1 - GEV_cdf(0; mu[i], sigma, xi) ], evaluating the cdf as 0/1
// beyond a finite endpoint.
double gev_exceed_zero_mean(std::span<const double> mu, double sigma,
                            double xi);

// Inverse-cdf transform of uniforms in (0,1); xi == 0 handled internally.
void gev_quantile_batch(std::span<const double> u, double mu, double sigma,
                        double xi, std::span<double> out);

}  // namespace evtss::kernels
