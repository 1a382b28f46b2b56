#pragma once

#include <cstddef>

// Scalar special functions used by the statistics layer: regularized
// incomplete gamma (chi-square tails), normal cdf/quantile, Gauss-Legendre
// quadrature nodes.

namespace evtss {

// Regularized lower incomplete gamma P(a,x); Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper-tail probability of a chi-square with df degrees of freedom.
double chi2_sf(double x, int df);

double normal_cdf(double z);
// Inverse standard normal, |p| in (0,1); accurate to ~1e-15 after refinement.
double normal_quantile(double p);

// Nodes/weights for n-point Gauss-Legendre on [a,b].
void gauss_legendre(std::size_t n, double a, double b,
                    double* nodes, double* weights);

}  // namespace evtss
