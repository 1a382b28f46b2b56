#include <cmath>
#include <limits>

#include "evtss/kernels.hpp"
#include "kernels_impl.hpp"

// Reference implementations. These define the semantics the vector lane
// must reproduce.

namespace evtss::kernels::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double gev_nll_scalar(const double* x, const double* mu, std::size_t n,
                      double sigma, double xi) {
    if (!(sigma > 0.0)) return kInf;
    const double log_sigma = std::log(sigma);
    const double inv_sigma = 1.0 / sigma;
    double acc = 0.0;
    if (std::fabs(xi) < kXiEps) {
        for (std::size_t i = 0; i < n; ++i) {
            const double z = (x[i] - mu[i]) * inv_sigma;
            acc += log_sigma + z + std::exp(-z);
        }
        return acc;
    }
    const double a = 1.0 + 1.0 / xi;
    const double neg_inv_xi = -1.0 / xi;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = xi * (x[i] - mu[i]) * inv_sigma;
        if (!(1.0 + q > 0.0)) return kInf;
        const double lw = std::log1p(q);
        acc += log_sigma + a * lw + std::exp(neg_inv_xi * lw);
    }
    return acc;
}

double gumbel_nll_scalar(const double* x, const double* mu, std::size_t n,
                         double sigma) {
    if (!(sigma > 0.0)) return kInf;
    const double log_sigma = std::log(sigma);
    const double inv_sigma = 1.0 / sigma;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = (x[i] - mu[i]) * inv_sigma;
        acc += log_sigma + z + std::exp(-z);
    }
    return acc;
}

double gpd_nll_scalar(const double* y, std::size_t n, double sigma,
                      double xi) {
    if (!(sigma > 0.0)) return kInf;
    const double log_sigma = std::log(sigma);
    const double inv_sigma = 1.0 / sigma;
    double acc = 0.0;
    if (std::fabs(xi) < kXiEps) {
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] < 0.0) return kInf;
            acc += log_sigma + y[i] * inv_sigma;
        }
        return acc;
    }
    const double a = 1.0 + 1.0 / xi;
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i] < 0.0) return kInf;
        const double q = xi * y[i] * inv_sigma;
        if (!(1.0 + q > 0.0)) return kInf;
        acc += log_sigma + a * std::log1p(q);
    }
    return acc;
}

bool gev_standardize_scalar(const double* x, const double* mu, std::size_t n,
                            double sigma, double xi, double* out) {
    const double inv_sigma = 1.0 / sigma;
    if (std::fabs(xi) < kXiEps) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = (x[i] - mu[i]) * inv_sigma;
        return true;
    }
    const double inv_xi = 1.0 / xi;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = xi * (x[i] - mu[i]) * inv_sigma;
        if (!(1.0 + q > 0.0)) return false;
        out[i] = inv_xi * std::log1p(q);
    }
    return true;
}

double gev_exceed_zero_mean_scalar(const double* mu, std::size_t n,
                                   double sigma, double xi) {
    if (n == 0) return 0.0;
    const double inv_sigma = 1.0 / sigma;
    double acc = 0.0;
    if (std::fabs(xi) < kXiEps) {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = std::exp(mu[i] * inv_sigma);
            acc += -std::expm1(-t);
        }
        return acc / static_cast<double>(n);
    }
    const double neg_inv_xi = -1.0 / xi;
    // Out-of-support boundary: xi<0 means endpoint below 0 (cdf 1, tail 0);
    // xi>0 means boundary below the lower endpoint (cdf 0, tail 1).
    const double oos = xi < 0.0 ? 0.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = -xi * mu[i] * inv_sigma;
        if (!(1.0 + q > 0.0)) {
            acc += oos;
            continue;
        }
        const double t = std::exp(neg_inv_xi * std::log1p(q));
        acc += -std::expm1(-t);
    }
    return acc / static_cast<double>(n);
}

void gev_quantile_batch_scalar(const double* u, std::size_t n, double mu,
                               double sigma, double xi, double* out) {
    if (std::fabs(xi) < kXiEps) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = mu - sigma * std::log(-std::log(u[i]));
        return;
    }
    const double inv_xi = 1.0 / xi;
    for (std::size_t i = 0; i < n; ++i) {
        const double y = -std::log(u[i]);
        out[i] = mu + sigma * std::expm1(-xi * std::log(y)) * inv_xi;
    }
}

}  // namespace

const Vtable& scalar_vtable() {
    static const Vtable table{
        gev_nll_scalar,           gumbel_nll_scalar,
        gpd_nll_scalar,           gev_standardize_scalar,
        gev_exceed_zero_mean_scalar, gev_quantile_batch_scalar,
    };
    return table;
}

}  // namespace evtss::kernels::detail
