#if defined(__x86_64__) || defined(_M_X64)

#include <cmath>
#include <limits>

#include "evtss/kernels.hpp"
#include "kernels_impl.hpp"
#include "vec256_math.hpp"

// AVX2+FMA lane. Translation unit is compiled with -mavx2 -mfma; the
// dispatcher only installs it after a cpuid check.

namespace evtss::kernels::detail {

namespace {

namespace v = evtss::kernels::v256;
using v::vd;

constexpr double kInf = std::numeric_limits<double>::infinity();

double gev_nll_avx2(const double* x, const double* mu, std::size_t n,
                    double sigma, double xi) {
    if (!(sigma > 0.0)) return kInf;
    const double log_sigma = std::log(sigma);
    const double inv_sigma = 1.0 / sigma;
    const std::size_t n4 = n & ~std::size_t{3};
    double acc = 0.0;

    if (std::fabs(xi) < kXiEps) {
        vd vacc = _mm256_setzero_pd();
        const vd vls = v::vset(log_sigma);
        const vd vis = v::vset(inv_sigma);
        for (std::size_t i = 0; i < n4; i += 4) {
            const vd z = _mm256_mul_pd(
                _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(mu + i)),
                vis);
            const vd t = v::exp(_mm256_sub_pd(_mm256_setzero_pd(), z));
            vacc = _mm256_add_pd(vacc, _mm256_add_pd(vls, _mm256_add_pd(z, t)));
        }
        acc = v::hsum(vacc);
        for (std::size_t i = n4; i < n; ++i) {
            const double z = (x[i] - mu[i]) * inv_sigma;
            acc += log_sigma + z + std::exp(-z);
        }
        return acc;
    }

    const double a = 1.0 + 1.0 / xi;
    const double neg_inv_xi = -1.0 / xi;
    vd vacc = _mm256_setzero_pd();
    const vd vls = v::vset(log_sigma);
    const vd va = v::vset(a);
    const vd vnix = v::vset(neg_inv_xi);
    const vd vxis = v::vset(xi * inv_sigma);
    const vd vneg1 = v::vset(-1.0);
    bool violated = false;
    for (std::size_t i = 0; i < n4; i += 4) {
        const vd q = _mm256_mul_pd(
            _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(mu + i)),
            vxis);
        if (_mm256_movemask_pd(_mm256_cmp_pd(q, vneg1, _CMP_LE_OQ)) != 0) {
            violated = true;
            break;
        }
        const vd lw = v::log1p(q);
        const vd t = v::exp(_mm256_mul_pd(vnix, lw));
        vacc = _mm256_add_pd(
            vacc, _mm256_add_pd(vls, _mm256_fmadd_pd(va, lw, t)));
    }
    if (violated) return kInf;
    acc = v::hsum(vacc);
    for (std::size_t i = n4; i < n; ++i) {
        const double q = xi * (x[i] - mu[i]) * inv_sigma;
        if (!(1.0 + q > 0.0)) return kInf;
        const double lw = std::log1p(q);
        acc += log_sigma + a * lw + std::exp(neg_inv_xi * lw);
    }
    return acc;
}

double gumbel_nll_avx2(const double* x, const double* mu, std::size_t n,
                       double sigma) {
    return gev_nll_avx2(x, mu, n, sigma, 0.0);
}

double gpd_nll_avx2(const double* y, std::size_t n, double sigma, double xi) {
    if (!(sigma > 0.0)) return kInf;
    const double log_sigma = std::log(sigma);
    const double inv_sigma = 1.0 / sigma;
    const std::size_t n4 = n & ~std::size_t{3};
    double acc = 0.0;

    if (std::fabs(xi) < kXiEps) {
        vd vacc = _mm256_setzero_pd();
        bool violated = false;
        for (std::size_t i = 0; i < n4; i += 4) {
            const vd yi = _mm256_loadu_pd(y + i);
            if (_mm256_movemask_pd(
                    _mm256_cmp_pd(yi, _mm256_setzero_pd(), _CMP_LT_OQ)) != 0) {
                violated = true;
                break;
            }
            vacc = _mm256_add_pd(
                vacc, _mm256_fmadd_pd(yi, v::vset(inv_sigma), v::vset(log_sigma)));
        }
        if (violated) return kInf;
        acc = v::hsum(vacc);
        for (std::size_t i = n4; i < n; ++i) {
            if (y[i] < 0.0) return kInf;
            acc += log_sigma + y[i] * inv_sigma;
        }
        return acc;
    }

    const double a = 1.0 + 1.0 / xi;
    vd vacc = _mm256_setzero_pd();
    bool violated = false;
    for (std::size_t i = 0; i < n4; i += 4) {
        const vd yi = _mm256_loadu_pd(y + i);
        const vd q = _mm256_mul_pd(yi, v::vset(xi * inv_sigma));
        const int bad =
            _mm256_movemask_pd(
                _mm256_cmp_pd(yi, _mm256_setzero_pd(), _CMP_LT_OQ)) |
            _mm256_movemask_pd(_mm256_cmp_pd(q, v::vset(-1.0), _CMP_LE_OQ));
        if (bad != 0) {
            violated = true;
            break;
        }
        vacc = _mm256_add_pd(
            vacc,
            _mm256_fmadd_pd(v::vset(a), v::log1p(q), v::vset(log_sigma)));
    }
    if (violated) return kInf;
    acc = v::hsum(vacc);
    for (std::size_t i = n4; i < n; ++i) {
        if (y[i] < 0.0) return kInf;
        const double q = xi * y[i] * inv_sigma;
        if (!(1.0 + q > 0.0)) return kInf;
        acc += log_sigma + a * std::log1p(q);
    }
    return acc;
}

bool gev_standardize_avx2(const double* x, const double* mu, std::size_t n,
                          double sigma, double xi, double* out) {
    const double inv_sigma = 1.0 / sigma;
    const std::size_t n4 = n & ~std::size_t{3};
    if (std::fabs(xi) < kXiEps) {
        const vd vis = v::vset(inv_sigma);
        for (std::size_t i = 0; i < n4; i += 4)
            _mm256_storeu_pd(
                out + i,
                _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(mu + i)),
                              vis));
        for (std::size_t i = n4; i < n; ++i)
            out[i] = (x[i] - mu[i]) * inv_sigma;
        return true;
    }
    const double inv_xi = 1.0 / xi;
    const vd vxis = v::vset(xi * inv_sigma);
    const vd vix = v::vset(inv_xi);
    for (std::size_t i = 0; i < n4; i += 4) {
        const vd q = _mm256_mul_pd(
            _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(mu + i)),
            vxis);
        if (_mm256_movemask_pd(_mm256_cmp_pd(q, v::vset(-1.0), _CMP_LE_OQ)) != 0)
            return false;
        _mm256_storeu_pd(out + i, _mm256_mul_pd(vix, v::log1p(q)));
    }
    for (std::size_t i = n4; i < n; ++i) {
        const double q = xi * (x[i] - mu[i]) * inv_sigma;
        if (!(1.0 + q > 0.0)) return false;
        out[i] = inv_xi * std::log1p(q);
    }
    return true;
}

double gev_exceed_zero_mean_avx2(const double* mu, std::size_t n, double sigma,
                                 double xi) {
    if (n == 0) return 0.0;
    const double inv_sigma = 1.0 / sigma;
    const std::size_t n4 = n & ~std::size_t{3};
    double acc = 0.0;

    if (std::fabs(xi) < kXiEps) {
        vd vacc = _mm256_setzero_pd();
        const vd vis = v::vset(inv_sigma);
        for (std::size_t i = 0; i < n4; i += 4) {
            const vd t = v::exp(_mm256_mul_pd(_mm256_loadu_pd(mu + i), vis));
            const vd p = _mm256_sub_pd(_mm256_setzero_pd(),
                                       v::expm1(_mm256_sub_pd(_mm256_setzero_pd(), t)));
            vacc = _mm256_add_pd(vacc, p);
        }
        acc = v::hsum(vacc);
        for (std::size_t i = n4; i < n; ++i)
            acc += -std::expm1(-std::exp(mu[i] * inv_sigma));
        return acc / static_cast<double>(n);
    }

    const double neg_inv_xi = -1.0 / xi;
    const double oos = xi < 0.0 ? 0.0 : 1.0;
    vd vacc = _mm256_setzero_pd();
    const vd vnxis = v::vset(-xi * inv_sigma);
    const vd vnix = v::vset(neg_inv_xi);
    const vd voos = v::vset(oos);
    for (std::size_t i = 0; i < n4; i += 4) {
        const vd q = _mm256_mul_pd(_mm256_loadu_pd(mu + i), vnxis);
        const vd valid = _mm256_cmp_pd(q, v::vset(-1.0), _CMP_GT_OQ);
        // Clamp invalid lanes to q=0 so log1p stays finite, then blend.
        const vd qs = v::blend(valid, q, _mm256_setzero_pd());
        const vd t = v::exp(_mm256_mul_pd(vnix, v::log1p(qs)));
        const vd p = _mm256_sub_pd(_mm256_setzero_pd(),
                                   v::expm1(_mm256_sub_pd(_mm256_setzero_pd(), t)));
        vacc = _mm256_add_pd(vacc, v::blend(valid, p, voos));
    }
    acc = v::hsum(vacc);
    for (std::size_t i = n4; i < n; ++i) {
        const double q = -xi * mu[i] * inv_sigma;
        if (!(1.0 + q > 0.0)) {
            acc += oos;
            continue;
        }
        acc += -std::expm1(-std::exp(neg_inv_xi * std::log1p(q)));
    }
    return acc / static_cast<double>(n);
}

void gev_quantile_batch_avx2(const double* u, std::size_t n, double mu,
                             double sigma, double xi, double* out) {
    const std::size_t n4 = n & ~std::size_t{3};
    if (std::fabs(xi) < kXiEps) {
        const vd vmu = v::vset(mu);
        const vd vsg = v::vset(sigma);
        for (std::size_t i = 0; i < n4; i += 4) {
            const vd y = _mm256_sub_pd(_mm256_setzero_pd(),
                                       v::log(_mm256_loadu_pd(u + i)));
            _mm256_storeu_pd(out + i, _mm256_fnmadd_pd(vsg, v::log(y), vmu));
        }
        for (std::size_t i = n4; i < n; ++i)
            out[i] = mu - sigma * std::log(-std::log(u[i]));
        return;
    }
    const double inv_xi = 1.0 / xi;
    const vd vmu = v::vset(mu);
    const vd vsix = v::vset(sigma * inv_xi);
    const vd vnxi = v::vset(-xi);
    for (std::size_t i = 0; i < n4; i += 4) {
        const vd y = _mm256_sub_pd(_mm256_setzero_pd(),
                                   v::log(_mm256_loadu_pd(u + i)));
        const vd g = v::expm1(_mm256_mul_pd(vnxi, v::log(y)));
        _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vsix, g, vmu));
    }
    for (std::size_t i = n4; i < n; ++i) {
        const double y = -std::log(u[i]);
        out[i] = mu + sigma * std::expm1(-xi * std::log(y)) * inv_xi;
    }
}

}  // namespace

const Vtable& avx2_vtable() {
    static const Vtable table{
        gev_nll_avx2,           gumbel_nll_avx2,
        gpd_nll_avx2,           gev_standardize_avx2,
        gev_exceed_zero_mean_avx2, gev_quantile_batch_avx2,
    };
    return table;
}

}  // namespace evtss::kernels::detail

#endif  // x86_64
