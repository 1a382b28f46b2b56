#pragma once

#include <immintrin.h>

#include <cstdint>
#include <limits>

// Double-precision exp/log/log1p/expm1 on __m256d (AVX2 + FMA), built from
// the Cephes rational approximations (Moshier). Accuracy is a few ulps,
// which the kernel equivalence tests pin down against the scalar libm path.

namespace evtss::kernels::v256 {

using vd = __m256d;

inline vd vset(double v) { return _mm256_set1_pd(v); }

inline vd blend(vd mask, vd a, vd b) {  // mask ? a : b
    return _mm256_blendv_pd(b, a, mask);
}

// 2^k for integer-valued k in [-1022, 1023] per lane (as int64).
inline vd pow2i(__m256i k) {
    const __m256i bias = _mm256_set1_epi64x(1023);
    return _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(k, bias), 52));
}

inline vd exp(vd x) {
    const vd hi = vset(709.782712893383996843);
    const vd lo = vset(-708.396418532264106224);
    const vd over = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
    const vd under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    const vd nan_mask = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);
    x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

    // n = round(x / ln 2); r = x - n*ln2 via the Cody-Waite split.
    const vd n = _mm256_round_pd(
        _mm256_mul_pd(x, vset(1.44269504088896340736)),
        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    vd r = _mm256_fnmadd_pd(n, vset(6.93145751953125e-1), x);
    r = _mm256_fnmadd_pd(n, vset(1.42860682030941723212e-6), r);
    const vd r2 = _mm256_mul_pd(r, r);

    // exp(r) = 1 + 2r P(r^2) / (Q(r^2) - r P(r^2))
    vd p = vset(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, r2, vset(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, r2, vset(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, r);
    vd q = vset(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, r2, vset(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, r2, vset(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, r2, vset(2.00000000000000000005e0));
    vd e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    e = _mm256_fmadd_pd(vset(2.0), e, vset(1.0));

    // Scale by 2^n in two halves so the subnormal range underflows cleanly.
    // n1 = n >> 1 (arithmetic), n2 = n - n1; both stay in [-512, 513].
    const __m128i n32 = _mm256_cvttpd_epi32(n);
    const __m128i n1_32 = _mm_srai_epi32(n32, 1);
    const __m128i n2_32 = _mm_sub_epi32(n32, n1_32);
    const vd m1 = pow2i(_mm256_cvtepi32_epi64(n1_32));
    const vd m2 = pow2i(_mm256_cvtepi32_epi64(n2_32));
    e = _mm256_mul_pd(_mm256_mul_pd(e, m1), m2);

    e = blend(over, vset(std::numeric_limits<double>::infinity()), e);
    e = blend(under, _mm256_setzero_pd(), e);
    e = blend(nan_mask, vset(std::numeric_limits<double>::quiet_NaN()), e);
    return e;
}

inline vd log(vd x) {
    const vd zero = _mm256_setzero_pd();
    const vd inf = vset(std::numeric_limits<double>::infinity());
    const vd neg_mask = _mm256_cmp_pd(x, zero, _CMP_LT_OQ);
    const vd zero_mask = _mm256_cmp_pd(x, zero, _CMP_EQ_OQ);
    const vd inf_mask = _mm256_cmp_pd(x, inf, _CMP_EQ_OQ);
    const vd nan_mask = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);

    // Normalize subnormals: scale by 2^54 and subtract 54 ln2 at the end.
    const vd tiny_mask =
        _mm256_cmp_pd(x, vset(2.2250738585072014e-308), _CMP_LT_OQ);
    x = blend(tiny_mask, _mm256_mul_pd(x, vset(0x1.0p54)), x);

    // frexp: m in [0.5, 1), e the unbiased exponent + 1.
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i expo_bits = _mm256_srli_epi64(bits, 52);
    const __m256i expo =
        _mm256_sub_epi64(_mm256_and_si256(expo_bits, _mm256_set1_epi64x(0x7ff)),
                         _mm256_set1_epi64x(1022));
    const __m256i mant = _mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL)),
        _mm256_set1_epi64x(0x3fe0000000000000LL));
    vd m = _mm256_castsi256_pd(mant);
    // int64 -> double for the exponent (values are tiny; go through epi32).
    alignas(32) std::int64_t e_arr[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(e_arr), expo);
    vd e = _mm256_set_pd(static_cast<double>(e_arr[3]),
                         static_cast<double>(e_arr[2]),
                         static_cast<double>(e_arr[1]),
                         static_cast<double>(e_arr[0]));

    const vd sqrth = vset(0.70710678118654752440);
    const vd below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
    m = blend(below, _mm256_add_pd(m, m), m);
    e = blend(below, _mm256_sub_pd(e, vset(1.0)), e);
    e = blend(tiny_mask, _mm256_sub_pd(e, vset(54.0)), e);

    const vd z = _mm256_sub_pd(m, vset(1.0));
    const vd z2 = _mm256_mul_pd(z, z);

    vd p = vset(1.01875663804580931796e-4);
    p = _mm256_fmadd_pd(p, z, vset(4.97494994976747001425e-1));
    p = _mm256_fmadd_pd(p, z, vset(4.70579119878881725854e0));
    p = _mm256_fmadd_pd(p, z, vset(1.44989225341610930846e1));
    p = _mm256_fmadd_pd(p, z, vset(1.79368678507819816313e1));
    p = _mm256_fmadd_pd(p, z, vset(7.70838733755885391666e0));
    vd q = _mm256_add_pd(z, vset(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, z, vset(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, z, vset(8.29875266912776603211e1));
    q = _mm256_fmadd_pd(q, z, vset(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, z, vset(2.31251620126765340583e1));

    vd y = _mm256_mul_pd(_mm256_mul_pd(z, z2), _mm256_div_pd(p, q));
    y = _mm256_fnmadd_pd(e, vset(2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(vset(0.5), z2, y);
    vd res = _mm256_add_pd(z, y);
    res = _mm256_fmadd_pd(e, vset(0.693359375), res);

    res = blend(zero_mask, vset(-std::numeric_limits<double>::infinity()), res);
    res = blend(neg_mask, vset(std::numeric_limits<double>::quiet_NaN()), res);
    res = blend(inf_mask, inf, res);
    res = blend(nan_mask, x, res);
    return res;
}

// log(1+x) with the (x - (u-1))/u correction for the rounding of u = 1+x.
inline vd log1p(vd x) {
    const vd one = vset(1.0);
    const vd u = _mm256_add_pd(one, x);
    const vd um1 = _mm256_sub_pd(u, one);
    const vd exact = _mm256_cmp_pd(um1, x, _CMP_EQ_OQ);
    const vd base = log(u);
    const vd corr = _mm256_div_pd(_mm256_sub_pd(x, um1), u);
    const vd u_one = _mm256_cmp_pd(u, one, _CMP_EQ_OQ);
    vd res = _mm256_add_pd(base, blend(exact, _mm256_setzero_pd(), corr));
    res = blend(u_one, x, res);
    return res;
}

// exp(x) - 1 via the (e-1) * x / log(e) correction for small x.
inline vd expm1(vd x) {
    const vd one = vset(1.0);
    const vd e = exp(x);
    const vd em1 = _mm256_sub_pd(e, one);
    const vd l = log(e);
    const vd safe =
        _mm256_andnot_pd(_mm256_cmp_pd(l, _mm256_setzero_pd(), _CMP_EQ_OQ),
                         _mm256_cmp_pd(e, vset(std::numeric_limits<double>::infinity()),
                                       _CMP_NEQ_OQ));
    const vd corrected = _mm256_div_pd(_mm256_mul_pd(em1, x), l);
    return blend(safe, corrected, em1);
}

inline double hsum(vd v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace evtss::kernels::v256
