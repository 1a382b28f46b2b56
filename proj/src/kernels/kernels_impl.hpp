#pragma once

#include <cstddef>

// Internal entry points for the per-ISA kernel variants. The *_avx2
// symbols exist only on x86 builds; kernels.cpp wires the dispatch table.

namespace evtss::kernels::detail {

struct Vtable {
    double (*gev_nll)(const double*, const double*, std::size_t, double, double);
    double (*gumbel_nll)(const double*, const double*, std::size_t, double);
    double (*gpd_nll)(const double*, std::size_t, double, double);
    bool (*gev_standardize)(const double*, const double*, std::size_t, double,
                            double, double*);
    double (*gev_exceed_zero_mean)(const double*, std::size_t, double, double);
    void (*gev_quantile_batch)(const double*, std::size_t, double, double,
                               double, double*);
};

const Vtable& scalar_vtable();

#if defined(__x86_64__) || defined(_M_X64)
#define EVTSS_HAVE_AVX2_LANE 1
const Vtable& avx2_vtable();
#else
#define EVTSS_HAVE_AVX2_LANE 0
#endif

}  // namespace evtss::kernels::detail
