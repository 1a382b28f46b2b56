#include "evtss/kernels.hpp"

#include <atomic>

#include "evtss/errors.hpp"
#include "kernels_impl.hpp"

namespace evtss::kernels {

namespace {

using detail::Vtable;

bool cpu_has_avx2() {
#if EVTSS_HAVE_AVX2_LANE
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Vtable* detect() {
#if EVTSS_HAVE_AVX2_LANE
    if (cpu_has_avx2()) return &detail::avx2_vtable();
#endif
    return &detail::scalar_vtable();
}

std::atomic<const Vtable*>& active_table() {
    static std::atomic<const Vtable*> table{detect()};
    return table;
}

std::atomic<Isa>& active_tag() {
    static std::atomic<Isa> tag{cpu_has_avx2() ? Isa::avx2 : Isa::scalar};
    return tag;
}

}  // namespace

Isa active_isa() { return active_tag().load(); }

bool isa_supported(Isa isa) {
    return isa == Isa::scalar || cpu_has_avx2();
}

void force_isa(Isa isa) {
    if (!isa_supported(isa)) throw DomainError("kernels: isa not supported on this cpu");
#if EVTSS_HAVE_AVX2_LANE
    active_table().store(isa == Isa::avx2 ? &detail::avx2_vtable()
                                          : &detail::scalar_vtable());
#else
    active_table().store(&detail::scalar_vtable());
#endif
    active_tag().store(isa);
}

void reset_isa() {
    active_table().store(detect());
    active_tag().store(cpu_has_avx2() ? Isa::avx2 : Isa::scalar);
}

double gev_nll(std::span<const double> x, std::span<const double> mu,
               double sigma, double xi) {
    return active_table().load()->gev_nll(x.data(), mu.data(), x.size(), sigma,
                                          xi);
}

double gumbel_nll(std::span<const double> x, std::span<const double> mu,
                  double sigma) {
    return active_table().load()->gumbel_nll(x.data(), mu.data(), x.size(),
                                             sigma);
}

double gpd_nll(std::span<const double> y, double sigma, double xi) {
    return active_table().load()->gpd_nll(y.data(), y.size(), sigma, xi);
}

bool gev_standardize(std::span<const double> x, std::span<const double> mu,
                     double sigma, double xi, std::span<double> out) {
    return active_table().load()->gev_standardize(x.data(), mu.data(), x.size(),
                                                  sigma, xi, out.data());
}

double gev_exceed_zero_mean(std::span<const double> mu, double sigma,
                            double xi) {
    return active_table().load()->gev_exceed_zero_mean(mu.data(), mu.size(),
                                                       sigma, xi);
}

void gev_quantile_batch(std::span<const double> u, double mu, double sigma,
                        double xi, std::span<double> out) {
    active_table().load()->gev_quantile_batch(u.data(), u.size(), mu, sigma, xi,
                                              out.data());
}

}  // namespace evtss::kernels
