#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "evtss/kernels.hpp"
#include "evtss/rng.hpp"

using namespace evtss;
namespace k = evtss::kernels;

namespace {

struct Batch {
    std::vector<double> x, mu;
};

Batch random_batch(Rng& rng, std::size_t n, double mu0, double spread) {
    Batch b;
    b.x.resize(n);
    b.mu.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.mu[i] = mu0 + rng.uniform(-spread, spread);
        b.x[i] = b.mu[i] + rng.uniform(-0.8, 2.5);
    }
    return b;
}

bool close_rel(double a, double b, double rel, double abs_tol = 1e-300) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b)) + abs_tol;
}

// Runs fn under both lanes and checks agreement; returns the scalar value.
template <typename Fn>
double both_lanes(Fn&& fn, double rel = 1e-11) {
    k::force_isa(k::Isa::scalar);
    const double ref = fn();
    if (!k::isa_supported(k::Isa::avx2)) {
        k::reset_isa();
        return ref;
    }
    k::force_isa(k::Isa::avx2);
    const double got = fn();
    k::reset_isa();
    CHECK(close_rel(got, ref, rel));
    return ref;
}

}  // namespace

TEST_CASE("lane control") {
    CHECK(k::isa_supported(k::Isa::scalar));
    k::force_isa(k::Isa::scalar);
    CHECK(k::active_isa() == k::Isa::scalar);
    k::reset_isa();
    if (k::isa_supported(k::Isa::avx2)) {
        k::force_isa(k::Isa::avx2);
        CHECK(k::active_isa() == k::Isa::avx2);
        k::reset_isa();
    }
}

TEST_CASE("gev_nll equivalence over random parameter draws") {
    Rng rng(2024);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 400));
        const double sigma = std::exp(rng.uniform(-1.5, 1.0));
        const double xi = rng.uniform(-0.45, 0.45);
        auto b = random_batch(rng, n, rng.uniform(-2.0, 0.0), 0.4);
        both_lanes([&] {
            return k::gev_nll(b.x, b.mu, sigma, xi);
        });
        both_lanes([&] { return k::gumbel_nll(b.x, b.mu, sigma); });
    }
}

TEST_CASE("gev_nll support violation returns +inf on both lanes") {
    Rng rng(7);
    auto b = random_batch(rng, 37, -1.0, 0.4);
    // xi<0 with x far above the upper endpoint.
    b.x[20] = b.mu[20] + 100.0;
    const double v = both_lanes([&] { return k::gev_nll(b.x, b.mu, 0.2, -0.3); });
    CHECK(std::isinf(v));
}

TEST_CASE("gpd_nll equivalence and domain") {
    Rng rng(99);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 300));
        const double sigma = std::exp(rng.uniform(-2.0, 0.5));
        const double xi = rng.uniform(-0.4, 0.4);
        std::vector<double> y(n);
        const double cap = xi < 0.0 ? -sigma / xi : 10.0;
        for (auto& v : y) v = rng.uniform(0.0, 0.95 * cap);
        std::vector<double> dummy;
        both_lanes([&] { return k::gpd_nll(y, sigma, xi); });
        (void)dummy;
    }
    std::vector<double> bad{0.5, -0.1, 0.3};
    const double v = both_lanes([&] { return k::gpd_nll(bad, 1.0, 0.1); });
    CHECK(std::isinf(v));
}

TEST_CASE("gev_standardize equivalence") {
    Rng rng(4242);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 200));
        const double sigma = std::exp(rng.uniform(-1.0, 0.5));
        const double xi = rng.uniform(-0.4, 0.4);
        auto b = random_batch(rng, n, -1.2, 0.3);
        std::vector<double> ref(n), got(n);
        k::force_isa(k::Isa::scalar);
        const bool ok_ref = k::gev_standardize(b.x, b.mu, sigma, xi, ref);
        if (k::isa_supported(k::Isa::avx2)) {
            k::force_isa(k::Isa::avx2);
            const bool ok_got = k::gev_standardize(b.x, b.mu, sigma, xi, got);
            CHECK(ok_got == ok_ref);
            if (ok_ref)
                for (std::size_t i = 0; i < n; ++i)
                    CHECK(close_rel(got[i], ref[i], 1e-11, 1e-13));
        }
        k::reset_isa();
    }
}

TEST_CASE("gev_exceed_zero_mean equivalence incl. out-of-support lanes") {
    Rng rng(31);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 300));
        const double sigma = std::exp(rng.uniform(-2.0, 0.3));
        const double xi = rng.uniform(-0.6, 0.6);
        std::vector<double> mu(n);
        for (auto& m : mu) m = rng.uniform(-4.0, -0.1);
        // Push some locations so 0 falls outside the fitted support.
        if (rep % 3 == 0)
            for (std::size_t i = 0; i < n; i += 5) mu[i] = rng.uniform(-40.0, -20.0);
        const double p = both_lanes([&] {
            return k::gev_exceed_zero_mean(mu, sigma, xi);
        });
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("gev_quantile_batch equivalence across xi regimes") {
    Rng rng(555);
    for (double xi : {-0.35, -1e-9, 0.0, 1e-9, 0.2}) {
        const std::size_t n = 257;
        std::vector<double> u(n), ref(n), got(n);
        for (auto& v : u) v = rng.uniform01();
        u[0] = 1e-12;
        u[1] = 1.0 - 1e-12;
        k::force_isa(k::Isa::scalar);
        k::gev_quantile_batch(u, -1.0, 0.4, xi, ref);
        if (k::isa_supported(k::Isa::avx2)) {
            k::force_isa(k::Isa::avx2);
            k::gev_quantile_batch(u, -1.0, 0.4, xi, got);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(close_rel(got[i], ref[i], 1e-11, 1e-12));
        }
        k::reset_isa();
    }
}

TEST_CASE("vector transcendentals match libm on wide magnitude sweep") {
    if (!k::isa_supported(k::Isa::avx2)) return;
    // Exercised through gev_quantile_batch which chains log, log, expm1.
    Rng rng(808);
    const std::size_t n = 4096;
    std::vector<double> u(n), ref(n), got(n);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = std::exp(rng.uniform(std::log(1e-300), std::log(0.999999)));
    k::force_isa(k::Isa::scalar);
    k::gev_quantile_batch(u, 0.0, 1.0, 0.3, ref);
    k::force_isa(k::Isa::avx2);
    k::gev_quantile_batch(u, 0.0, 1.0, 0.3, got);
    k::reset_isa();
    for (std::size_t i = 0; i < n; ++i)
        CHECK(close_rel(got[i], ref[i], 1e-11, 1e-12));
}
