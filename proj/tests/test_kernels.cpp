#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "wkbres/kernels.hpp"

using namespace wkbres::kernels;

namespace {
struct Data {
    std::vector<cplx> a, b;
    std::vector<double> v;
};

Data make_data(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    Data d;
    for (std::size_t i = 0; i < n; ++i) {
        d.a.emplace_back(u(rng), u(rng));
        d.b.emplace_back(u(rng), u(rng));
        d.v.push_back(10.0 * u(rng));
    }
    // keep psi away from zero
    for (auto& z : d.a) z += cplx(z.real() >= 0 ? 0.1 : -0.1, 0.0);
    return d;
}

double close(cplx x, cplx y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }
double close(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }
}  // namespace

TEST_CASE("backend bookkeeping") {
    CHECK(available(Backend::Scalar));
    CHECK(to_string(Backend::Scalar) == "scalar");
    CHECK(to_string(Backend::Avx2) == "avx2");
    const Backend before = active();
    CHECK(select(Backend::Scalar));
    CHECK(active() == Backend::Scalar);
    CHECK(&table() == &table(Backend::Scalar));
    if (available(Backend::Avx2)) {
        CHECK(select(Backend::Avx2));
        CHECK(active() == Backend::Avx2);
    } else {
        CHECK_FALSE(select(Backend::Avx2));
        CHECK(active() == Backend::Scalar);
    }
    select(before);
}

TEST_CASE("scalar kernels on known values") {
    const Table& t = table(Backend::Scalar);
    const std::vector<cplx> psi{{1.0, 1.0}, {2.0, 0.0}};
    const std::vector<cplx> dpsi{{0.0, 2.0}, {-1.0, 3.0}};
    std::vector<cplx> out(2);
    t.log_derivative(psi, dpsi, out);
    CHECK(close(out[0], cplx(-1.0, -1.0)) < 1e-15);
    CHECK(close(out[1], cplx(0.5, -1.5)) < 1e-15);

    const std::vector<double> v{3.0, -1.0};
    t.riccati_slope(psi, v, cplx(1.0, -0.5), out);
    // (1+i)^2 - (3 - 1 + 0.5i) = 2i - 2 - 0.5i
    CHECK(close(out[0], cplx(-2.0, 1.5)) < 1e-15);
    CHECK(close(out[1], cplx(6.0, -0.5)) < 1e-15);

    CHECK(t.max_abs(psi) == 2.0);
    CHECK(t.max_abs(std::vector<cplx>{}) == 0.0);

    SUBCASE("residuals vanish on exact solutions") {
        // beta = -i k is a Riccati solution for V = 0, eps = k^2
        const cplx k(2.0, -0.1);
        std::vector<cplx> beta(20, cplx(0.0, -1.0) * k);
        std::vector<double> zero(20, 0.0);
        CHECK(t.riccati_residual(beta, zero, k * k, 0.01) < 1e-13);
        // the three-point Laplacian is exact for linear psi with V = eps
        std::vector<cplx> lin;
        for (int i = 0; i < 20; ++i) lin.emplace_back(0.5 * i, -0.25 * i);
        std::vector<double> flat(20, 3.0);
        CHECK(t.numerov_residual(lin, flat, cplx(3.0, 0.0), 0.1) < 1e-13);
        CHECK(t.numerov_residual(std::vector<cplx>(2), std::vector<double>(2), cplx(), 0.1) == 0.0);
    }
}

TEST_CASE("AVX2 kernels match the scalar reference") {
    if (!available(Backend::Avx2)) {
        MESSAGE("AVX2 unavailable; comparing scalar with itself");
    }
    const Table& s = table(Backend::Scalar);
    const Table& x = table(Backend::Avx2);
    for (std::size_t n = 0; n <= 37; ++n) {
        CAPTURE(n);
        const Data d = make_data(n, 1000 + n);
        const cplx eps(3.7, -0.2);
        std::vector<cplx> o1(n), o2(n);

        s.log_derivative(d.a, d.b, o1);
        x.log_derivative(d.a, d.b, o2);
        for (std::size_t i = 0; i < n; ++i) CHECK(close(o2[i], o1[i]) < 1e-13);

        s.riccati_slope(d.b, d.v, eps, o1);
        x.riccati_slope(d.b, d.v, eps, o2);
        for (std::size_t i = 0; i < n; ++i) CHECK(close(o2[i], o1[i]) < 1e-13);

        CHECK(close(x.riccati_residual(d.b, d.v, eps, 0.01), s.riccati_residual(d.b, d.v, eps, 0.01)) < 1e-13);
        CHECK(close(x.numerov_residual(d.a, d.v, eps, 0.05), s.numerov_residual(d.a, d.v, eps, 0.05)) < 1e-13);
        CHECK(x.max_abs(d.a) == doctest::Approx(s.max_abs(d.a)).epsilon(1e-15));
    }
}
