#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/operators.hpp"
#include "dunkl/rng.hpp"

#include <cmath>

using namespace dunkl;

namespace {

double smooth_bump(double u)
{
    const double q = 1.0 - u * u;
    return q > 0.0 ? std::exp(1.0 - 1.0 / q) : 0.0;
}

} // namespace

TEST_CASE("reflection-difference derivative")
{
    LambdaParam l1(1.0);
    // even functions: reflection term cancels
    auto sq = [](double x) { return x * x; };
    for (double lam : {0.25, 1.0, 2.0})
        CHECK(dunkl_derivative(sq, LambdaParam(lam), 3.0, 1e-5) ==
              doctest::Approx(6.0).epsilon(1e-9));
    // identity map picks up the full reflection weight
    auto id = [](double x) { return x; };
    CHECK(dunkl_derivative(id, l1, 2.0, 1e-5) == doctest::Approx(3.0).epsilon(1e-10));
    // at the origin: (1 + 2 lambda) f'(0)
    CHECK(dunkl_derivative(id, l1, 0.0, 1e-6) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK_THROWS_AS(dunkl_derivative(id, l1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("eigenfunction property of the kernel")
{
    LambdaParam lp(0.5);
    const double xi = 2.0, x = 1.0;
    auto re = [&](double t) { return dunkl_kernel_E(lp, t * xi).real(); };
    auto im = [&](double t) { return dunkl_kernel_E(lp, t * xi).imag(); };
    // D E(i x xi) = i xi E(i x xi), checked at two steps for O(h^2) decay
    double err_h[2];
    int k = 0;
    for (double h : {1e-3, 5e-4}) {
        const std::complex<double> lhs(dunkl_derivative(re, lp, x, h),
                                       dunkl_derivative(im, lp, x, h));
        const std::complex<double> rhs =
            std::complex<double>(0, xi) * dunkl_kernel_E(lp, x * xi);
        err_h[k++] = std::abs(lhs - rhs);
    }
    CHECK(err_h[0] < 1e-5);
    CHECK(err_h[1] < err_h[0] / 2.5); // better than first order, consistent with h^2
}

TEST_CASE("transform: zero frequency, gaussian fixed point, classical limit")
{
    auto gauss = [](double x) { return std::exp(-0.5 * x * x); };
    const std::pair<double, double> supp{-12.0, 12.0};

    LambdaParam l1(1.0);
    // xi = 0 reduces to the weighted mass
    const auto at0 = dunkl_transform(gauss, supp, l1, 0.0, 1e-10);
    const double mass = integrate_weighted_line(gauss, l1, 1e-11, supp).value;
    CHECK(at0.real() == doctest::Approx(mass).epsilon(1e-9));
    CHECK(std::abs(at0.imag()) < 1e-10);

    // the gaussian is a fixed point
    for (double xi : {0.0, 1.0, 2.0}) {
        const auto v = dunkl_transform(gauss, supp, l1, xi, 1e-9);
        CHECK(std::abs(v.real() - std::exp(-0.5 * xi * xi)) < 1e-7);
        CHECK(std::abs(v.imag()) < 1e-9);
    }

    // lambda = 0: cosine transform of an even bump
    LambdaParam l0(0.0);
    auto bump = [](double x) { return smooth_bump(x); };
    for (double xi : {0.7, 2.3}) {
        const auto v = dunkl_transform(bump, {-1.0, 1.0}, l0, xi, 1e-10);
        const double oracle =
            l0.c_lambda *
            integrate([&](double x) { return bump(x) * std::cos(x * xi); }, -1.0, 1.0, 1e-11)
                .value;
        CHECK(v.real() == doctest::Approx(oracle).epsilon(1e-9));
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("plancherel on one bump")
{
    LambdaParam lp(0.5);
    auto f = [](double x) { return (1.0 + x * x) * std::exp(-0.5 * x * x); };
    const std::pair<double, double> supp{-14.0, 14.0};
    const double norm_f =
        integrate_weighted_line([&](double x) { return f(x) * f(x); }, lp, 1e-11, supp).value;

    // even f: transform is real and even; integrate |F|^2 over folded panels
    const QuadratureRule& gl = gauss_legendre(21);
    double norm_F = 0.0;
    const double XI = 14.0;
    const int npanel = 14;
    for (int p = 0; p < npanel; ++p) {
        const double a = XI * p / npanel, b = XI * (p + 1) / npanel;
        const double mid = 0.5 * (a + b), hal = 0.5 * (b - a);
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double xi = mid + hal * gl.nodes[i];
            const auto F = dunkl_transform(f, supp, lp, xi, 1e-8);
            norm_F += gl.weights[i] * hal * 2.0 * lp.c_lambda * std::norm(F) *
                      std::pow(std::abs(xi), 2 * lp.lambda);
        }
    }
    CHECK(std::sqrt(norm_F / norm_f) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("translation: identity, support containment, positivity of the chord form")
{
    LambdaParam lp(1.0);
    auto phi = [](double u) { return smooth_bump(u); };

    // x = 0 is the identity on even profiles
    for (double t : {0.0, 0.3, 0.9})
        CHECK(translate_even(phi, lp, 0.0, t, 1.0, 1.0) ==
              doctest::Approx(phi(t)).epsilon(1e-10));

    // support containment: supp phi in [-1,1], x = 5, dilation 1
    for (double t : {0.0, 2.0, 3.9, 6.1, -3.0, -6.2})
        CHECK(std::abs(translate_even(phi, lp, 5.0, t, 1.0, 1.0)) < 1e-14);
    CHECK(translate_even(phi, lp, 5.0, 5.0, 1.0, 1.0) > 0.0);
    CHECK(translate_even(phi, lp, 5.0, -5.0, 1.0, 1.0) > 0.0);

    // nonnegative profile stays nonnegative under translation
    SplitMix64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const double x = rng.uniform(-3, 3), t = rng.uniform(-3, 3);
        CHECK(translate_even(phi, lp, x, t, 1.0, 1.0) >= -1e-12);
    }
}

TEST_CASE("translation mass preservation")
{
    for (double lam : {0.25, 1.0}) {
        LambdaParam lp(lam);
        auto phi = [](double u) { return smooth_bump(u); };
        const double mass0 =
            integrate_weighted_line(phi, lp, 1e-10, std::make_pair(-1.0, 1.0)).value;
        for (double x : {0.7, 2.5}) {
            auto tphi = [&](double t) { return translate_even(phi, lp, x, t, 1.0, 1.0); };
            const double mass =
                integrate_weighted_line(tphi, lp, 1e-9,
                                        std::make_pair(-std::abs(x) - 1.0, std::abs(x) + 1.0))
                    .value;
            CHECK(mass == doctest::Approx(mass0).epsilon(1e-7));
        }
    }
}

TEST_CASE("chord path and kernel path agree on even functions")
{
    SplitMix64 rng(99);
    for (double lam : {0.25, 1.0, 2.0}) {
        LambdaParam lp(lam);
        auto phi = [](double u) { return smooth_bump(u / 2.0); }; // support [-2, 2]
        for (int i = 0; i < 25; ++i) {
            const double x = rng.uniform(0.05, 3.0) * (rng.next_double() < 0.5 ? -1 : 1);
            const double t = rng.uniform(0.05, 3.0) * (rng.next_double() < 0.5 ? -1 : 1);
            const double a = translate_even(phi, lp, x, t, 1.0, 2.0, 1e-11);
            const double b = translate_general(phi, lp, x, t, 1e-10);
            CHECK(a == doctest::Approx(b).epsilon(5e-7));
        }
    }
}

TEST_CASE("translation kernel mass bounds")
{
    SplitMix64 rng(123);
    for (double lam : {0.25, 0.5, 1.0}) {
        TranslationKernelW W{LambdaParam(lam)};
        for (int i = 0; i < 34; ++i) {
            const double x = rng.uniform(0.05, 4.0) * (rng.next_double() < 0.5 ? -1 : 1);
            const double u = rng.uniform(0.05, 4.0) * (rng.next_double() < 0.5 ? -1 : 1);
            CHECK(W.signed_mass(x, u) == doctest::Approx(1.0).epsilon(1e-7));
            const double am = W.abs_mass(x, u);
            CHECK(am <= 4.0 + 1e-6);
            CHECK(am >= 1.0 - 1e-7);
        }
    }
}

TEST_CASE("translate on sampled data: parity contract and identity")
{
    LambdaParam lp(0.5);
    SampledFunction even = SampledFunction::from_function(
        [](double x) { return smooth_bump(x); }, -1.0, 1.0, 257);
    SampledFunction skew = SampledFunction::from_function(
        [](double x) { return smooth_bump(x) * (1.0 + 0.8 * x); }, -1.0, 1.0, 257);

    CHECK(translate(even, lp, 0.0, 0.4) == doctest::Approx(even(-0.4)).epsilon(1e-9));
    CHECK_THROWS_AS(translate(skew, lp, 1.0, 0.4, /*even_hint=*/true),
                    std::invalid_argument);
    // kernel path handles the skewed function
    const double v = translate(skew, lp, 1.0, 0.4);
    CHECK(std::isfinite(v));
}

TEST_CASE("convolution: classical boxes and commutativity")
{
    // lambda = 0: two unit boxes give the triangle
    LambdaParam l0(0.0);
    auto box = [](double u) { return std::abs(u) <= 1.0 ? 1.0 : 0.0; };
    // classical normalization: f *_0 g = c_0 int f(t) g(x - t) dt
    for (double x : {0.0, 0.5, 1.5, 2.5}) {
        const double v = convolve(box, std::make_pair(-1.0, 1.0), box, 1.0, l0, x, 1e-9);
        const double tri = std::max(0.0, 2.0 - std::abs(x));
        CHECK(v == doctest::Approx(l0.c_lambda * tri).epsilon(1e-7));
    }

    // commutativity under the weighted pairing
    SplitMix64 rng(3);
    for (double lam : {0.5, 1.0}) {
        LambdaParam lp(lam);
        auto f = [](double u) { return smooth_bump(u); };
        auto g = [](double u) { return smooth_bump(u / 1.5); };
        for (int i = 0; i < 7; ++i) {
            const double x = rng.uniform(-2.0, 2.0);
            const double fg = convolve(f, std::make_pair(-1.0, 1.0), g, 1.5, lp, x, 1e-9);
            const double gf = convolve(g, std::make_pair(-1.5, 1.5), f, 1.0, lp, x, 1e-9);
            CHECK(fg == doctest::Approx(gf).epsilon(1e-7));
        }
    }
}

TEST_CASE("second-order operator residuals")
{
    LambdaParam l0(0.0);
    LambdaParam lh(0.5);

    // affine in y: exact zero up to roundoff
    auto lin = [](double, double y) { return y; };
    CHECK(std::abs(delta_lambda_residual(lin, lh, 0.7, 0.5, 1e-3)) < 1e-9);

    // classical harmonic polynomial x^2 - y^2 at lambda = 0
    auto harm = [](double x, double y) { return x * x - y * y; };
    CHECK(std::abs(delta_lambda_residual(harm, l0, 0.7, 0.5, 1e-3)) < 1e-7);

    CHECK_THROWS_AS(delta_lambda_residual(harm, l0, 0.7, 0.5, 0.4), std::invalid_argument);

    // classical analytic pair u = Re (x+iy)^2, v = Im (x+iy)^2
    auto u2 = [](double x, double y) { return x * x - y * y; };
    auto v2 = [](double x, double y) { return 2 * x * y; };
    auto [r1, r2] = cr_residuals(u2, v2, l0, 0.8, 0.6, 1e-4);
    CHECK(std::abs(r1) < 1e-8);
    CHECK(std::abs(r2) < 1e-8);
}
