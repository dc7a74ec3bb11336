#include "dunkl/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

double dunkl_derivative(const RealFn& f, const LambdaParam& lp, double x, double h)
{
    if (!(h > 0.0))
        throw std::invalid_argument("dunkl_derivative: step must be positive");
    if (!std::isfinite(x))
        throw std::invalid_argument("dunkl_derivative: non-finite point");
    const double d = (f(x + h) - f(x - h)) / (2.0 * h);
    if (std::abs(x) < h)
        return (1.0 + 2.0 * lp.lambda) * d;
    return d + lp.lambda / x * (f(x) - f(-x));
}

std::complex<double> dunkl_transform(const RealFn& f, std::pair<double, double> support,
                                     const LambdaParam& lp, double xi, double tol)
{
    const double gl = lp.lambda;
    auto re = [&, gl, xi](double x) {
        return f(x) * bessel_j_normalized(gl - 0.5, x * xi);
    };
    auto im = [&, gl, xi](double x) {
        return -f(x) * x * xi / (2.0 * gl + 1.0) * bessel_j_normalized(gl + 0.5, x * xi);
    };
    QuadResult rr = integrate_weighted_line(re, lp, tol, support);
    QuadResult ri = integrate_weighted_line(im, lp, tol, support);
    return {rr.value, ri.value};
}

std::complex<double> dunkl_transform(const SampledFunction& f, const LambdaParam& lp,
                                     double xi, double tol)
{
    return dunkl_transform([&](double x) { return f(x); }, f.support(), lp, xi, tol);
}

// ---------------------------------------------------------------------------
// chord-coordinate translation core
// ---------------------------------------------------------------------------

double translation_profile_integral(const LambdaParam& lp, double absx, double abst,
                                    int sgn_xt,
                                    const std::function<double(double)>& profile_of_q2,
                                    double q2_support, double v_hint, double tol)
{
    const double lam = lp.lambda;
    if (lam == 0.0)
        throw std::logic_error("translation_profile_integral: lambda = 0 has no chord form");
    const double delta2 = (absx - abst) * (absx - abst);
    const double bb = 2.0 * absx * abst;

    if (bb == 0.0) {
        // point evaluation: the odd (1 - v) part integrates to zero
        if (delta2 >= q2_support)
            return 0.0;
        const double mass = std::pow(2.0, 2.0 * lam - 1.0) * beta_fn(lam, lam);
        return profile_of_q2(delta2) * mass;
    }

    double v_end = 2.0;
    if (std::isfinite(q2_support)) {
        if (delta2 >= q2_support)
            return 0.0;
        v_end = std::min(2.0, (q2_support - delta2) / bb);
        if (v_end > 1.9)
            v_end = 2.0; // let the profile's own cutoff truncate instead
    }

    // graded panels from the profile's variation scale up to v_end
    const double v0 = std::clamp(v_hint, 1e-14, v_end) / 4.0;
    std::vector<double> breaks{0.0};
    for (double v = v0; v < v_end * 0.75; v *= 2.0)
        breaks.push_back(v);
    breaks.push_back(v_end);

    const double sg = double(sgn_xt);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1];
        const bool left_sing = (i == 0);
        const bool right_edge = (i + 2 == breaks.size()) && (v_end == 2.0);
        // endpoint weight factors are handed to the rule exactly; the
        // remaining factors never suffer cancellation on this panel
        auto G = [&](double v, double, double) {
            double g = profile_of_q2(delta2 + bb * v) * (1.0 + sg * (1.0 - v));
            if (!left_sing)
                g *= std::pow(v, lam - 1.0);
            if (!right_edge)
                g *= std::pow(2.0 - v, lam - 1.0);
            return g;
        };
        QuadResult r = integrate_power_endpoints(G, a, b, left_sing ? lam - 1.0 : 0.0,
                                                 right_edge ? lam - 1.0 : 0.0, tol);
        total += r.value;
    }
    return total;
}

namespace {

double classical_even_translate(const RealFn& phi, double x, double t, double y)
{
    // lambda = 0: ordinary translation of the even dilated profile
    return phi((x - t) / y) / y;
}

} // namespace

double translate_even(const RealFn& phi_even, const LambdaParam& lp, double x, double t,
                      double y, double support_radius, double tol)
{
    if (!(y > 0.0))
        throw std::invalid_argument("translate_even: dilation must be positive");
    if (lp.lambda == 0.0)
        return classical_even_translate(phi_even, x, t, y);

    const double absx = std::abs(x), abst = std::abs(t);
    const int sgn = (x * t > 0.0) ? 1 : (x * t < 0.0 ? -1 : 0);
    const double q2_support =
        std::isfinite(support_radius) ? (y * support_radius) * (y * support_radius)
                                      : INFINITY;
    auto profile = [&](double q2) { return phi_even(std::sqrt(q2) / y); };
    const double delta = std::abs(absx - abst);
    const double bb = 2.0 * absx * abst;
    const double v_hint =
        bb > 0.0 ? (y * y + 2.0 * y * delta) / bb : 1.0; // argument scale of the profile
    const double core = translation_profile_integral(lp, absx, abst, sgn, profile,
                                                     q2_support, v_hint, tol);
    return lp.c_prime * std::pow(y, -(2.0 * lp.lambda + 1.0)) * core;
}

// ---------------------------------------------------------------------------
// W kernel
// ---------------------------------------------------------------------------

double TranslationKernelW::sigma(double x, double t, double z)
{
    if (x == 0.0 || t == 0.0)
        return 0.0;
    return (x * x + t * t - z * z) / (2.0 * x * t);
}

double TranslationKernelW::eval(double x, double t, double z) const
{
    const double lam = lp.lambda;
    if (lam == 0.0)
        throw std::logic_error("TranslationKernelW: undefined in the classical limit");
    const double ax = std::abs(x), at = std::abs(t), az = std::abs(z);
    const double lo = std::abs(ax - at), hi = ax + at;
    if (!(az > lo && az < hi))
        return 0.0;
    const double w0 = lp.c_dprime * std::pow(ax * at * az, 1.0 - 2.0 * lam) /
                      std::pow((hi * hi - z * z) * (z * z - lo * lo), 1.0 - lam);
    return w0 * (1.0 - sigma(x, t, z) + sigma(z, x, t) + sigma(z, t, x));
}

namespace {

// c_lambda * int over |z| in (lo, hi) of h(z) W-parts, edge weights exact.
// Integrates f(z) * W(-t, x, z) |z|^{2 lam} over both signs of z.
double w_integral(const LambdaParam& lp, double x, double t, const RealFn& f, bool absval,
                  double tol)
{
    const double lam = lp.lambda;
    const double ax = std::abs(x), at = std::abs(t);
    const double lo = std::abs(ax - at), hi = ax + at;
    if (!(lo < hi))
        return 0.0;

    auto bracket = [&](double z) {
        return 1.0 - TranslationKernelW::sigma(-t, x, z) + TranslationKernelW::sigma(z, -t, x) +
               TranslationKernelW::sigma(z, x, -t);
    };
    const double front = lp.c_lambda * lp.c_dprime * std::pow(ax * at, 1.0 - 2.0 * lam);

    double total = 0.0;
    for (int side = 0; side < 2; ++side) {
        // z = s*zeta, zeta in (lo, hi), s = +-1
        const double s = side == 0 ? 1.0 : -1.0;
        auto G = [&](double zeta, double, double) {
            const double z = s * zeta;
            const double smooth = zeta * std::pow((hi + zeta) * (zeta + lo), lam - 1.0);
            const double br = bracket(z);
            return smooth * f(z) * (absval ? std::abs(br) : br);
        };
        QuadResult r = integrate_power_endpoints(G, lo, hi, lam - 1.0, lam - 1.0, tol);
        total += r.value;
    }
    return front * total;
}

} // namespace

// w_integral builds the bracket of W(-t_arg, x_arg, z); realizing W(x, -u, z)
// takes t_arg = -x, x_arg = -u.
double TranslationKernelW::abs_mass(double x, double u, double tol) const
{
    return w_integral(lp, -u, -x, [](double) { return 1.0; }, true, tol);
}

double TranslationKernelW::signed_mass(double x, double u, double tol) const
{
    return w_integral(lp, -u, -x, [](double) { return 1.0; }, false, tol);
}

double translate_general(const RealFn& f, const LambdaParam& lp, double x, double t,
                         double tol)
{
    if (lp.lambda == 0.0)
        return f(x - t);
    if (x == 0.0)
        return f(-t);
    if (t == 0.0)
        return f(x);
    return w_integral(lp, x, t, f, false, tol);
}

double translate(const SampledFunction& f, const LambdaParam& lp, double x, double t,
                 bool even_hint, double tol)
{
    if (even_hint) {
        auto [lo, hi] = f.support();
        const double r = std::max(std::abs(lo), std::abs(hi));
        for (double frac : {0.83, 0.41, 0.17}) {
            const double a = frac * r;
            const double fa = f(a), fma = f(-a);
            if (std::abs(fa - fma) > 1e-9 * (std::abs(fa) + std::abs(fma)) + 1e-12)
                throw std::invalid_argument("translate: even path requested for non-even data");
        }
        return translate_even([&](double u) { return f(u); }, lp, x, t, 1.0, r, tol);
    }
    if (x == 0.0)
        return f(-t);
    return translate_general([&](double u) { return f(u); }, lp, x, t, tol);
}

double convolve(const RealFn& f, std::optional<std::pair<double, double>> f_support,
                const RealFn& g_even, double g_support_radius, const LambdaParam& lp,
                double x, double tol)
{
    auto kernel = [&](double t) {
        return f(t) * translate_even(g_even, lp, x, t, 1.0, g_support_radius, tol * 0.1);
    };
    std::optional<std::pair<double, double>> window = f_support;
    if (std::isfinite(g_support_radius)) {
        // translation support: ||t| - |x|| <= radius
        const double ax = std::abs(x), R = g_support_radius;
        const double lo = -(ax + R), hi = ax + R;
        if (window) {
            window = std::make_pair(std::max(window->first, lo), std::min(window->second, hi));
            if (!(window->first < window->second))
                return 0.0;
        } else {
            window = std::make_pair(lo, hi);
        }
    }
    return integrate_weighted_line(kernel, lp, tol, window).value;
}

double delta_lambda_residual(const std::function<double(double, double)>& u,
                             const LambdaParam& lp, double x, double y, double h)
{
    if (!(h > 0.0))
        throw std::invalid_argument("delta_lambda_residual: step must be positive");
    if (h > 0.5 * y)
        throw std::invalid_argument("delta_lambda_residual: step too large relative to y");
    auto ux = [&](double xx) { return u(xx, y); };
    auto Du = [&](double xx) { return dunkl_derivative(ux, lp, xx, h); };
    double dxx;
    if (std::abs(x) < h)
        dxx = (1.0 + 2.0 * lp.lambda) * (Du(x + h) - Du(x - h)) / (2.0 * h);
    else
        dxx = (Du(x + h) - Du(x - h)) / (2.0 * h) + lp.lambda / x * (Du(x) - Du(-x));
    const double dyy = (u(x, y + h) - 2.0 * u(x, y) + u(x, y - h)) / (h * h);
    return dxx + dyy;
}

std::pair<double, double> cr_residuals(const std::function<double(double, double)>& u,
                                       const std::function<double(double, double)>& v,
                                       const LambdaParam& lp, double x, double y, double h)
{
    if (!(h > 0.0) || h > 0.5 * y)
        throw std::invalid_argument("cr_residuals: bad step");
    auto ux = [&](double xx) { return u(xx, y); };
    auto vx = [&](double xx) { return v(xx, y); };
    const double du = dunkl_derivative(ux, lp, x, h);
    const double dv = dunkl_derivative(vx, lp, x, h);
    const double uy = (u(x, y + h) - u(x, y - h)) / (2.0 * h);
    const double vy = (v(x, y + h) - v(x, y - h)) / (2.0 * h);
    return {du - vy, uy + dv};
}

} // namespace dunkl
