#include "dunkl/kernels.hpp"
#include "dunkl/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

double scale_map_y(const LambdaParam& lp, double x, double r)
{
    if (!(r > 0.0))
        throw std::invalid_argument("scale_map_y: r must be positive");
    const double ax = std::abs(x);
    const double breakpoint = std::pow(ax, 2.0 * lp.lambda + 1.0);
    if (r < breakpoint)
        return r * std::pow(ax, -2.0 * lp.lambda);
    return std::pow(r, 1.0 / (2.0 * lp.lambda + 1.0));
}

namespace {

// profile of the harmonic-extension kernel: P_y(u) = y^{-2l-1} p(u/y) with
// p(u) = a_lambda (1 + u^2)^{-(l+1)}; in chord coordinates the dilated
// profile evaluated at q^2 is a_lambda y^{2l+2} (y^2 + q^2)^{-(l+1)}.
double poisson_theta_core(const LambdaParam& lp, double x, double y, double t, double tol)
{
    const double lam = lp.lambda;
    const double absx = std::abs(x), abst = std::abs(t);
    const int sgn = (x * t > 0.0) ? 1 : (x * t < 0.0 ? -1 : 0);
    const double y2 = y * y;
    auto profile = [&](double q2) { return std::pow(y2 + q2, -(lam + 1.0)); };
    const double delta = std::abs(absx - abst);
    const double bb = 2.0 * absx * abst;
    const double v_hint = bb > 0.0 ? (y2 + delta * delta + y * delta) / bb : 1.0;
    return translation_profile_integral(lp, absx, abst, sgn, profile, INFINITY, v_hint, tol);
}

} // namespace

double DunklKernels::poisson(double x, double y, double t, double tol) const
{
    if (!(y > 0.0))
        throw std::invalid_argument("poisson kernel: height must be positive");
    const double lam = lp_.lambda;
    if (lam == 0.0) {
        const double d = x - t;
        return lp_.a_lambda * y / (y * y + d * d);
    }
    return lp_.c_prime * lp_.a_lambda * y * poisson_theta_core(lp_, x, y, t, tol);
}

double DunklKernels::conj_poisson(double x, double y, double t, double tol) const
{
    if (!(y > 0.0))
        throw std::invalid_argument("conjugate kernel: height must be positive");
    const double lam = lp_.lambda;
    if (lam == 0.0) {
        const double d = x - t;
        return lp_.a_lambda * d / (y * y + d * d);
    }
    return lp_.c_prime * lp_.a_lambda * (x - t) * poisson_theta_core(lp_, x, y, t, tol);
}

double DunklKernels::hilbert(double x, double t, double tol) const
{
    const double lam = lp_.lambda;
    if (x == t)
        throw std::invalid_argument("hilbert kernel: principal-value point x == t");
    if (lam == 0.0) {
        const double d = x - t;
        return lp_.a_lambda / d;
    }
    if (std::abs(x) == std::abs(t))
        throw std::invalid_argument("hilbert kernel: logarithmic point |x| == |t|");
    const double absx = std::abs(x), abst = std::abs(t);
    const int sgn = (x * t > 0.0) ? 1 : (x * t < 0.0 ? -1 : 0);
    auto profile = [&](double q2) { return std::pow(q2, -(lam + 1.0)); };
    const double delta = std::abs(absx - abst);
    const double bb = 2.0 * absx * abst;
    const double v_hint = bb > 0.0 ? (delta * delta) / bb + 1e-12 : 1.0;
    const double core =
        translation_profile_integral(lp_, absx, abst, sgn, profile, INFINITY, v_hint, tol);
    return lp_.c_prime * lp_.a_lambda * (x - t) * core;
}

double DunklKernels::scale_kernel(double r, double x, double t, double tol) const
{
    if (!(r > 0.0))
        throw std::invalid_argument("scale kernel: r must be positive");
    const double ka = poisson(x, scale_map_y(lp_, x, r), t, tol);
    const double kb = poisson(t, scale_map_y(lp_, t, r), x, tol);
    return 0.5 * r * (ka + kb);
}

std::pair<double, double> DunklKernels::split_kernels(const RealFn& phi_even_bump, double r,
                                                      double x, double t, double c0,
                                                      double tol) const
{
    if (x == 0.0)
        throw std::invalid_argument("split_kernels: x must be nonzero");
    const double y = scale_map_y(lp_, x, r);
    if (!(y < c0 * std::abs(x)))
        throw std::invalid_argument("split_kernels: height restriction y < c0 |x| violated");
    const double tp = translate_even(phi_even_bump, lp_, x, t, y, 1.0, tol);
    const double tm = translate_even(phi_even_bump, lp_, x, -t, y, 1.0, tol);
    return {r * (tp - tm), r * (tp + tm)};
}

// ---------------------------------------------------------------------------
// class checker
// ---------------------------------------------------------------------------

namespace {

struct Worst {
    double ratio = 0.0;
    double w[4] = {0, 0, 0, 0};
    void offer(double v, double r, double x, double t, double z)
    {
        if (v > ratio) {
            ratio = v;
            w[0] = r;
            w[1] = x;
            w[2] = t;
            w[3] = z;
        }
    }
};

KernelCheckRecord record_from(const std::string& name, bool passed, double measured,
                              double lo, double hi, const double* w = nullptr)
{
    KernelCheckRecord rec;
    rec.name = name;
    rec.passed = passed;
    rec.measured = measured;
    rec.lower = lo;
    rec.upper = hi;
    if (w)
        std::copy(w, w + 4, rec.witness);
    return rec;
}

} // namespace

KernelReport check_kernel_class(const KernelHandle& k, const KernelSamplingPlan& plan)
{
    KernelReport report;
    SplitMix64 root(plan.seed);
    const bool compact = k.tag == KernelHandle::Tag::compact_support;
    const double gamma = k.gamma;

    auto rand_r = [&](SplitMix64& g) {
        return std::exp(g.uniform(std::log(plan.r_log_min), std::log(plan.r_log_max)));
    };
    auto rand_x = [&](SplitMix64& g) { return g.uniform(-plan.x_range, plan.x_range); };

    // nonnegativity, size bound, symmetry
    {
        SplitMix64 g = root.split("size");
        double min_val = INFINITY;
        Worst neg, size, asym;
        for (int i = 0; i < plan.samples; ++i) {
            const double r = rand_r(g), x = rand_x(g), t = rand_x(g);
            const double v = k.eval(r, x, t);
            min_val = std::min(min_val, v);
            neg.offer(-v, r, x, t, 0);
            const double d = k.measure.distance(x, t);
            const double envelope = compact ? 1.0 : std::pow(1.0 + d / r, -(gamma + 1.0));
            size.offer(v / envelope, r, x, t, 0);
            const double vs = k.eval(r, t, x);
            asym.offer(std::abs(v - vs) / std::max({std::abs(v), std::abs(vs), 1e-300}), r, x,
                       t, 0);
        }
        report.records.push_back(
            record_from("nonnegative", neg.ratio <= 1e-12, -neg.ratio, 0, INFINITY, neg.w));
        report.records.push_back(
            record_from("size_bound_constant", std::isfinite(size.ratio), size.ratio, 0,
                        INFINITY, size.w));
        report.records.push_back(
            record_from("symmetry", asym.ratio <= 1e-8, asym.ratio, 0, 1e-8, asym.w));
    }

    // on-diagonal lower bound over an (r, x) log grid
    {
        SplitMix64 g = root.split("diag");
        double lo = INFINITY;
        double w[4] = {0, 0, 0, 0};
        for (int i = 0; i < plan.samples / 4; ++i) {
            const double r = rand_r(g), x = rand_x(g);
            const double v = k.eval(r, x, x);
            if (v < lo) {
                lo = v;
                w[0] = r;
                w[1] = x;
                w[2] = x;
            }
        }
        report.records.push_back(record_from("diagonal_lower_bound", lo > 0.0, lo, 0,
                                             INFINITY, w));
    }

    // compact support: vanishes beyond distance r
    if (compact) {
        SplitMix64 g = root.split("support");
        Worst out;
        for (int i = 0; i < plan.samples / 2; ++i) {
            const double r = rand_r(g), x = rand_x(g);
            const double t = rand_x(g) * 3.0;
            if (k.measure.distance(x, t) <= r)
                continue;
            out.offer(std::abs(k.eval(r, x, t)), r, x, t, 0);
        }
        report.records.push_back(
            record_from("compact_support", out.ratio <= 1e-12, out.ratio, 0, 1e-12, out.w));
    }

    // smoothness condition over admissible pairs: ratio of |K(r,x,t)-K(r,x,z)|
    // to (d(t,z)/r)^gamma (1 + d(x,t)/r)^{-2 gamma - 1} stays bounded
    {
        SplitMix64 g = root.split("pairs");
        Worst worst;
        int admissible = 0;
        for (int i = 0; i < plan.samples; ++i) {
            const double r = rand_r(g), x = rand_x(g), t = rand_x(g);
            // offset z near t to probe small separations
            const double step = g.uniform(-1.0, 1.0) *
                                std::pow(10.0, g.uniform(-8.0, 0.0));
            const double z = t + step * (std::abs(t) + 1.0);
            const double dtz = k.measure.distance(t, z);
            const double dxt = k.measure.distance(x, t);
            const double dxz = k.measure.distance(x, z);
            if (dtz / r > plan.admissible_c3 * std::min(1.0 + dxt / r, 1.0 + dxz / r))
                continue;
            if (dtz == 0.0)
                continue;
            ++admissible;
            const double diff = std::abs(k.eval(r, x, t) - k.eval(r, x, z));
            const double denom =
                compact ? std::pow(dtz / r, gamma)
                        : std::pow(dtz / r, gamma) * std::pow(1.0 + dxt / r, -2.0 * gamma - 1.0);
            worst.offer(diff / denom, r, x, t, z);
        }
        if (admissible == 0)
            throw std::runtime_error("check_kernel_class: empty admissible-pair set");
        report.records.push_back(record_from(
            "smoothness_ratio_bound",
            std::isfinite(worst.ratio) && worst.ratio <= plan.smoothness_ratio_cap,
            worst.ratio, 0, plan.smoothness_ratio_cap, worst.w));
    }

    // derived two-argument difference bound at a chosen alpha in (0, gamma)
    if (plan.alpha > 0.0 && plan.alpha < gamma) {
        SplitMix64 g = root.split("firstarg");
        Worst worst;
        for (int i = 0; i < plan.samples / 2; ++i) {
            const double r = rand_r(g), y = rand_x(g), a = rand_x(g);
            const double step = g.uniform(-1.0, 1.0) * std::pow(10.0, g.uniform(-3.0, 0.0));
            const double b = a + step * (std::abs(a) + 1.0);
            const double dab = k.measure.distance(a, b);
            if (dab == 0.0 || dab > r)
                continue;
            const double day = k.measure.distance(a, y);
            const double diff = std::abs(k.eval(r, a, y) - k.eval(r, b, y));
            const double denom = std::pow(dab / r, plan.alpha) *
                                 std::pow(1.0 + day / r, -(gamma - plan.alpha) - 1.0);
            worst.offer(diff / denom, r, a, y, b);
        }
        report.records.push_back(record_from("first_argument_difference_bound",
                                             std::isfinite(worst.ratio), worst.ratio, 0,
                                             INFINITY, worst.w));
    }

    // decay exponent: log-log tail fit of t -> k(r, x, t) against 1 + d(x,t)/r
    if (!compact) {
        const double r = plan.decay_fit_r, x = plan.decay_fit_x;
        std::vector<double> xs, ys;
        for (int i = 0; i < plan.decay_fit_points; ++i) {
            const double t =
                x + std::pow(10.0, 0.3 + 1.4 * i / double(plan.decay_fit_points - 1));
            const double base = 1.0 + k.measure.distance(x, t) / r;
            const double v = k.eval(r, x, t);
            if (v > 0.0) {
                xs.push_back(base);
                ys.push_back(v);
            }
        }
        double slope = NAN;
        if (xs.size() >= 3) {
            slope = fit_loglog(xs, ys).slope;
        }
        report.records.push_back(record_from("decay_exponent", std::isfinite(slope), slope,
                                             -INFINITY, 0.0));
    }

    // smoothness exponent: difference quotients across the reflection point
    {
        const double r = plan.decay_fit_r, x = plan.decay_fit_x;
        std::vector<double> ds, diffs;
        const double v0 = k.eval(r, x, 0.0);
        for (int i = 0; i < plan.holder_fit_points; ++i) {
            const double delta = std::pow(10.0, -3.0 + 2.4 * i / double(plan.holder_fit_points - 1)) *
                                 std::pow(r, k.measure.kind() == WeightedMeasure::Kind::dunkl
                                                 ? 1.0 / (2.0 * k.measure.lambda() + 1.0)
                                                 : 1.0);
            const double d = k.measure.distance(delta, 0.0);
            const double diff = std::abs(k.eval(r, x, delta) - v0);
            if (d > 0.0 && diff > 0.0) {
                ds.push_back(d / r);
                diffs.push_back(diff);
            }
        }
        double slope = NAN;
        if (ds.size() >= 3)
            slope = fit_loglog(ds, diffs).slope;
        report.records.push_back(record_from("smoothness_exponent", std::isfinite(slope),
                                             slope, 0.0, INFINITY));
    }

    return report;
}

double mollify_k1(const KernelHandle& k, const WeightedMeasure& m, double tau, double x,
                  double r, double y)
{
    if (!(tau > 0.0))
        throw std::invalid_argument("mollify_k1: tau must be positive");
    if (tau >= r)
        throw std::invalid_argument("mollify_k1: tau >= r is meaningless smoothing");

    // normalized smooth bump on (-1, 1)
    auto rho = [](double w) {
        const double q = 1.0 - w * w;
        return q > 0.0 ? std::exp(-1.0 / q) : 0.0;
    };
    static const double rho_mass = [] {
        auto rb = [](double w) {
            const double q = 1.0 - w * w;
            return q > 0.0 ? std::exp(-1.0 / q) : 0.0;
        };
        return integrate(rb, -1.0, 1.0, 1e-12).value;
    }();

    // pullback coordinates: w_i = mu(center_i, t_i) / tau
    const QuadratureRule& gl = gauss_legendre(32);
    const double Mx = m.antiderivative(x), My = m.antiderivative(y);
    double acc = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double w1 = gl.nodes[i];
        const double t1 = m.inverse_antiderivative(Mx - tau * w1);
        double inner = 0.0;
        for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
            const double w2 = gl.nodes[j];
            const double t2 = m.inverse_antiderivative(My - tau * w2);
            inner += gl.weights[j] * rho(w2) * k.eval(r, t1, t2);
        }
        acc += gl.weights[i] * rho(w1) * inner;
    }
    return acc / (rho_mass * rho_mass);
}

} // namespace dunkl
