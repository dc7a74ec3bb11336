#include "dunkl/measure.hpp"
#include "dunkl/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

double brent_solve(const std::function<double(double)>& g, double a, double b, double tol,
                   int max_iter)
{
    double fa = g(a), fb = g(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if (fa * fb > 0.0)
        throw std::runtime_error("brent_solve: root not bracketed");
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * 1.1e-16 * std::abs(b) + 0.5 * tol * std::max(1.0, std::abs(b));
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = g(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw std::runtime_error("brent_solve: no convergence within iteration budget");
}

namespace {

double require_finite(double x, const char* what)
{
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) + ": non-finite input");
    return x;
}

} // namespace

WeightedMeasure WeightedMeasure::dunkl_measure(double lambda)
{
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("dunkl_measure: lambda must be finite and >= 0");
    WeightedMeasure m;
    m.kind_ = Kind::dunkl;
    m.lambda_ = lambda;
    const double l = lambda;
    m.density_ = [l](double x) { return (2.0 * l + 1.0) * std::pow(std::abs(x), 2.0 * l); };
    m.antiderivative_ = [l](double x) {
        return std::copysign(std::pow(std::abs(x), 2.0 * l + 1.0), x);
    };
    m.inverse_ = [l](double v) {
        return std::copysign(std::pow(std::abs(v), 1.0 / (2.0 * l + 1.0)), v);
    };
    return m;
}

WeightedMeasure WeightedMeasure::lebesgue()
{
    WeightedMeasure m;
    m.kind_ = Kind::lebesgue;
    m.density_ = [](double) { return 1.0; };
    m.antiderivative_ = [](double x) { return x; };
    m.inverse_ = [](double v) { return v; };
    return m;
}

WeightedMeasure WeightedMeasure::custom(std::function<double(double)> density,
                                        std::function<double(double)> antiderivative,
                                        std::function<double(double)> inverse)
{
    if (!density || !antiderivative)
        throw std::invalid_argument("custom measure: density and antiderivative required");
    WeightedMeasure m;
    m.kind_ = Kind::custom;
    m.density_ = std::move(density);
    m.antiderivative_ = std::move(antiderivative);
    m.inverse_ = std::move(inverse);
    return m;
}

WeightedMeasure WeightedMeasure::custom_numeric(std::function<double(double)> density,
                                                double lo, double hi, int grid_points)
{
    if (!density || !(lo < hi) || grid_points < 3)
        throw std::invalid_argument("custom_numeric: bad arguments");
    // cumulative Gauss-Legendre on a cached grid, interpolated monotonically
    auto xs = std::make_shared<std::vector<double>>();
    auto Ms = std::make_shared<std::vector<double>>();
    xs->resize(grid_points);
    Ms->resize(grid_points);
    const QuadratureRule& gl = gauss_legendre(16);
    double acc = 0.0;
    (*xs)[0] = lo;
    (*Ms)[0] = 0.0;
    for (int i = 1; i < grid_points; ++i) {
        const double a = lo + (hi - lo) * (i - 1) / double(grid_points - 1);
        const double b = lo + (hi - lo) * i / double(grid_points - 1);
        const double mid = 0.5 * (a + b), hal = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t k = 0; k < gl.nodes.size(); ++k)
            s += gl.weights[k] * density(mid + hal * gl.nodes[k]);
        acc += hal * s;
        (*xs)[i] = b;
        (*Ms)[i] = acc;
    }
    // shift so M(0) = 0 when 0 is inside the grid (odd-like normalization)
    double shift = 0.0;
    if (lo < 0.0 && hi > 0.0) {
        auto it = std::lower_bound(xs->begin(), xs->end(), 0.0);
        const std::size_t j = it - xs->begin();
        shift = (*Ms)[std::min(j, Ms->size() - 1)];
    }
    for (double& v : *Ms)
        v -= shift;

    auto interp = [xs, Ms](double x) {
        if (x <= xs->front())
            return Ms->front();
        if (x >= xs->back())
            return Ms->back();
        auto it = std::upper_bound(xs->begin(), xs->end(), x);
        const std::size_t hi_i = it - xs->begin();
        const std::size_t lo_i = hi_i - 1;
        const double t = (x - (*xs)[lo_i]) / ((*xs)[hi_i] - (*xs)[lo_i]);
        return (1.0 - t) * (*Ms)[lo_i] + t * (*Ms)[hi_i];
    };
    WeightedMeasure m;
    m.kind_ = Kind::custom;
    m.density_ = std::move(density);
    m.antiderivative_ = interp;
    m.inverse_ = nullptr;
    return m;
}

double WeightedMeasure::density(double x) const { return density_(require_finite(x, "density")); }

double WeightedMeasure::antiderivative(double x) const
{
    return antiderivative_(require_finite(x, "antiderivative"));
}

double WeightedMeasure::inverse_antiderivative(double v) const
{
    require_finite(v, "inverse_antiderivative");
    if (inverse_)
        return inverse_(v);
    // bracket then Brent on M(u) = v
    double lo = -1.0, hi = 1.0;
    for (int i = 0; i < 200 && antiderivative_(lo) > v; ++i)
        lo *= 2.0;
    for (int i = 0; i < 200 && antiderivative_(hi) < v; ++i)
        hi *= 2.0;
    if (antiderivative_(lo) > v || antiderivative_(hi) < v)
        throw std::runtime_error("inverse_antiderivative: could not bracket");
    return brent_solve([&](double u) { return antiderivative_(u) - v; }, lo, hi, 1e-12);
}

double WeightedMeasure::mu_signed(double x, double y) const
{
    require_finite(x, "mu_signed");
    require_finite(y, "mu_signed");
    return antiderivative_(x) - antiderivative_(y);
}

double WeightedMeasure::distance(double x, double y) const
{
    return std::abs(mu_signed(x, y));
}

BallInterval WeightedMeasure::ball(double x0, double r0) const
{
    require_finite(x0, "ball");
    if (!(r0 > 0.0))
        throw std::invalid_argument("ball: radius must be positive");
    const double m0 = antiderivative_(x0);
    BallInterval b;
    b.center = x0;
    b.radius = r0;
    b.left = inverse_antiderivative(m0 - r0);
    b.right = inverse_antiderivative(m0 + r0);
    return b;
}

double WeightedMeasure::set_measure(double a, double b) const
{
    return 0.5 * (antiderivative_(b) - antiderivative_(a));
}

QuadResult WeightedMeasure::integrate_set(const RealFn& f, double a, double b, double tol) const
{
    if (!(a < b)) {
        if (a == b)
            return {};
        std::swap(a, b);
    }
    auto integrand = [&](double x) { return 0.5 * f(x) * density_(x); };
    std::vector<double> sing;
    if (kind_ == Kind::dunkl && a < 0.0 && b > 0.0 && lambda_ != 0.0)
        sing.push_back(0.0);
    return integrate(integrand, a, b, tol, sing);
}

std::vector<double> WeightedMeasure::hl_maximal(const SampledFunction& f,
                                                const std::vector<double>& grid,
                                                double sweep_ratio) const
{
    if (grid.empty())
        throw std::invalid_argument("hl_maximal: empty grid");
    if (!(sweep_ratio > 1.0))
        throw std::invalid_argument("hl_maximal: sweep ratio must exceed 1");

    auto [slo, shi] = f.support();
    // radius range: from resolving the support to covering it from anywhere
    double dmax = 0.0;
    for (double x : grid)
        dmax = std::max({dmax, distance(x, slo), distance(x, shi)});
    const double supp_meas = std::abs(mu_signed(shi, slo));
    const double r_min = std::max(supp_meas * 1e-4, 1e-12);
    const double r_max = 2.0 * (dmax + supp_meas) + r_min;
    if (!(r_min < r_max))
        throw std::invalid_argument("hl_maximal: degenerate radius sweep");

    SampledFunction fabs = f.abs();
    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        double best = 0.0;
        for (double r = r_min; r <= r_max; r *= sweep_ratio) {
            BallInterval b = ball(x, r);
            const double lo = std::max(b.left, slo), hi = std::min(b.right, shi);
            if (lo >= hi)
                continue;
            const double avg = integrate_set([&](double t) { return fabs(t); }, lo, hi,
                                             1e-8)
                                   .value /
                               r;
            best = std::max(best, avg);
        }
        out[i] = best;
    }
    return out;
}

} // namespace dunkl
