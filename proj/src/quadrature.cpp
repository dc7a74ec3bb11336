#include "dunkl/quadrature.hpp"
#include "dunkl/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

namespace dunkl {

namespace {

// ---------------------------------------------------------------------------
// Golub-Welsch: nodes/weights from the symmetric tridiagonal Jacobi matrix.
// Implicit-shift QL on (d, e), accumulating only the first eigenvector row.
// ---------------------------------------------------------------------------
void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                             std::vector<double>& z)
{
    const int n = static_cast<int>(d.size());
    if (n == 0)
        return;
    e.resize(n, 0.0); // e[n-1] used as workspace

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("gauss rule: tridiagonal QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // sort ascending, carrying z along
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n), zs(n);
    for (int i = 0; i < n; ++i) {
        ds[i] = d[idx[i]];
        zs[i] = z[idx[i]];
    }
    d = std::move(ds);
    z = std::move(zs);
}

QuadratureRule build_gauss_jacobi(int n, double a, double b)
{
    if (n < 1)
        throw std::invalid_argument("gauss_jacobi: need n >= 1");
    if (a <= -1.0 || b <= -1.0)
        throw std::invalid_argument("gauss_jacobi: weight exponents must exceed -1");

    const double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + log_gamma(a + 1.0) +
                                log_gamma(b + 1.0) - log_gamma(a + b + 2.0));

    std::vector<double> diag(n), sub(n > 1 ? n - 1 : 0);
    const double ab = a + b;
    diag[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        diag[k] = (b * b - a * a) / den;
    }
    for (int k = 1; k < n; ++k) {
        double beta;
        if (k == 1)
            beta = 4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        else {
            const double t = 2.0 * k + ab;
            beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
        }
        sub[k - 1] = std::sqrt(beta);
    }

    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    tridiag_eigen_first_row(diag, sub, z);

    QuadratureRule rule;
    rule.nodes = diag;
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i)
        rule.weights[i] = mu0 * z[i] * z[i];
    return rule;
}

std::mutex rule_cache_mutex;

// ---------------------------------------------------------------------------
// Adaptive Gauss-Legendre with a worst-panel-first heap; panel error is the
// GL21 vs GL10 discrepancy.
// ---------------------------------------------------------------------------
struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel make_panel(const RealFn& f, double a, double b, long& evals)
{
    const QuadratureRule& g21 = gauss_legendre(21);
    const QuadratureRule& g10 = gauss_legendre(10);
    const double mid = 0.5 * (a + b), hal = 0.5 * (b - a);
    double v21 = 0, v10 = 0;
    for (std::size_t i = 0; i < g21.nodes.size(); ++i)
        v21 += g21.weights[i] * f(mid + hal * g21.nodes[i]);
    for (std::size_t i = 0; i < g10.nodes.size(); ++i)
        v10 += g10.weights[i] * f(mid + hal * g10.nodes[i]);
    evals += 31;
    v21 *= hal;
    v10 *= hal;
    return Panel{a, b, v21, std::abs(v21 - v10)};
}

QuadResult adaptive_gl(const RealFn& f, double a, double b, double tol_rel, double tol_abs,
                       long max_evals)
{
    QuadResult res;
    std::priority_queue<Panel> heap;
    heap.push(make_panel(f, a, b, res.evaluations));
    double total = heap.top().value, toterr = heap.top().err;

    while (toterr > std::max(tol_rel * std::abs(total), tol_abs)) {
        if (res.evaluations > max_evals || heap.top().err <= 0.0) {
            res.converged = false;
            break;
        }
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        toterr -= worst.err;
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) { // interval at rounding limit
            total += worst.value;
            toterr += worst.err;
            res.converged = false;
            break;
        }
        Panel left = make_panel(f, worst.a, m, res.evaluations);
        Panel right = make_panel(f, m, worst.b, res.evaluations);
        total += left.value + right.value;
        toterr += left.err + right.err;
        heap.push(left);
        heap.push(right);
    }
    res.value = total;
    res.error_estimate = toterr;
    return res;
}

} // namespace

const QuadratureRule& gauss_legendre(int n)
{
    return gauss_jacobi(n, 0.0, 0.0);
}

const QuadratureRule& gauss_jacobi(int n, double a, double b)
{
    static std::map<std::tuple<int, double, double>, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(rule_cache_mutex);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_gauss_jacobi(n, a, b)).first;
    return it->second;
}

QuadResult tanh_sinh(const RealFn& f, double a, double b, double tol, int level_cap)
{
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b))
        throw std::invalid_argument("tanh_sinh: need finite a < b");

    const double hal = 0.5 * (b - a);
    const double tmax = 6.1; // weight underflows beyond
    QuadResult res;

    // abscissa and weight at parameter t, with endpoint-stable distances
    auto node = [&](double t, double& x, double& w) -> bool {
        const double u = 0.5 * M_PI * std::sinh(t);
        const double ch = std::cosh(u);
        w = hal * 0.5 * M_PI * std::cosh(t) / (ch * ch);
        // 1 - tanh(u) = 2 / (e^{2u} + 1)
        const double dright = hal * 2.0 / (std::exp(2.0 * u) + 1.0);
        const double dleft = hal * 2.0 / (std::exp(-2.0 * u) + 1.0);
        x = (u >= 0.0) ? b - dright : a + dleft;
        return x > a && x < b && w > 0.0 && std::isfinite(w);
    };

    double h = 1.0;
    double sum = 0.0;
    {
        double x, w;
        if (node(0.0, x, w))
            sum += w * f(x), ++res.evaluations;
        for (double t = h; t <= tmax; t += h) {
            for (double tt : {t, -t}) {
                if (node(tt, x, w)) {
                    sum += w * f(x);
                    ++res.evaluations;
                }
            }
        }
    }
    double prev = sum * h;
    res.converged = false;
    for (int level = 1; level <= level_cap; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) {
            double x, w;
            for (double tt : {t, -t}) {
                if (node(tt, x, w)) {
                    add += w * f(x);
                    ++res.evaluations;
                }
            }
        }
        sum += add;
        const double cur = sum * h;
        const double diff = std::abs(cur - prev);
        prev = cur;
        res.error_estimate = diff;
        if (diff <= std::max(tol * std::abs(cur), 1e-15 * std::abs(cur) + 1e-300)) {
            res.converged = true;
            break;
        }
    }
    res.value = prev;
    return res;
}

QuadResult integrate(const RealFn& f, double a, double b, double tol,
                     const std::vector<double>& singularities)
{
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::invalid_argument("integrate: non-finite interval");
    if (!(a < b)) {
        if (a == b)
            return {};
        throw std::invalid_argument("integrate: need a < b");
    }

    std::vector<double> cuts{a, b};
    for (double s : singularities)
        if (s >= a && s <= b)
            cuts.push_back(s);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto is_sing = [&](double x) {
        for (double s : singularities)
            if (s == x)
                return true;
        return false;
    };

    QuadResult total;
    const double tol_abs = std::max(1e-12 * tol / 1e-9, 1e-300);
    const int nseg = static_cast<int>(cuts.size()) - 1;
    for (int i = 0; i < nseg; ++i) {
        const double s0 = cuts[i], s1 = cuts[i + 1];
        if (s0 == s1)
            continue;
        QuadResult part;
        if (is_sing(s0) || is_sing(s1)) {
            part = tanh_sinh(f, s0, s1, tol / nseg);
        } else {
            part = adaptive_gl(f, s0, s1, tol, tol_abs / nseg, 400000);
        }
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.evaluations += part.evaluations;
        total.converged = total.converged && part.converged;
    }
    return total;
}

QuadResult integrate_power_endpoints(const PeeledFn& G, double a, double b, double pa,
                                     double pb, double tol)
{
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b))
        throw std::invalid_argument("integrate_power_endpoints: need finite a < b");
    if (pa <= -1.0 || pb <= -1.0)
        throw std::invalid_argument("integrate_power_endpoints: exponents must exceed -1");

    static const int ladder[] = {12, 18, 27, 40, 60, 90, 135, 202, 303};
    const double mid = 0.5 * (a + b), hal = 0.5 * (b - a);
    const double scale = std::pow(hal, pa + pb + 1.0);

    QuadResult res;
    res.converged = false;
    double prev = 0.0;
    bool have_prev = false;
    for (int n : ladder) {
        const QuadratureRule& rule = gauss_jacobi(n, pb, pa);
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i];
            const double dl = hal * (1.0 + u), dr = hal * (1.0 - u);
            s += rule.weights[i] * G(mid + hal * u, dl, dr);
        }
        s *= scale;
        res.evaluations += n;
        if (have_prev) {
            res.error_estimate = std::abs(s - prev);
            if (res.error_estimate <= std::max(tol * std::abs(s), 1e-300)) {
                res.value = s;
                res.converged = true;
                return res;
            }
        }
        prev = s;
        have_prev = true;
    }
    res.value = prev;
    return res;
}

QuadResult gegenbauer_integral(const RealFn& g, const LambdaParam& lp, double tol)
{
    if (lp.lambda == 0.0) {
        // weight degenerates to the point mass at s = 1
        QuadResult r;
        r.value = g(1.0);
        r.evaluations = 1;
        return r;
    }
    const double lam = lp.lambda;
    // (1+s)(1-s^2)^{lambda-1} = (1+s)^lambda (1-s)^{lambda-1}, split at 0 so
    // each endpoint's power factor is exact and the other is cancellation-free
    QuadResult left = integrate_power_endpoints(
        [&](double s, double, double) { return g(s) * std::pow(1.0 - s, lam - 1.0); },
        -1.0, 0.0, lam, 0.0, tol);
    QuadResult right = integrate_power_endpoints(
        [&](double s, double, double) { return g(s) * std::pow(1.0 + s, lam); }, 0.0, 1.0,
        0.0, lam - 1.0, tol);
    QuadResult r;
    r.value = lp.c_prime * (left.value + right.value);
    r.error_estimate = lp.c_prime * (left.error_estimate + right.error_estimate);
    r.evaluations = left.evaluations + right.evaluations;
    r.converged = left.converged && right.converged;
    return r;
}

QuadResult integrate_weighted_line(const RealFn& f, const LambdaParam& lp, double tol,
                                   std::optional<std::pair<double, double>> support)
{
    const double lam = lp.lambda;
    const double cl = lp.c_lambda;

    if (support) {
        auto [A, B] = *support;
        if (!(A < B))
            return {};
        auto integrand = [&, lam, cl](double x) {
            return cl * f(x) * std::pow(std::abs(x), 2.0 * lam);
        };
        std::vector<double> sing;
        if (A < 0.0 && B > 0.0 && lam != 0.0)
            sing.push_back(0.0);
        return integrate(integrand, A, B, tol, sing);
    }

    // folded core [0, 1], weight singular at 0
    auto core = [&, lam, cl](double x) {
        return cl * (f(x) + f(-x)) * std::pow(x, 2.0 * lam);
    };
    QuadResult r1 = integrate(core, 0.0, 1.0, tol, {0.0});

    // tails via x = u / (1 - u^2), u in (u1, 1), x(u1) = 1
    const double u1 = 0.5 * (std::sqrt(5.0) - 1.0);
    auto tail = [&, lam, cl](double u) {
        const double om = 1.0 - u * u;
        const double x = u / om;
        const double jac = (1.0 + u * u) / (om * om);
        return cl * (f(x) + f(-x)) * std::pow(x, 2.0 * lam) * jac;
    };
    QuadResult r2 = integrate(tail, u1, 1.0, tol, {1.0});

    QuadResult r;
    r.value = r1.value + r2.value;
    r.error_estimate = r1.error_estimate + r2.error_estimate;
    r.evaluations = r1.evaluations + r2.evaluations;
    r.converged = r1.converged && r2.converged;
    return r;
}

} // namespace dunkl
