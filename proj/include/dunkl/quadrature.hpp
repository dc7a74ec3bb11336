#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace dunkl {

struct LambdaParam; // special_functions.hpp

/// Result of an adaptive integration. `converged == false` means the panel
/// budget ran out before the error estimator met the tolerance; the partial
/// value is still returned.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

using RealFn = std::function<double(double)>;

/// Fixed quadrature rule: sum_i weights[i] * f(nodes[i]).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    template <class F> double apply(F&& f) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// n-point Gauss-Legendre rule on [-1, 1]. Cached per n.
const QuadratureRule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^a (1+x)^b,
/// a, b > -1. The weight is absorbed into the returned weights. Cached.
const QuadratureRule& gauss_jacobi(int n, double a, double b);

/// Adaptive integral of f over (a, b). Points listed in `singularities`
/// (interior or endpoint) become panel boundaries whose touching panels are
/// handled by a double-exponential (tanh-sinh) rule. Good for mild
/// singularities evaluated without cancellation (e.g. a weight |x|^{2 lambda}
/// with the singular point at 0); strong power weights at nonzero endpoints
/// should go through integrate_power_endpoints instead, which treats the
/// weight exactly.
QuadResult integrate(const RealFn& f, double a, double b, double tol = 1e-9,
                     const std::vector<double>& singularities = {});

/// tanh-sinh quadrature on (a, b); never evaluates f at the endpoints.
QuadResult tanh_sinh(const RealFn& f, double a, double b, double tol = 1e-9,
                     int level_cap = 12);

/// Integrand for integrate_power_endpoints: receives the abscissa and its
/// exact distances to the two endpoints, so (x - a)- or (b - x)-dependent
/// factors can be computed without cancellation.
using PeeledFn = std::function<double(double x, double dist_left, double dist_right)>;

/// int_a^b (x-a)^{pa} (b-x)^{pb} G(x, x-a, b-x) dx with pa, pb > -1 and G
/// smooth. The power weight is handled exactly by Gauss-Jacobi end rules of
/// escalating order; no evaluation ever lands in the cancellation zone.
QuadResult integrate_power_endpoints(const PeeledFn& G, double a, double b, double pa,
                                     double pb, double tol = 1e-9);

/// c'_lambda * int_{-1}^{1} g(s) (1-s^2)^{lambda-1} (1+s) ds.
/// The normalization makes g == 1 integrate to exactly 1.
QuadResult gegenbauer_integral(const RealFn& g, const LambdaParam& lp, double tol = 1e-9);

/// c_lambda * int_R f(x) |x|^{2 lambda} dx. If `support` is given, the
/// integral is restricted to it; otherwise the tails are compactified with
/// x = u/(1-u^2).
QuadResult integrate_weighted_line(const RealFn& f, const LambdaParam& lp,
                                   double tol = 1e-9,
                                   std::optional<std::pair<double, double>> support = {});

} // namespace dunkl
