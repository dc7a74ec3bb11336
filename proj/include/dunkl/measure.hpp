#pragma once

#include "dunkl/quadrature.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace dunkl {

class SampledFunction;

/// Ball in the homogeneous space, stored with its exact Euclidean endpoints.
struct BallInterval {
    double center = 0.0;
    double radius = 0.0;      // in measure units
    double left = 0.0;        // Euclidean left endpoint  (center - delta2)
    double right = 0.0;       // Euclidean right endpoint (center + delta1)
    double delta1() const { return right - center; }
    double delta2() const { return center - left; }
};

/// A Radon density on R with a strictly increasing antiderivative M that is
/// a continuous bijection of R. Supplies the two-point function
/// mu(x, y) = M(x) - M(y), the quasi-distance d(x, y) = |mu(x, y)|, balls,
/// and set integration. Set-measure integrals carry density M'/2 so that
/// mu(B(x, r)) == r exactly for every centered ball.
class WeightedMeasure {
  public:
    enum class Kind { dunkl, lebesgue, custom };

    static WeightedMeasure dunkl_measure(double lambda);
    static WeightedMeasure lebesgue();
    /// Custom density with a closed-form antiderivative and its inverse
    /// (pass nullptr to have the inverse root-solved).
    static WeightedMeasure custom(std::function<double(double)> density,
                                  std::function<double(double)> antiderivative,
                                  std::function<double(double)> inverse = nullptr);
    /// Custom density with the antiderivative built by cumulative quadrature
    /// on a cached grid spanning [lo, hi].
    static WeightedMeasure custom_numeric(std::function<double(double)> density, double lo,
                                          double hi, int grid_points = 4097);

    Kind kind() const { return kind_; }
    double lambda() const { return lambda_; }

    double density(double x) const;
    double antiderivative(double x) const;
    /// Solves antiderivative(u) = v (closed form when available, Brent
    /// otherwise, 1e-12 relative tolerance).
    double inverse_antiderivative(double v) const;

    /// mu(x, y) = antiderivative(x) - antiderivative(y); antisymmetric.
    double mu_signed(double x, double y) const;
    /// d(x, y) = |mu(x, y)|.
    double distance(double x, double y) const;

    /// B(x0, r0) as an exact Euclidean interval; r0 > 0.
    BallInterval ball(double x0, double r0) const;

    /// Measure of a Euclidean interval (a, b): (M(b) - M(a)) / 2.
    double set_measure(double a, double b) const;

    /// int_a^b f d(mu) with the M'/2 density.
    QuadResult integrate_set(const RealFn& f, double a, double b, double tol = 1e-9) const;

    /// Hardy-Littlewood maximal function sup_r mu(B)^{-1}-normalized averages,
    /// swept geometrically (ratio 2^{1/8}) over [r_min, r_max].
    std::vector<double> hl_maximal(const SampledFunction& f,
                                   const std::vector<double>& grid,
                                   double sweep_ratio = 1.0905077326652577) const;

  private:
    WeightedMeasure() = default;

    Kind kind_ = Kind::lebesgue;
    double lambda_ = 0.0;
    std::function<double(double)> density_;
    std::function<double(double)> antiderivative_;
    std::function<double(double)> inverse_;
};

/// Brent-style bracketing root solve of g on [a, b]; g(a), g(b) must differ
/// in sign. Relative tolerance 1e-12.
double brent_solve(const std::function<double(double)>& g, double a, double b,
                   double tol = 1e-12, int max_iter = 200);

} // namespace dunkl
