#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace dunkl {

/// A function known on a sorted (possibly nonuniform) grid, evaluated by
/// linear or natural-cubic interpolation, and identically zero outside its
/// support interval.
class SampledFunction {
  public:
    enum class Interp { linear, cubic };

    SampledFunction() = default;
    SampledFunction(std::vector<double> nodes, std::vector<double> values,
                    Interp interp = Interp::cubic);

    /// Sample a callable on n uniformly spaced nodes over [a, b].
    static SampledFunction from_function(const std::function<double(double)>& f, double a,
                                         double b, int n, Interp interp = Interp::cubic);

    double operator()(double x) const;

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }
    std::pair<double, double> support() const { return {nodes_.front(), nodes_.back()}; }
    bool empty() const { return nodes_.empty(); }

    /// Pointwise |f|.
    SampledFunction abs() const;
    /// Pointwise scaling.
    SampledFunction scaled(double c) const;

  private:
    void build_spline();

    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> second_; // natural cubic second derivatives
    Interp interp_ = Interp::cubic;
};

} // namespace dunkl
