#include "dunkl/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

SampledFunction::SampledFunction(std::vector<double> nodes, std::vector<double> values,
                                 Interp interp)
    : nodes_(std::move(nodes)), values_(std::move(values)), interp_(interp)
{
    if (nodes_.size() != values_.size() || nodes_.size() < 2)
        throw std::invalid_argument("SampledFunction: need >= 2 matching nodes/values");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw std::invalid_argument("SampledFunction: nodes must be strictly increasing");
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("SampledFunction: non-finite value");
    if (interp_ == Interp::cubic)
        build_spline();
}

SampledFunction SampledFunction::from_function(const std::function<double(double)>& f,
                                               double a, double b, int n, Interp interp)
{
    if (n < 2 || !(a < b))
        throw std::invalid_argument("SampledFunction::from_function: bad grid");
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = a + (b - a) * i / double(n - 1);
        ys[i] = f(xs[i]);
    }
    return SampledFunction(std::move(xs), std::move(ys), interp);
}

void SampledFunction::build_spline()
{
    const std::size_t n = nodes_.size();
    second_.assign(n, 0.0);
    std::vector<double> u(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double sig = (nodes_[i] - nodes_[i - 1]) / (nodes_[i + 1] - nodes_[i - 1]);
        const double p = sig * second_[i - 1] + 2.0;
        second_[i] = (sig - 1.0) / p;
        u[i] = (values_[i + 1] - values_[i]) / (nodes_[i + 1] - nodes_[i]) -
               (values_[i] - values_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
        u[i] = (6.0 * u[i] / (nodes_[i + 1] - nodes_[i - 1]) - sig * u[i - 1]) / p;
    }
    for (std::size_t k = n - 1; k-- > 1;)
        second_[k] = second_[k] * second_[k + 1] + u[k];
    second_.front() = second_.back() = 0.0;
}

double SampledFunction::operator()(double x) const
{
    if (nodes_.empty() || x < nodes_.front() || x > nodes_.back())
        return 0.0;
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    std::size_t hi = std::min<std::size_t>(it - nodes_.begin(), nodes_.size() - 1);
    if (hi == 0)
        hi = 1;
    const std::size_t lo = hi - 1;
    const double h = nodes_[hi] - nodes_[lo];
    const double a = (nodes_[hi] - x) / h, b = (x - nodes_[lo]) / h;
    if (interp_ == Interp::linear)
        return a * values_[lo] + b * values_[hi];
    return a * values_[lo] + b * values_[hi] +
           ((a * a * a - a) * second_[lo] + (b * b * b - b) * second_[hi]) * h * h / 6.0;
}

SampledFunction SampledFunction::abs() const
{
    SampledFunction out = *this;
    for (double& v : out.values_)
        v = std::abs(v);
    if (out.interp_ == Interp::cubic)
        out.build_spline();
    return out;
}

SampledFunction SampledFunction::scaled(double c) const
{
    SampledFunction out = *this;
    for (double& v : out.values_)
        v *= c;
    for (double& s : out.second_)
        s *= c;
    return out;
}

} // namespace dunkl
