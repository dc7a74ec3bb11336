#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dunkl {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
};

/// Ordinary least squares y = slope*x + intercept.
inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need at least two matching points");
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = double(n) * sxx - sx * sx;
    if (det == 0.0)
        throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = (double(n) * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / double(n);
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss += r * r;
    }
    f.residual_rms = std::sqrt(ss / double(n));
    return f;
}

/// Least-squares slope of log|y| against log x, skipping nonpositive entries.
/// Requires the surviving abscissae to span at least `min_decades` decades.
inline LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y,
                          double min_decades = 1.0)
{
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0 && std::abs(y[i]) > 0.0 && std::isfinite(y[i])) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(std::abs(y[i])));
        }
    }
    if (lx.size() < 2)
        throw std::invalid_argument("fit_loglog: fewer than two usable points");
    double lo = lx.front(), hi = lx.front();
    for (double v : lx) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi - lo < min_decades * std::log(10.0))
        throw std::invalid_argument("fit_loglog: abscissa span below required decades");
    return fit_line(lx, ly);
}

} // namespace dunkl
