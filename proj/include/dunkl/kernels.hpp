#pragma once

#include "dunkl/measure.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/rng.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dunkl {

/// Height of the harmonic-extension scale map: y = r |x|^{-2 lambda} below
/// the breakpoint r = |x|^{2 lambda + 1}, y = r^{1/(2 lambda + 1)} above.
double scale_map_y(const LambdaParam& lp, double x, double r);

/// All closed-form kernels for one parameter value. Construction is cheap;
/// the object is immutable and safe to share across threads.
class DunklKernels {
  public:
    explicit DunklKernels(const LambdaParam& lp) : lp_(lp) {}

    const LambdaParam& param() const { return lp_; }

    /// (tau_x P_y)(-t): positive, unit weighted mass, symmetric under the
    /// fixed-height (x, t) swap. y > 0 required.
    double poisson(double x, double y, double t, double tol = 1e-10) const;

    /// (tau_x Q_y)(-t): the conjugate kernel, carrying the (x - t) factor.
    double conj_poisson(double x, double y, double t, double tol = 1e-10) const;

    /// Boundary singular-integral kernel h(x, t), x != t; homogeneous of
    /// degree -(2 lambda + 1); sign equals sgn(x - t).
    double hilbert(double x, double t, double tol = 1e-10) const;

    /// Scale-normalized kernel: the mean of r (tau_x P_{y(x,r)})(-t) over the
    /// two orientations of the scale map, making it exactly symmetric while
    /// preserving the diagonal, the scale invariance and both exponents.
    double scale_kernel(double r, double x, double t, double tol = 1e-10) const;

    /// Odd/even split of the translated bump: K3 = r[T(x,t) - T(x,-t)],
    /// K4 = r[T(x,t) + T(x,-t)] with T(x,t) = (tau_x phi_y)(-t). Requires
    /// x != 0 and the height restriction y(x, r) < c0 |x|.
    std::pair<double, double> split_kernels(const RealFn& phi_even_bump, double r, double x,
                                            double t, double c0, double tol = 1e-10) const;

  private:
    LambdaParam lp_;
};

/// An evaluable two-point kernel with its declared class metadata.
struct KernelHandle {
    std::function<double(double r, double x, double t)> eval;
    enum class Tag { compact_support, polynomial_decay } tag = Tag::polynomial_decay;
    double gamma = 1.0; // smoothness exponent in the measure distance
    WeightedMeasure measure = WeightedMeasure::lebesgue();
};

struct KernelCheckRecord {
    std::string name;
    bool passed = true;
    double measured = 0.0;       // fitted exponent or worst ratio
    double lower = -INFINITY;    // acceptance bracket
    double upper = INFINITY;
    double witness[4] = {0, 0, 0, 0}; // (r, x, t, z) attaining the worst case
};

struct KernelReport {
    std::vector<KernelCheckRecord> records;
    bool all_passed() const
    {
        for (const auto& r : records)
            if (!r.passed)
                return false;
        return true;
    }
    const KernelCheckRecord* find(const std::string& name) const
    {
        for (const auto& r : records)
            if (r.name == name)
                return &r;
        return nullptr;
    }
};

struct KernelSamplingPlan {
    int samples = 2000;
    std::uint64_t seed = 1;
    double r_log_min = 1e-2, r_log_max = 1e2;
    double x_range = 6.0;
    double admissible_c3 = 0.25;      // pair filter for the smoothness condition
    double smoothness_ratio_cap = 1e4; // ratio above this fails the condition
    double alpha = 0.0;               // derived-difference exponent, 0 disables; must be < gamma
    // decay fit: tail of t -> k(r, x, t) against 1 + d(x,t)/r
    double decay_fit_r = 0.25;
    double decay_fit_x = 1.0;
    int decay_fit_points = 25;
    // smoothness fit: pairs (t, z) = (delta, 0) over a delta ladder
    int holder_fit_points = 12;
};

/// Evaluates the kernel-class conditions (nonnegativity, on-diagonal lower
/// bound, size bound, smoothness condition over admissible pairs, symmetry,
/// compact support when declared) on seeded sample clouds, fits the decay and
/// smoothness exponents, and records worst witnesses.
KernelReport check_kernel_class(const KernelHandle& k, const KernelSamplingPlan& plan);

/// Double mollification of a compact-support kernel in the measure variables:
/// both arguments are averaged against the normalized smooth bump at scale
/// tau. Symmetric, dominated by a constant multiple of the kernel envelope,
/// and within C (tau/r)^gamma of the original. tau < r required.
double mollify_k1(const KernelHandle& k, const WeightedMeasure& m, double tau, double x,
                  double r, double y);

} // namespace dunkl
