#pragma once

#include "dunkl/quadrature.hpp"
#include "dunkl/sampled_function.hpp"
#include "dunkl/special_functions.hpp"

#include <complex>
#include <functional>
#include <optional>

namespace dunkl {

/// First-order reflection-difference derivative
///   D f(x) = f'(x) + lambda/x [f(x) - f(-x)]
/// with the x -> 0 limit (1 + 2 lambda) f'(0). The derivative part is a
/// central difference of step h.
double dunkl_derivative(const RealFn& f, const LambdaParam& lp, double x, double h);

/// Transform c_lambda int f(x) E(-i x xi) |x|^{2 lambda} dx for integrable f.
std::complex<double> dunkl_transform(const SampledFunction& f, const LambdaParam& lp,
                                     double xi, double tol = 1e-9);
std::complex<double> dunkl_transform(const RealFn& f, std::pair<double, double> support,
                                     const LambdaParam& lp, double xi, double tol = 1e-9);

/// Two-point translation kernel W(x, t, z): the density realizing the
/// generalized translation on integrable functions, supported in
/// ||x| - |t|| <= |z| <= |x| + |t|.
struct TranslationKernelW {
    LambdaParam lp;

    explicit TranslationKernelW(const LambdaParam& p) : lp(p) {}

    /// sigma_{x,t,z} = (x^2 + t^2 - z^2) / (2 x t); 0 when x or t vanishes.
    static double sigma(double x, double t, double z);

    /// Pointwise value (black-box form; fine away from the support edges).
    double eval(double x, double t, double z) const;

    /// c_lambda int |W(x, -u, z)| |z|^{2 lambda} dz, edge singularities
    /// integrated exactly. Bounded by 4 for all (x, u).
    double abs_mass(double x, double u, double tol = 1e-9) const;
    /// Same without absolute values; equals 1 (translation preserves mass).
    double signed_mass(double x, double u, double tol = 1e-9) const;
};

/// Core chord-coordinate integral of the even-function translation:
///   int_0^2 profile(q2(v)) (1 + sgn (1 - v)) v^{lambda-1} (2-v)^{lambda-1} dv,
/// q2(v) = (|x|-|t|)^2 + 2|x t| v. The endpoint weights are treated exactly;
/// `q2_support` truncates where the profile vanishes, `v_hint` marks the
/// profile's variation scale for panel grading.
double translation_profile_integral(const LambdaParam& lp, double absx, double abst,
                                    int sgn_xt,
                                    const std::function<double(double)>& profile_of_q2,
                                    double q2_support, double v_hint, double tol = 1e-10);

/// (tau_x phi_y)(-t) for an even profile phi (phi_y(u) = y^{-2 lambda - 1} phi(u/y)).
/// `support_radius` is phi's support in its own variable (infinity if none).
double translate_even(const RealFn& phi_even, const LambdaParam& lp, double x, double t,
                      double y = 1.0, double support_radius = INFINITY,
                      double tol = 1e-10);

/// (tau_x f)(-t) for integrable f of arbitrary parity via the W kernel.
double translate_general(const RealFn& f, const LambdaParam& lp, double x, double t,
                         double tol = 1e-9);

/// (tau_x f)(-t); `even_hint` selects the smooth chord-integral path and is a
/// contract violation if f is not even.
double translate(const SampledFunction& f, const LambdaParam& lp, double x, double t,
                 bool even_hint = false, double tol = 1e-9);

/// (f *_l g)(x) = c_lambda int f(t) (tau_x g)(-t) |t|^{2 lambda} dt with g an
/// even profile given by callable + optional compact support radius.
double convolve(const RealFn& f, std::optional<std::pair<double, double>> f_support,
                const RealFn& g_even, double g_support_radius, const LambdaParam& lp,
                double x, double tol = 1e-8);

/// Residual of D_x^2 u + d_y^2 u by composed reflection-differences; O(h^2).
double delta_lambda_residual(const std::function<double(double, double)>& u,
                             const LambdaParam& lp, double x, double y, double h);

/// Residuals of the conjugate first-order system (D_x u - d_y v, d_y u + D_x v).
std::pair<double, double> cr_residuals(const std::function<double(double, double)>& u,
                                       const std::function<double(double, double)>& v,
                                       const LambdaParam& lp, double x, double y, double h);

} // namespace dunkl
