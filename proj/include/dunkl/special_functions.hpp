#pragma once

#include <complex>

namespace dunkl {

/// Gamma function via the 15-coefficient Lanczos approximation
/// (relative error below 1e-13 on (0, 50]); reflection for x < 0.
double gamma_fn(double x);
double log_gamma(double x); // x > 0

/// Euler beta B(a, b) for a, b > 0.
double beta_fn(double a, double b);

/// The transform parameter lambda > 0 (lambda == 0 selects the classical
/// limit) together with the constants every formula in the library needs.
struct LambdaParam {
    double lambda;         // reflection weight
    double c_lambda;       // 1 / (2^{lambda+1/2} Gamma(lambda+1/2)), measure normalization
    double c_prime;        // Gamma(lambda+1/2) / (Gamma(lambda) Gamma(1/2)), profile-integral normalization
    double a_lambda;       // 2^{lambda+1/2} Gamma(lambda+1) / sqrt(pi), kernel height P_y(0) * y^{2 lambda + 1}
    double c_dprime;       // 2^{3/2-lambda} Gamma(lambda+1/2)^2 / (sqrt(pi) Gamma(lambda))
    double gamma_exponent; // 1 / (2 lambda + 1), smoothness order in the measure distance
    double p0;             // 2 lambda / (2 lambda + 1)

    explicit LambdaParam(double lam);
};

/// Normalized Bessel function Gamma(a+1) sum_n (-1)^n (z/2)^{2n} / (n! Gamma(n+a+1));
/// equals 1 at z = 0 and |j_a(z)| <= 1 for real z, a >= -1/2. Series below
/// |z| = 12, a stable integral-representation path above. Requires a > -1.
double bessel_j_normalized(double alpha, double z);

/// Eigenfunction kernel E(iz) = j_{lambda-1/2}(z) + i z/(2 lambda+1) j_{lambda+1/2}(z).
std::complex<double> dunkl_kernel_E(const LambdaParam& lp, double z);

} // namespace dunkl
