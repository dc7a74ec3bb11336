#include "dunkl/special_functions.hpp"
#include "dunkl/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

namespace {

// Lanczos, g = 671/128, 15 numbers (leading term + 14 series coefficients).
constexpr double kLanczosG = 5.2421875;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr double kLanczos[14] = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
    0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

constexpr double kSqrt2Pi = 2.5066282746310005;

} // namespace

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::invalid_argument("log_gamma: requires x > 0");
    double ser = kLanczosC0;
    double y = x;
    for (double c : kLanczos)
        ser += c / ++y;
    const double tmp = x + kLanczosG;
    return (x + 0.5) * std::log(tmp) - tmp + std::log(kSqrt2Pi * ser / x);
}

double gamma_fn(double x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("gamma_fn: non-finite argument");
    if (x > 0.0)
        return std::exp(log_gamma(x));
    if (x == std::floor(x))
        throw std::invalid_argument("gamma_fn: pole at nonpositive integer");
    // reflection
    return M_PI / (std::sin(M_PI * x) * std::exp(log_gamma(1.0 - x)));
}

double beta_fn(double a, double b)
{
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

LambdaParam::LambdaParam(double lam)
{
    if (!(lam >= 0.0) || !std::isfinite(lam))
        throw std::invalid_argument("LambdaParam: lambda must be finite and >= 0");
    lambda = lam;
    c_lambda = 1.0 / std::exp((lam + 0.5) * std::log(2.0) + log_gamma(lam + 0.5));
    a_lambda = std::exp((lam + 0.5) * std::log(2.0) + log_gamma(lam + 1.0)) / std::sqrt(M_PI);
    if (lam == 0.0) {
        c_prime = 0.0;  // 1/Gamma(0)
        c_dprime = 0.0;
    } else {
        c_prime = std::exp(log_gamma(lam + 0.5) - log_gamma(lam) - log_gamma(0.5));
        c_dprime = std::exp((1.5 - lam) * std::log(2.0) + 2.0 * log_gamma(lam + 0.5) -
                            0.5 * std::log(M_PI) - log_gamma(lam));
    }
    gamma_exponent = 1.0 / (2.0 * lam + 1.0);
    p0 = 2.0 * lam / (2.0 * lam + 1.0);
}

namespace {

double bessel_series(double alpha, double z)
{
    // Gamma(a+1) sum (-1)^n (z/2)^{2n} / (n! Gamma(n+a+1)), compensated
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0, comp = 0.0;
    for (int n = 1; n <= 200; ++n) {
        term *= -q / (n * (n + alpha));
        const double yy = term - comp;
        const double tt = sum + yy;
        comp = (tt - sum) - yy;
        sum = tt;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30))
            break;
    }
    return sum;
}

// Integral form, valid alpha > -1/2:
//   j_a(z) = Gamma(a+1)/(Gamma(a+1/2) Gamma(1/2)) int_{-1}^1 cos(z s)(1-s^2)^{a-1/2} ds
double bessel_integral(double alpha, double z)
{
    static const int buckets[] = {64, 96, 128, 192, 256, 384, 512, 768, 1024, 1536, 2048};
    int n = 0;
    for (int b : buckets) {
        if (b >= 0.85 * z + 40.0) {
            n = b;
            break;
        }
    }
    if (n == 0)
        throw std::invalid_argument("bessel_j_normalized: argument too large");
    const QuadratureRule& rule = gauss_jacobi(n, alpha - 0.5, alpha - 0.5);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * std::cos(z * rule.nodes[i]);
    const double norm =
        std::exp(log_gamma(alpha + 1.0) - log_gamma(alpha + 0.5) - log_gamma(0.5));
    return norm * s;
}

} // namespace

double bessel_j_normalized(double alpha, double z)
{
    if (!(alpha > -1.0))
        throw std::invalid_argument("bessel_j_normalized: requires alpha > -1");
    if (!std::isfinite(z))
        throw std::invalid_argument("bessel_j_normalized: non-finite argument");
    z = std::abs(z); // even in z
    if (std::abs(alpha - 0.5) < 1e-14)
        return z == 0.0 ? 1.0 : std::sin(z) / z;
    if (std::abs(alpha + 0.5) < 1e-14)
        return std::cos(z);
    if (z <= 12.0)
        return bessel_series(alpha, z);
    if (alpha > -0.5)
        return bessel_integral(alpha, z);
    // alpha in (-1, -1/2): one stable downward step from beta = alpha + 1
    const double beta = alpha + 1.0;
    const double jb = bessel_integral(beta, z);
    const double jb1 = bessel_integral(beta + 1.0, z);
    return jb - z * z * jb1 / (4.0 * beta * (beta + 1.0));
}

std::complex<double> dunkl_kernel_E(const LambdaParam& lp, double z)
{
    if (!std::isfinite(z))
        throw std::invalid_argument("dunkl_kernel_E: non-finite argument");
    const double re = bessel_j_normalized(lp.lambda - 0.5, z);
    const double im = z / (2.0 * lp.lambda + 1.0) * bessel_j_normalized(lp.lambda + 0.5, z);
    return {re, im};
}

} // namespace dunkl
