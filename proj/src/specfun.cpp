#include "nchyl/specfun.hpp"

#include <array>
#include <cmath>

namespace nchyl::specfun {

namespace {

// Lanczos g = 7 coefficient set (double precision, ~1e-14 relative on the
// half-plane Re z >= 1/2 for the |z| <= 50 range this project uses).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * M_PI);

Complex ln_gamma_core(Complex z)
{
    // valid for Re z >= 0.5; z shifted so the series runs over z-1
    Complex zm1 = z - 1.0;
    Complex acc = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k)
        acc += kLanczos[k] / (zm1 + static_cast<double>(k));
    Complex t = zm1 + kLanczosG + 0.5;
    return kLogSqrtTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

bool is_nonpositive_integer(Complex z)
{
    if (z.imag() != 0.0)
        return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

Complex ln_gamma(Complex z)
{
    if (is_nonpositive_integer(z))
        throw PoleError("ln_gamma: pole at non-positive integer " + std::to_string(z.real()));
    if (z.real() >= 0.5)
        return ln_gamma_core(z);
    // reflection: ln Gamma(z) = ln(pi / sin(pi z)) - ln Gamma(1 - z)
    Complex spz = std::sin(M_PI * z);
    if (spz == Complex(0.0, 0.0))
        throw PoleError("ln_gamma: sin(pi z) vanished in reflection");
    return std::log(M_PI) - std::log(spz) - ln_gamma_core(1.0 - z);
}

Complex gamma(Complex z)
{
    return std::exp(ln_gamma(z));
}

Complex pochhammer(Complex x, int k)
{
    Complex prod = 1.0;
    for (int j = 0; j < k; ++j)
        prod *= x + static_cast<double>(j);
    return prod;
}

double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

namespace {

// true when q equals a non-positive integer in {0, -1, ..., -(reach-1)}
bool hits_denominator_pole(Complex q, int reach)
{
    if (reach <= 0 || q.imag() != 0.0)
        return false;
    double r = q.real();
    return r <= 0.0 && r >= -static_cast<double>(reach - 1) && r == std::floor(r);
}

} // namespace

Complex hyp2f1_terminating(int n, Complex b2, Complex c, Complex s)
{
    if (hits_denominator_pole(c, n))
        throw DegenerateDenominator("hyp2f1_terminating: (c)_k vanishes within k <= n");
    // extended-precision accumulation keeps the unit-argument cancellation
    // (Chu-Vandermonde regime) below 1e-12 relative
    using CL = std::complex<long double>;
    CL sum = 1.0L;
    CL term = 1.0L;
    CL b2l(b2.real(), b2.imag()), cl(c.real(), c.imag()), sl(s.real(), s.imag());
    for (int k = 0; k < n; ++k) {
        long double kk = k;
        term *= (CL(static_cast<long double>(-n)) + kk) * (b2l + kk) /
                ((cl + kk) * (kk + 1.0L)) * sl;
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

Complex hyp3f2_unit_terminating(int n, Complex a2, Complex a3, Complex b1, Complex b2)
{
    if (hits_denominator_pole(b1, n) || hits_denominator_pole(b2, n))
        throw DegenerateDenominator("hyp3f2_unit_terminating: denominator Pochhammer vanishes");
    using CL = std::complex<long double>;
    CL sum = 1.0L;
    CL term = 1.0L;
    CL a2l(a2.real(), a2.imag()), a3l(a3.real(), a3.imag());
    CL b1l(b1.real(), b1.imag()), b2l(b2.real(), b2.imag());
    for (int k = 0; k < n; ++k) {
        long double kk = k;
        term *= (CL(static_cast<long double>(-n)) + kk) * (a2l + kk) * (a3l + kk) /
                ((b1l + kk) * (b2l + kk) * (kk + 1.0L));
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

Complex jacobi_p(int n, Complex a, Complex b, double s)
{
    if (a.imag() == 0.0 && a.real() <= -1.0 && a.real() == std::floor(a.real()))
        throw PoleError("jacobi_p: a is a negative integer <= -1");
    Complex prefactor = pochhammer(a + 1.0, n) / factorial(n);
    return prefactor * hyp2f1_terminating(n, Complex(n) + a + b + 1.0, a + 1.0, s);
}

Complex beta(Complex x, Complex y)
{
    return std::exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y));
}

} // namespace nchyl::specfun
