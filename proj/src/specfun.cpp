#include "twrelay/specfun.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

namespace twrelay::specfun {

namespace {

// Chebyshev series evaluation (Clenshaw), first coefficient halved.
double chebyshev_eval(double x, std::span<const double> cs)
{
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    const double twox = 2.0 * x;
    for (std::size_t i = cs.size(); i-- > 0;) {
        b2 = b1;
        b1 = b0;
        b0 = twox * b1 - b2 + cs[i];
    }
    return 0.5 * (b0 - b2);
}

// Chebyshev coefficients for exp(x)*K1(x)*sqrt(x) - 1.25 on 2 <= x <= 8,
// argument transformed to (16/x - 5)/3.  Netlib FNLIB series AK1 (public
// domain), truncated well below double precision.
constexpr double kAk1Coeffs[] = {
    0.27443134069738829695257666227266,
    0.07571989953199367817089237814929,
    -0.0014410515564754061229853116175625,
    6.6501169551257479394251385477036e-5,
    -4.3699847095201407660580845089167e-6,
    3.5402774997630526799417139008534e-7,
    -3.3111637792932920208982688245704e-8,
    3.4459775819010534532311499770992e-9,
    -3.8989323474754271048981937492758e-10,
    4.7208197504658356400947449339005e-11,
    -6.047835662875356234537359156289e-12,
    8.1284948748658747888193837985663e-13,
    -1.1386945747147891428923915951042e-13,
    1.654035840846228232597294820509e-14,
    -2.4809025677068848221516010440533e-15,
    3.8292378907024096948429227299157e-16,
    -6.0647341040012418187768210377386e-17,
    9.8324256232648616038194004650666e-18,
    -1.6284168738284380035666620115626e-18,
    2.7501536496752623718284120337066e-19,
    -4.7289666463953250924281069568e-20,
    8.2681500028109932722392050346666e-21,
    -1.4681405136624956337193964885333e-21,
    2.6447639269208245978085894826666e-22,
    -4.82901575648563878979698688e-23,
    8.9293020743610130180656332799999e-24,
    -1.6708397168972517176997751466666e-24,
    3.1616456034040694931368618666666e-25,
};

// Same scaled function on x >= 8, argument 16/x - 1.  Netlib FNLIB AK12.
constexpr double kAk12Coeffs[] = {
    0.06379308343739001036600488534102,
    0.02832887813049720935835030284708,
    -2.475370673905250345414545566732e-4,
    5.771972451607248820470976625763e-6,
    -2.068939219536548302745533196552e-7,
    9.739983441381804180309213097887e-9,
    -5.585336140380624984688895511129e-10,
    3.732996634046185240221212854731e-11,
    -2.825051961023225445135065754928e-12,
    2.372019002484144173643496955486e-13,
    -2.176677387991753979268301667938e-14,
    2.157914161616032453939562689706e-15,
    -2.290196930718269275991551338154e-16,
    2.582885729823274961919939565226e-17,
    -3.07675264126846318762109817344e-18,
    3.851487721280491597094896844799e-19,
    -5.0447948976415289771172825088e-20,
    6.888673850418544237018292223999e-21,
    -9.77504154195011830300213248e-22,
    1.437416218523836461001659733333e-22,
};

// I1(x) by ascending series, adequate for the x <= 2 branch of K1.
double bessel_i1_small(double x)
{
    const double t = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= t / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < sum * 1e-18)
            break;
    }
    return 0.5 * x * sum;
}

// Ascending series for K1 on 0 < x <= 2:
//   K1(x) = ln(x/2) I1(x) + 1/x - (x/4) sum_k [psi(k+1)+psi(k+2)] t^k / (k!(k+1)!)
// with t = x^2/4 and psi the digamma function at integer arguments.
double bessel_k1_small(double x)
{
    constexpr double kEulerGamma = 0.57721566490153286060651209008240;
    const double t = 0.25 * x * x;
    double term = 1.0;
    double psi_sum = 1.0 - 2.0 * kEulerGamma; // psi(1) + psi(2)
    double sum = psi_sum;
    for (int k = 1; k < 40; ++k) {
        term *= t / (static_cast<double>(k) * (k + 1));
        psi_sum += 1.0 / k + 1.0 / (k + 1);
        const double contrib = term * psi_sum;
        sum += contrib;
        if (std::abs(contrib) < std::abs(sum) * 1e-18)
            break;
    }
    return std::log(0.5 * x) * bessel_i1_small(x) + 1.0 / x - 0.25 * x * sum;
}

} // namespace

double bessel_k1(double x)
{
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("bessel_k1: argument must be finite and > 0, got " +
                                std::to_string(x));
    if (x <= 2.0)
        return bessel_k1_small(x);
    const double scaled = (x <= 8.0)
        ? 1.25 + chebyshev_eval((16.0 / x - 5.0) / 3.0, kAk1Coeffs)
        : 1.25 + chebyshev_eval(16.0 / x - 1.0, kAk12Coeffs);
    // exp(-x) underflows to 0 for x beyond ~745; K1 underflows with it.
    return std::exp(-x) * scaled / std::sqrt(x);
}

double laplace_bessel_integral(double lambda, double gamma)
{
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw std::domain_error("laplace_bessel_integral: lambda must be finite and > 0");
    if (!std::isfinite(gamma) || gamma <= 0.0)
        throw std::domain_error("laplace_bessel_integral: gamma must be finite and > 0");
    return std::sqrt(lambda / gamma) * bessel_k1(std::sqrt(lambda * gamma));
}

} // namespace twrelay::specfun
