#include "liegamma/coeffs.hpp"

#include <array>
#include <cmath>

namespace liegamma {
namespace {

// Degree-14 Taylor polynomials in phi^2, frozen from the exact expansions.
// At phi = kSmallAngle the first omitted term is below 1e-19 for every family,
// while the closed forms above that angle lose at most ~2 ulps to cancellation.
using Poly = std::array<double, 8>;

double eval_poly(const Poly& p, double phi) {
  const double x = phi * phi;
  double acc = 0.0;
  for (int i = 7; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

constexpr Poly kC1{1.0, -1.0 / 6, 1.0 / 120, -1.0 / 5040, 1.0 / 362880, -1.0 / 39916800,
                   1.0 / 6227020800, -1.0 / 1307674368000};
constexpr Poly kC2{0.5, -1.0 / 24, 1.0 / 720, -1.0 / 40320, 1.0 / 3628800, -1.0 / 479001600,
                   1.0 / 87178291200, -1.0 / 20922789888000};
constexpr Poly kJ2{1.0 / 6, -1.0 / 120, 1.0 / 5040, -1.0 / 362880, 1.0 / 39916800,
                   -1.0 / 6227020800, 1.0 / 1307674368000, -1.0 / 355687428096000};
constexpr Poly kN2{1.0 / 24, -1.0 / 720, 1.0 / 40320, -1.0 / 3628800, 1.0 / 479001600,
                   -1.0 / 87178291200, 1.0 / 20922789888000, -1.0 / 6402373705728000};
constexpr Poly kT1{1.0, 0.0, -1.0 / 120, 1.0 / 2520, -1.0 / 120960, 1.0 / 9979200,
                   -1.0 / 1245404160, 1.0 / 217945728000};
constexpr Poly kT2{0.5, 0.0, -1.0 / 720, 1.0 / 20160, -1.0 / 1209600, 1.0 / 119750400,
                   -1.0 / 17435658240, 1.0 / 3487131648000};
constexpr Poly kT3{1.0 / 6, -1.0 / 60, 1.0 / 1680, -1.0 / 90720, 1.0 / 7983360,
                   -1.0 / 1037836800, 1.0 / 186810624000, -1.0 / 44460928512000};
constexpr Poly kT4{1.0 / 24, -1.0 / 360, 1.0 / 13440, -1.0 / 907200, 1.0 / 95800320,
                   -1.0 / 14529715200, 1.0 / 2988969984000, -1.0 / 800296713216000};
constexpr Poly kJT2{1.0 / 6, 0.0, -1.0 / 5040, 1.0 / 181440, -1.0 / 13305600, 1.0 / 1556755200,
                    -1.0 / 261534873600, 1.0 / 59281238016000};
constexpr Poly kJT4{1.0 / 120, -1.0 / 2520, 1.0 / 120960, -1.0 / 9979200, 1.0 / 1245404160,
                    -1.0 / 217945728000, 1.0 / 50812489728000, -1.0 / 15205637551104000};
constexpr Poly kG12_1{1.0 / 3, -1.0 / 30, 1.0 / 840, -1.0 / 45360, 1.0 / 3991680,
                      -1.0 / 518918400, 1.0 / 93405312000, -1.0 / 22230464256000};
constexpr Poly kG12_2{1.0 / 8, -1.0 / 144, 1.0 / 5760, -1.0 / 403200, 1.0 / 43545600,
                      -1.0 / 6706022400, 1.0 / 1394852659200, -1.0 / 376610217984000};
constexpr Poly kG13_1{1.0 / 12, -1.0 / 180, 1.0 / 6720, -1.0 / 453600, 1.0 / 47900160,
                      -1.0 / 7264857600, 1.0 / 1494484992000, -1.0 / 400148356608000};
constexpr Poly kG13_3{1.0 / 40, -1.0 / 1008, 1.0 / 51840, -1.0 / 4435200, 1.0 / 566092800,
                      -1.0 / 100590336000, 1.0 / 23712495206400, -1.0 / 7155594141696000};
constexpr Poly kG13_4{1.0 / 60, -1.0 / 560, 1.0 / 18144, -1.0 / 1140480, 1.0 / 115315200,
                      -1.0 / 16982784000, 1.0 / 3420071424000, -1.0 / 901074817843200};
constexpr Poly kG13_5{1.0 / 120, -1.0 / 5040, 1.0 / 362880, -1.0 / 39916800, 1.0 / 6227020800,
                      -1.0 / 1307674368000, 1.0 / 355687428096000, -1.0 / 121645100408832000};
constexpr Poly kG13_6{1.0 / 288, -1.0 / 5760, 1.0 / 268800, -1.0 / 21772800, 1.0 / 2682408960,
                      -1.0 / 464950886400, 1.0 / 107602919424000, -1.0 / 32011868528640000};

double closed_or_taylor(const Poly& taylor, double phi, double closed) {
  return phi < kSmallAngle ? eval_poly(taylor, phi) : closed;
}

double coeff_c(int i, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  switch (i) {
    case 0: return 1.0;
    case 1: return closed_or_taylor(kC1, phi, s / phi);
    case 2: return closed_or_taylor(kC2, phi, (1.0 - c) / (phi * phi));
  }
  throw IndexOutOfRange("c family: index 0..2");
}

double coeff_j(int i, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  switch (i) {
    case 0: return 1.0;
    case 1: return closed_or_taylor(kC2, phi, (1.0 - c) / (phi * phi));
    case 2: return closed_or_taylor(kJ2, phi, (phi - s) / (phi * phi * phi));
  }
  throw IndexOutOfRange("j family: index 0..2");
}

double coeff_n(int i, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double p2 = phi * phi;
  switch (i) {
    case 0: return 0.5;
    case 1: return closed_or_taylor(kJ2, phi, (phi - s) / (p2 * phi));
    case 2: return closed_or_taylor(kN2, phi, (p2 + 2.0 * c - 2.0) / (2.0 * p2 * p2));
  }
  throw IndexOutOfRange("n family: index 0..2");
}

double coeff_t(int i, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double p2 = phi * phi;
  switch (i) {
    case 0: return 1.0;
    case 1: return closed_or_taylor(kT1, phi, (3.0 * s - phi * c) / (2.0 * phi));
    case 2: return closed_or_taylor(kT2, phi, (4.0 - phi * s - 4.0 * c) / (2.0 * p2));
    case 3: return closed_or_taylor(kT3, phi, (s - phi * c) / (2.0 * p2 * phi));
    case 4: return closed_or_taylor(kT4, phi, (2.0 - phi * s - 2.0 * c) / (2.0 * p2 * p2));
  }
  throw IndexOutOfRange("t family: index 0..4");
}

double coeff_jt(int i, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double p2 = phi * phi;
  switch (i) {
    case 0: return 1.0;
    case 1: return closed_or_taylor(kT2, phi, (4.0 - phi * s - 4.0 * c) / (2.0 * p2));
    case 2: return closed_or_taylor(kJT2, phi, (4.0 * phi - 5.0 * s + phi * c) / (2.0 * p2 * phi));
    case 3: return closed_or_taylor(kT4, phi, (2.0 - phi * s - 2.0 * c) / (2.0 * p2 * p2));
    case 4:
      return closed_or_taylor(kJT4, phi,
                              (2.0 * phi - 3.0 * s + phi * c) / (2.0 * p2 * p2 * phi));
  }
  throw IndexOutOfRange("jt family: index 0..4");
}

double coeff_g12(int i, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double p2 = phi * phi;
  switch (i) {
    case 0: return 0.5;
    case 1: return closed_or_taylor(kG12_1, phi, (s - phi * c) / (p2 * phi));
    case 2:
      return closed_or_taylor(kG12_2, phi,
                              (p2 - 2.0 * phi * s - 2.0 * c + 2.0) / (2.0 * p2 * p2));
  }
  throw IndexOutOfRange("g12 family: index 0..2");
}

double coeff_g13(int i, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double p2 = phi * phi;
  const double p4 = p2 * p2;
  switch (i) {
    case 0: return 1.0 / 6.0;
    case 1: return closed_or_taylor(kG13_1, phi, (2.0 - phi * s - 2.0 * c) / p4);
    case 2: return closed_or_taylor(kN2, phi, (p2 + 2.0 * c - 2.0) / (2.0 * p4));
    case 3:
      return closed_or_taylor(kG13_3, phi,
                              (p2 * phi + 6.0 * phi + 6.0 * phi * c - 12.0 * s) / (6.0 * p4 * phi));
    case 4:
      return closed_or_taylor(
          kG13_4, phi,
          (12.0 * s - 12.0 * phi * c - 3.0 * p2 * s - p2 * phi) / (6.0 * p4 * phi));
    case 5:
      return closed_or_taylor(kG13_5, phi, (p2 * phi - 6.0 * phi + 6.0 * s) / (6.0 * p4 * phi));
    case 6:
      return closed_or_taylor(
          kG13_6, phi,
          (4.0 + p2 + p2 * c - 4.0 * phi * s - 4.0 * c) / (4.0 * p4 * p2));
  }
  throw IndexOutOfRange("g13 family: index 0..6");
}

// Sim(3) m_i near phi = 0, summed as series in phi^2 with lambda folded into
// the scalar gamma kernels; converges factorially for any lambda.
double m_small_phi(int base, double phi, double lambda) {
  double acc = 0.0, p2k = 1.0;
  const double x = phi * phi;
  for (int k = 0; k < 12; ++k) {
    const double term = p2k * gamma_scalar(2 * k + base, -lambda);
    acc += (k % 2 == 0) ? term : -term;
    if (std::abs(term) < 1e-17 * (std::abs(acc) + 1.0)) break;
    p2k *= x;
  }
  return acc;
}

double coeff_m(int i, double phi, double lambda) {
  const double l2p2 = lambda * lambda + phi * phi;
  switch (i) {
    case 0:
      if (std::abs(lambda) < kSmallAngle) return gamma_scalar(1, -lambda);
      return -std::expm1(-lambda) / lambda;
    case 1:
      if (phi < kSmallAngle) return m_small_phi(2, phi, lambda);
      if (std::abs(lambda) < 1e-6) return coeff_j(1, phi);  // lambda -> 0 limit
      return (phi * std::exp(-lambda) + lambda * std::sin(phi) - phi * std::cos(phi)) /
             (phi * l2p2);
    case 2:
      if (phi < kSmallAngle) return m_small_phi(3, phi, lambda);
      if (std::abs(lambda) < 1e-6) return coeff_j(2, phi);  // lambda -> 0 limit
      return (lambda - phi * std::sin(phi) - lambda * std::cos(phi)) / (phi * phi * l2p2) +
             (-std::expm1(-lambda)) / (lambda * l2p2);
  }
  throw IndexOutOfRange("m family: index 0..2");
}

}  // namespace

double coeff(CoeffFamily family, int index, double phi, std::optional<double> lambda) {
  if (family == CoeffFamily::M) {
    if (!lambda) throw UnknownFamily("m family requires lambda");
    return coeff_m(index, phi, *lambda);
  }
  if (lambda) throw UnknownFamily("lambda is only accepted by the m family");
  switch (family) {
    case CoeffFamily::C: return coeff_c(index, phi);
    case CoeffFamily::J: return coeff_j(index, phi);
    case CoeffFamily::N: return coeff_n(index, phi);
    case CoeffFamily::T: return coeff_t(index, phi);
    case CoeffFamily::JT: return coeff_jt(index, phi);
    case CoeffFamily::G12: return coeff_g12(index, phi);
    case CoeffFamily::G13: return coeff_g13(index, phi);
    default: throw UnknownFamily("unknown coefficient family");
  }
}

double gamma_scalar(int ell, double x) {
  if (ell < 0) throw IndexOutOfRange("gamma_scalar: ell >= 0");
  // 1/ell! leading weight, then multiply up the factorial denominator.
  double weight = 1.0;
  for (int k = 2; k <= ell; ++k) weight /= k;
  double acc = 0.0, term = weight;
  for (int m = 0; m < 256; ++m) {
    acc += term;
    if (std::abs(term) < 1e-17 * (std::abs(acc) + 1.0)) return acc;
    term *= x / (ell + m + 1);
  }
  return acc;
}

double alt_factorial_series(int p, double phi) {
  double weight = 1.0;
  for (int k = 2; k <= p; ++k) weight /= k;
  const double x = phi * phi;
  double acc = 0.0, term = weight;
  for (int k = 0; k < 128; ++k) {
    acc += term;
    if (std::abs(term) < 1e-17 * (std::abs(acc) + 1.0)) break;
    term *= -x / ((p + 2 * k + 1) * (p + 2 * k + 2));
  }
  return acc;
}

}  // namespace liegamma
