#pragma once

#include <optional>

#include "liegamma/types.hpp"

namespace liegamma {

// Scalar trigonometric coefficient families:
//   C:   c0=1, c1=sin(phi)/phi, c2=(1-cos)/phi^2            (rotation)
//   J:   j0=1, j1=(1-cos)/phi^2, j2=(phi-sin)/phi^3         (left Jacobian)
//   N:   n0=1/2, n1=(phi-sin)/phi^3, n2=(phi^2+2cos-2)/2phi^4
//   T:   t0..t4, the Ad(SE(3)) monomial coefficients
//   JT:  the five Ad(SE(3)) Jacobian monomial coefficients
//   M:   m0..m2(phi,lambda), the Sim(3) translation coefficients
//   G12: the three coefficients of Gamma_1(phi^, tau)
//   G13: the seven coefficients of Gamma_1(phi^, nu^, phi^, tau)
enum class CoeffFamily { C, J, N, T, JT, M, G12, G13 };

// Closed-form scalar coefficient with small-angle Taylor fallback.
// lambda must be supplied iff family == M.
double coeff(CoeffFamily family, int index, double phi,
             std::optional<double> lambda = std::nullopt);

// Scalar building-block series gamma_ell(x) = sum_m x^m / (ell+m)!.
double gamma_scalar(int ell, double x);

// Alternating even series sum_k (-1)^k phi^(2k) / (2k+p)!.  These are the
// phi^ and phi^^2 coefficients of every Gamma_ell(phi^): A_{ell+1}, A_{ell+2}.
double alt_factorial_series(int p, double phi);

// Small-angle switch used by the closed forms.
inline constexpr double kSmallAngle = 0.5;

}  // namespace liegamma
