#pragma once

#include "core/bigreal.hpp"

namespace pf {

// Real-axis wrappers.
BigReal gamma(const BigReal& x);
BigReal digamma(const BigReal& x);
BigReal riemann_zeta(const BigReal& s);

// Gamma on the complex plane (Spouge expansion, reflection for Re z < 1/2).
BigComplex gamma(const BigComplex& z);
BigComplex sin(const BigComplex& z);

// beta_1(t) = integral_1^inf e^(-t u) / u du, t > 0
// (power series below the crossover, continued fraction above).
BigReal beta1(const BigReal& t);

// Same value routed through the library exponential integral, for cross checks.
BigReal beta1_via_eint(const BigReal& t);

// e^(t/2) beta_1(t), fused so neither factor over- or underflows on its own.
BigReal beta1_half_exp(const BigReal& t);

// zeta'(s) / zeta(s) by high-order central differences at elevated precision.
BigReal zeta_logderiv(const BigReal& s);

// Hurwitz zeta(s, a) for a > 0 by Euler-Maclaurin; valid for s > -1, s != 1.
BigReal hurwitz_zeta(const BigReal& s, const BigReal& a);

// integral_0^inf beta_1(2v) e^v v^(s-1) dv evaluated by quadrature; the
// integrand decays like e^-v v^(s-2) so this converges for all s > 0.
BigReal beta1_mellin_quadrature(const BigReal& s, long prec);

// The matching closed form (1/2) Gamma(s) (psi((s+1)/2) - psi(s/2)).
BigReal beta1_mellin_closed(const BigReal& s, long prec);

}  // namespace pf
