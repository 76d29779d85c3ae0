#pragma once

#include <map>

#include "core/bigreal.hpp"
#include "core/quadfield.hpp"
#include "core/whittaker.hpp"

namespace pf {

// integer combination  sum_p c_p log p  over primes p, kept exact so that
// independently computed degree formulas can be compared symbolically
using PrimeLogCombo = std::map<long, long>;

BigReal eval_prime_log_combo(const PrimeLogCombo& combo, long prec);

// Fourier coefficient of index n > 0 as an exact prime-log combination:
//   2 (ord_q n + 1) rho(n) log q  +  sum over inert p | n of
//   2 (ord_p n + 1) rho(n/p) log p
PrimeLogCombo coeff_positive_symbolic(const FieldContext& ctx, long n);
BigReal coeff_positive(const FieldContext& ctx, long n);

// coefficient of index n < 0 (depends on the height):
//   2 rho(-n) beta1(4 pi |n| v)
BigReal coeff_negative(const FieldContext& ctx, long n, const BigReal& v);

// constant coefficient  -h (log q + log v + 2 Lambda'(1)/Lambda(1))
BigReal coeff_constant(const FieldContext& ctx, const BigReal& v);

struct PhiValue {
  BigComplex value;
  BigReal tail_bound;  // bound on the dropped n > nmax terms
};

// value of the form at tau from the first nmax coefficients of each sign,
// with an explicit bound on the dropped tail
PhiValue eval_phi(const FieldContext& ctx, const HalfPlanePoint& tau,
                  long nmax);

// completed Mellin transform  integral_0^inf (phi(iv) - a_0(v)) v^(s-1) dv
// in closed form:
//   Lambda_k(s) [ log q + kappa(s) + L'/L(s,chi) - zeta'/zeta(s) ],
//   kappa(s) = (psi((s+1)/2) - psi(s/2)) / 2,
//   Lambda_k(s) = 2 (2 pi)^(-s) Gamma(s) zeta(s) L(s,chi)
BigReal mellin_closed(const FieldContext& ctx, const BigReal& s);

// the same transform by quadrature: the integral of the nmax-truncated
// expansion is split at v = 1 (the lower half via v -> 1/w, no functional
// equation assumed) and the dropped indices are restored through the closed
// Dirichlet series of the coefficients
BigReal mellin_quadrature(const FieldContext& ctx, const BigReal& s,
                          long nmax);

}  // namespace pf
