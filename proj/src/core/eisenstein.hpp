#pragma once

#include <complex>
#include <map>

#include "core/bigreal.hpp"
#include "core/quadfield.hpp"
#include "core/whittaker.hpp"

namespace pf {

struct DirectSumValue {
  BigComplex value;
  BigReal tail_bound;  // rigorous absolute bound on the truncated remainder
};

// Literal character-weighted lattice sum over coprime pairs (c, d) taken
// modulo sign, truncated to max(|c|, |d|) <= cutoff.
DirectSumValue eisenstein_direct(const FieldContext& ctx,
                                 const HalfPlanePoint& tau, const BigReal& s,
                                 long cutoff);

// Trapezoid Fourier coefficient of the direct sum on `panels` equispaced
// nodes u_j = j / panels at fixed v.  Arbitrary precision; reference only.
BigComplex fourier_extract_reference(const FieldContext& ctx, const BigReal& v,
                                     const BigReal& s, long t, long cutoff,
                                     long panels);

struct CoefficientTable {
  std::map<long, std::complex<double>> coeff;
  double tail_bound = 0;  // estimate of the truncation error, see the notes
                          // on character cancellation in the implementation
  long cutoff = 0;
  long panels = 0;
};

// Same trapezoid coefficients, computed in double precision with the lattice
// restructured c-major so one pass serves every t.  Deterministic for any
// thread count.  panels = 0 and threads = 0 pick defaults.
CoefficientTable fourier_extract(const FieldContext& ctx, double v, double s,
                                 long tmin, long tmax, long cutoff,
                                 long panels = 0, int threads = 0);

// Closed-form estimate of the truncation error of the direct sum at the given
// lattice cutoff (the bound reported in CoefficientTable::tail_bound).
double direct_sum_tail_bound(long q, double v, double s, long cutoff);

// Smallest cutoff whose estimated truncation error is below `tolerance`.
long direct_sum_cutoff(long q, double v, double s, double tolerance);

// Normalized coefficient as the product of local factors:
// q^((s+1)/2) W_inf(tau, t, s) W_q(t, s) prod_{p | t, p != q} W_p(t, s).
BigComplex coefficient_product(const FieldContext& ctx,
                               const HalfPlanePoint& tau, long t,
                               const BigReal& s);

// Scalar relating the product above to the raw Fourier coefficient of the
// direct sum: coefficient = extract_scalar * coefficient_product.
BigReal extract_scalar(const FieldContext& ctx, const BigReal& v,
                       const BigReal& s);

struct CentralDerivCoefficient {
  BigComplex value;
  // which local factor vanishes at the center: 'a' archimedean, 'q' ramified,
  // 'p' inert finite, 'm' more than one (value 0)
  char vanishing_kind = 'm';
  long vanishing_prime = 0;
};

// d/ds at s = 0 of the indexed coefficient of the completed sum, by the
// product rule: exactly one local factor vanishes at the center generically.
CentralDerivCoefficient central_deriv_coefficient(const FieldContext& ctx,
                                                  const HalfPlanePoint& tau,
                                                  long t);

// Constant Fourier coefficient of the completed sum and its central
// s-derivative.
BigReal constant_term(const FieldContext& ctx, const BigReal& v,
                      const BigReal& s);
BigReal constant_term_deriv0(const FieldContext& ctx, const BigReal& v);

}  // namespace pf
