#pragma once

#include "core/bigreal.hpp"
#include "core/quadfield.hpp"

namespace pf {

// Point u + iv in the upper half plane.
struct HalfPlanePoint {
  BigReal u, v;
  HalfPlanePoint(BigReal uu, BigReal vv) : u(std::move(uu)), v(std::move(vv)) {
    if (!(v > 0L)) throw domain_error("HalfPlanePoint: need v > 0");
  }
};

// Scaled Bessel function e^z K_nu(z) for z > 0, real nu, via the
// double-exponential transform of the cosh integral representation.
BigReal bessel_k_scaled(const BigReal& nu, const BigReal& z, long prec);

// Local character of t at the ramified place: the quadratic residue symbol
// of the prime-to-q part of t (sign included).
int chi_q_local(const FieldContext& ctx, long t);

// Local factor at a finite prime p != q: geometric sum
// sum_{r=0}^{ord_p t} (chi(p) p^(-s))^r.
BigReal finite_factor(const FieldContext& ctx, long p, long t, const BigReal& s);
// Its derivative at s = 0 when the value vanishes there (p inert, ord_p t
// odd): log(p) (ord_p t + 1) / 2.
BigReal finite_factor_deriv0(const FieldContext& ctx, long p, long t);

// Local factor at the ramified prime: (1 - chi_q_local(t) q^(-s(ord+1))) c_q
// with c_q = i q^(-1/2).
BigComplex q_factor(const FieldContext& ctx, long t, const BigReal& s);
BigComplex q_factor_deriv0(const FieldContext& ctx, long t);

// Archimedean factor: closed evaluation through scaled Bessel functions,
// valid for s > -2 away from s = 0; exact special values at s = 0.
BigComplex arch_factor(const HalfPlanePoint& tau, long t, const BigReal& s,
                       long prec);
// Independent evaluation by direct double-exponential quadrature of the
// defining integral (shifted to the origin); small and negative s are
// reached by splitting off the endpoint singularity.  s = 0 excluded.
BigComplex arch_factor_quadrature(const HalfPlanePoint& tau, long t,
                                  const BigReal& s, long prec);
// Derivative at s = 0 for t < 0: i v^(1/2) e(tu) e^(2 pi |t| v) beta1(4 pi |t| v).
BigComplex arch_factor_deriv0(const HalfPlanePoint& tau, long t, long prec);

}  // namespace pf
