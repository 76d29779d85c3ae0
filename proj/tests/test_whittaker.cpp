#include <doctest.h>

#include <cmath>

#include "core/bigreal.hpp"
#include "core/quadfield.hpp"
#include "core/special.hpp"
#include "core/whittaker.hpp"

namespace {

using pf::BigComplex;
using pf::BigReal;

double crel(const BigComplex& got, const BigComplex& want) {
  BigReal scale = fmax(abs(want), BigReal(1e-300, want.prec()));
  return (abs(got - want) / scale).to_double();
}

TEST_CASE("scaled Bessel: half-integer closed forms") {
  for (double zv : {0.1, 1.0, 7.5, 40.0, 300.0}) {
    BigReal z(zv, 128);
    BigReal half(0.5, 128);
    BigReal s_half = pf::bessel_k_scaled(half, z, 128);
    BigReal want = sqrt(pf::const_pi(160) / ldexp2(z.at_prec(160), 1));
    CAPTURE(zv);
    CHECK((abs(s_half - want) / want).to_double() < 1e-30);
    // K_(3/2)(z) = sqrt(pi/2z) e^(-z) (1 + 1/z)
    BigReal s_3half = pf::bessel_k_scaled(BigReal(1.5, 128), z, 128);
    BigReal want3 = want * (1L + 1L / z.at_prec(160));
    CHECK((abs(s_3half - want3) / want3).to_double() < 1e-30);
  }
}

TEST_CASE("scaled Bessel: symmetry and recurrence in the order") {
  BigReal z(2.3, 128);
  BigReal nu(0.75, 128);
  BigReal a = pf::bessel_k_scaled(nu, z, 128);
  BigReal b = pf::bessel_k_scaled(-nu, z, 128);
  CHECK((abs(a - b) / a).to_double() < 1e-35);
  // K_(nu+1) = K_(nu-1) + (2 nu / z) K_nu holds for the scaled variant
  BigReal up = pf::bessel_k_scaled(nu + 1L, z, 128);
  BigReal down = pf::bessel_k_scaled(nu - 1L, z, 128);
  BigReal rhs = down + ldexp2(nu, 1) / z * a;
  CHECK((abs(up - rhs) / up).to_double() < 1e-32);
  CHECK_THROWS_AS(pf::bessel_k_scaled(nu, BigReal(-1L, 128), 128),
                  pf::domain_error);
}

TEST_CASE("local character at the ramified prime") {
  pf::FieldContext k7(7, 96);
  CHECK(pf::chi_q_local(k7, 1) == 1);
  CHECK(pf::chi_q_local(k7, 2) == 1);
  CHECK(pf::chi_q_local(k7, 3) == -1);
  CHECK(pf::chi_q_local(k7, 7) == 1);   // prime-to-7 part is 1
  CHECK(pf::chi_q_local(k7, 21) == -1); // prime-to-7 part is 3
  CHECK(pf::chi_q_local(k7, -1) == -1);
  CHECK(pf::chi_q_local(k7, -14) == -1);  // -2 mod 7 = 5
  CHECK_THROWS_AS(pf::chi_q_local(k7, 0), pf::domain_error);
}

TEST_CASE("finite local factor: geometric series and derivative") {
  pf::FieldContext k7(7, 128);
  BigReal s(0.7, 128);
  // p = 2 splits in k7: ord_2(40) = 3, factor = sum_{r=0}^{3} 2^(-0.7 r)
  BigReal got = pf::finite_factor(k7, 2, 40, s);
  BigReal want(128);
  for (long r = 0; r <= 3; ++r) {
    want += pow(BigReal(2L, 160), BigReal(-0.7, 160) * BigReal(r, 160));
  }
  CHECK((abs(got - want) / want).to_double() < 1e-35);
  // p = 3 inert: alternating signs
  BigReal got3 = pf::finite_factor(k7, 3, 9, s);
  BigReal x = pow(BigReal(3L, 160), BigReal(-0.7, 160));
  BigReal want3 = 1L - x + x * x;
  CHECK((abs(got3 - want3) / want3).to_double() < 1e-35);
  // value vanishes at s = 0 for inert odd order, derivative is explicit
  BigReal at0 = pf::finite_factor(k7, 3, 27, BigReal(0L, 128));
  CHECK(abs(at0).to_double() == 0.0);
  BigReal d0 = pf::finite_factor_deriv0(k7, 3, 27);
  BigReal h = ldexp2(BigReal(1L, 256), -60);
  BigReal fd = (pf::finite_factor(k7, 3, 27, h) -
                pf::finite_factor(k7, 3, 27, -h)) /
               ldexp2(h, 1);
  CHECK((abs(d0 - fd) / abs(d0)).to_double() < 1e-15);
  CHECK(std::abs(d0.to_double() - 2.0 * std::log(3.0)) < 1e-14);
  CHECK_THROWS_AS(pf::finite_factor_deriv0(k7, 3, 9), pf::domain_error);
  CHECK_THROWS_AS(pf::finite_factor_deriv0(k7, 2, 2), pf::domain_error);
  CHECK_THROWS_AS(pf::finite_factor(k7, 7, 2, s), pf::domain_error);
  CHECK_THROWS_AS(pf::finite_factor(k7, 6, 2, s), pf::domain_error);
}

TEST_CASE("ramified local factor: values and derivative") {
  pf::FieldContext k7(7, 128);
  BigReal zero(0L, 128);
  // chi_q_local = -1: value 2 c_q = 2 i / sqrt(q)
  BigComplex v3 = pf::q_factor(k7, 3, zero);
  CHECK(v3.real().to_double() == 0.0);
  BigReal want_im = ldexp2(1L / sqrt(BigReal(7L, 160)), 1);
  CHECK((abs(v3.imag() - want_im) / want_im).to_double() < 1e-30);
  // chi_q_local = +1: value vanishes at s = 0
  BigComplex v1 = pf::q_factor(k7, 1, zero);
  CHECK(abs(v1).to_double() == 0.0);
  BigComplex v2 = pf::q_factor(k7, 2, zero);
  CHECK(abs(v2).to_double() == 0.0);
  // derivative at 0 against a finite difference
  for (long t : {1L, 2L, 7L, 14L, 49L, 3L, -5L}) {
    BigComplex d0 = pf::q_factor_deriv0(k7, t);
    BigReal h = ldexp2(BigReal(1L, 256), -60);
    BigComplex fd = (pf::q_factor(k7, t, h) - pf::q_factor(k7, t, -h)) *
                    BigComplex(BigReal(1L, 256) / ldexp2(h, 1));
    CAPTURE(t);
    CHECK(crel(d0, fd) < 1e-15);
  }
}

TEST_CASE("archimedean factor: closed form against quadrature") {
  pf::HalfPlanePoint tau(BigReal(0.3, 128), BigReal(0.8, 128));
  for (double sv : {0.5, 1.0, 2.0}) {
    for (long t : {-3L, -1L, 1L, 2L, 5L}) {
      BigReal s(sv, 128);
      BigComplex closed = pf::arch_factor(tau, t, s, 128);
      BigComplex quad = pf::arch_factor_quadrature(tau, t, s, 128);
      CAPTURE(sv);
      CAPTURE(t);
      CHECK(crel(closed, quad) < 1e-10);
    }
  }
}

TEST_CASE("archimedean factor: t = 0 closed form against quadrature") {
  pf::HalfPlanePoint tau(BigReal(-0.2, 128), BigReal(1.1, 128));
  for (double sv : {0.5, 1.7, 3.0}) {
    BigReal s(sv, 128);
    BigComplex closed = pf::arch_factor(tau, 0, s, 128);
    BigComplex quad = pf::arch_factor_quadrature(tau, 0, s, 128);
    CAPTURE(sv);
    CHECK(crel(closed, quad) < 1e-25);
  }
}

TEST_CASE("archimedean factor: negative s continuation is consistent") {
  pf::HalfPlanePoint tau(BigReal(0.15, 128), BigReal(0.9, 128));
  // closed route and split-endpoint quadrature agree below s = 0
  for (double sv : {-0.9, -0.4, 0.2}) {
    for (long t : {-2L, 1L, 3L}) {
      BigReal s(sv, 128);
      BigComplex closed = pf::arch_factor(tau, t, s, 128);
      BigComplex quad = pf::arch_factor_quadrature(tau, t, s, 128);
      CAPTURE(sv);
      CAPTURE(t);
      CHECK(crel(closed, quad) < 1e-9);
    }
  }
}

TEST_CASE("archimedean factor: special values at s = 0") {
  pf::HalfPlanePoint tau(BigReal(0.4, 192), BigReal(1.3, 192));
  BigReal zero(0L, 192);
  // t > 0: 2 i v^(1/2) e(t tau); continuity from nearby s
  BigComplex at0 = pf::arch_factor(tau, 2, zero, 192);
  BigReal v = tau.v, u = tau.u;
  BigReal two_pi = ldexp2(pf::const_pi(192), 1);
  BigComplex want = BigComplex(BigReal(0L, 192), ldexp2(sqrt(v), 1)) *
                    pf::unit_exp(BigReal(2L, 192) * u) *
                    BigComplex(exp(-two_pi * BigReal(2L, 192) * v));
  CHECK(crel(at0, want) < 1e-40);
  BigComplex near0 = pf::arch_factor(tau, 2, BigReal(1e-12, 192), 192);
  CHECK(crel(near0, at0) < 1e-9);
  // t < 0: zero at s = 0, and the limit from nearby s matches
  BigComplex neg0 = pf::arch_factor(tau, -2, zero, 192);
  CHECK(abs(neg0).to_double() == 0.0);
  BigComplex negnear = pf::arch_factor(tau, -2, BigReal(1e-12, 192), 192);
  CHECK(abs(negnear).to_double() < 1e-10);
  // t = 0 closed value i v^(1/2)
  BigComplex z0 = pf::arch_factor(tau, 0, zero, 192);
  CHECK(z0.real().to_double() == 0.0);
  CHECK((abs(z0.imag() - sqrt(v)) / sqrt(v)).to_double() < 1e-50);
}

TEST_CASE("archimedean factor: derivative at 0 for negative index") {
  pf::HalfPlanePoint tau(BigReal(0.25, 192), BigReal(0.7, 192));
  for (long t : {-1L, -4L}) {
    BigComplex d0 = pf::arch_factor_deriv0(tau, t, 192);
    // centered difference of the quadrature route through s = 0
    BigReal h(1e-4, 192);
    BigComplex fd = (pf::arch_factor_quadrature(tau, t, h, 192) -
                     pf::arch_factor_quadrature(tau, t, -h, 192)) *
                    BigComplex(BigReal(1L, 192) / ldexp2(h, 1));
    CAPTURE(t);
    CHECK(crel(d0, fd) < 1e-6);
    // and of the closed route
    BigComplex fdc = (pf::arch_factor(tau, t, h, 192) -
                      pf::arch_factor(tau, t, -h, 192)) *
                     BigComplex(BigReal(1L, 192) / ldexp2(h, 1));
    CHECK(crel(d0, fdc) < 1e-6);
  }
  CHECK_THROWS_AS(pf::arch_factor_deriv0(tau, 1, 192), pf::domain_error);
  CHECK_THROWS_AS(pf::arch_factor_deriv0(tau, 0, 192), pf::domain_error);
}

TEST_CASE("archimedean factor: domain validation") {
  pf::HalfPlanePoint tau(BigReal(0.0, 128), BigReal(1.0, 128));
  CHECK_THROWS_AS(pf::arch_factor_quadrature(tau, 1, BigReal(0L, 128), 128),
                  pf::domain_error);
  CHECK_THROWS_AS(pf::arch_factor(tau, 1, BigReal(-2.5, 128), 128),
                  pf::domain_error);
  CHECK_THROWS_AS(pf::HalfPlanePoint(BigReal(0.0, 128), BigReal(-1.0, 128)),
                  pf::domain_error);
}

}  // namespace
