#include <doctest.h>

#include <cmath>
#include <complex>

#include "core/bigreal.hpp"
#include "core/eisenstein.hpp"
#include "core/quadfield.hpp"
#include "core/special.hpp"
#include "core/whittaker.hpp"

namespace {

using pf::BigComplex;
using pf::BigReal;

std::complex<double> to_cd(const BigComplex& z) {
  return {z.real().to_double(), z.imag().to_double()};
}

TEST_CASE("direct sum: translation invariance up to window slop") {
  pf::FieldContext ctx(7, 128);
  BigReal s(2.5, 128);
  pf::HalfPlanePoint t0(BigReal(0.2, 128), BigReal(0.9, 128));
  pf::HalfPlanePoint t1(BigReal(1.2, 128), BigReal(0.9, 128));
  auto a = pf::eisenstein_direct(ctx, t0, s, 120);
  auto b = pf::eisenstein_direct(ctx, t1, s, 120);
  double slop = 20.0 * a.tail_bound.to_double();
  CHECK(abs(a.value - b.value).to_double() < slop);
}

TEST_CASE("direct sum: cutoff growth stays within the reported tail bound") {
  pf::FieldContext ctx(11, 128);
  BigReal s(2.5, 128);
  pf::HalfPlanePoint tau(BigReal(0.3, 128), BigReal(1.1, 128));
  auto coarse = pf::eisenstein_direct(ctx, tau, s, 80);
  auto fine = pf::eisenstein_direct(ctx, tau, s, 400);
  CHECK(abs(coarse.value - fine.value).to_double() <
        coarse.tail_bound.to_double());
  CHECK(fine.tail_bound < coarse.tail_bound);
  CHECK_THROWS_AS(pf::eisenstein_direct(ctx, tau, BigReal(0.8, 128), 80),
                  pf::domain_error);
}

TEST_CASE("fast extraction agrees with the arbitrary-precision reference") {
  pf::FieldContext ctx(7, 128);
  const double v = 0.9, s = 2.5;
  const long M = 150, P = 16;
  auto table = pf::fourier_extract(ctx, v, s, -2, 3, M, P);
  for (long t = -2; t <= 3; ++t) {
    BigComplex ref = pf::fourier_extract_reference(
        ctx, BigReal(v, 128), BigReal(s, 128), t, M, P);
    CAPTURE(t);
    CHECK(std::abs(table.coeff.at(t) - to_cd(ref)) < 1e-12);
  }
}

TEST_CASE("fast extraction is deterministic across thread counts") {
  pf::FieldContext ctx(7, 96);
  auto a = pf::fourier_extract(ctx, 1.1, 2.5, -2, 4, 300, 16, 1);
  auto b = pf::fourier_extract(ctx, 1.1, 2.5, -2, 4, 300, 16, 5);
  auto c = pf::fourier_extract(ctx, 1.1, 2.5, -2, 4, 300, 16, 8);
  for (long t = -2; t <= 4; ++t) {
    CHECK(a.coeff.at(t) == b.coeff.at(t));
    CHECK(a.coeff.at(t) == c.coeff.at(t));
  }
}

TEST_CASE("extraction cutoff doubling stays within the tail estimate") {
  pf::FieldContext ctx(7, 96);
  auto coarse = pf::fourier_extract(ctx, 0.8, 2.5, 1, 2, 400, 16);
  auto fine = pf::fourier_extract(ctx, 0.8, 2.5, 1, 2, 800, 16);
  for (long t = 1; t <= 2; ++t) {
    CAPTURE(t);
    CHECK(std::abs(coarse.coeff.at(t) - fine.coeff.at(t)) <
          coarse.tail_bound);
  }
}

TEST_CASE("extracted coefficients match the local factor product") {
  pf::FieldContext ctx(7, 128);
  const double v = 1.0, s = 3.0;
  auto table = pf::fourier_extract(ctx, v, s, -2, 4, 3000);
  BigReal vb(v, 128), sb(s, 128);
  BigReal scal = pf::extract_scalar(ctx, vb, sb);
  pf::HalfPlanePoint tau(BigReal(0L, 128), vb);
  for (long t : {1L, 2L, 3L, 4L, -1L, -2L}) {
    BigComplex closed = pf::coefficient_product(ctx, tau, t, sb) *
                        BigComplex(scal);
    std::complex<double> got = table.coeff.at(t);
    std::complex<double> want = to_cd(closed);
    CAPTURE(t);
    CAPTURE(got);
    CAPTURE(want);
    CHECK(std::abs(got - want) <
          5e-8 + 1e-3 * std::abs(want));
  }
  // constant coefficient against the completed constant term
  BigReal ct = pf::constant_term(ctx, vb, sb) * scal;
  CAPTURE(table.coeff.at(0));
  CAPTURE(ct.to_double());
  CHECK(std::abs(table.coeff.at(0) - ct.to_double()) < 1e-6);
}

TEST_CASE("central derivative matches a finite difference of the product") {
  pf::FieldContext ctx(7, 192);
  pf::HalfPlanePoint tau(BigReal(0.3, 192), BigReal(0.8, 192));
  BigReal h = ldexp2(BigReal(1L, 192), -40);
  for (long t = -6; t <= 12; ++t) {
    if (t == 0) continue;
    auto d = pf::central_deriv_coefficient(ctx, tau, t);
    BigComplex fd = (pf::coefficient_product(ctx, tau, t, h) -
                     pf::coefficient_product(ctx, tau, t, -h)) *
                    BigComplex(BigReal(1L, 192) / ldexp2(h, 1));
    CAPTURE(t);
    if (d.vanishing_kind == 'm') {
      CHECK(abs(d.value).to_double() == 0.0);
      CHECK(abs(fd).to_double() < 1e-18);
    } else {
      CHECK((abs(d.value - fd) / abs(d.value)).to_double() < 1e-18);
    }
  }
}

TEST_CASE("central derivative case dispatch") {
  pf::FieldContext ctx(7, 128);
  pf::HalfPlanePoint tau(BigReal(0L, 128), BigReal(1L, 128));
  // t = -1: archimedean place vanishes, rho(1) = 1
  auto a = pf::central_deriv_coefficient(ctx, tau, -1);
  CHECK(a.vanishing_kind == 'a');
  // t = 1: chi_q_local = 1, ramified place vanishes
  auto b = pf::central_deriv_coefficient(ctx, tau, 1);
  CHECK(b.vanishing_kind == 'q');
  CHECK(b.vanishing_prime == 7);
  // t = 3: 3 inert in k7 at odd order
  auto c = pf::central_deriv_coefficient(ctx, tau, 3);
  CHECK(c.vanishing_kind == 'p');
  CHECK(c.vanishing_prime == 3);
  // t = -3: archimedean and inert places both vanish
  auto d = pf::central_deriv_coefficient(ctx, tau, -3);
  CHECK(d.vanishing_kind == 'm');
  CHECK(abs(d.value).to_double() == 0.0);
  CHECK_THROWS_AS(pf::central_deriv_coefficient(ctx, tau, 0),
                  pf::domain_error);
}

TEST_CASE("product vanishes identically at the center") {
  pf::FieldContext ctx(11, 128);
  pf::HalfPlanePoint tau(BigReal(0.37, 128), BigReal(0.62, 128));
  BigReal zero(0L, 128);
  for (long t = -50; t <= 50; ++t) {
    if (t == 0) continue;
    CAPTURE(t);
    CHECK(abs(pf::coefficient_product(ctx, tau, t, zero)).to_double() == 0.0);
  }
  CHECK(pf::constant_term(ctx, BigReal(0.62, 128), zero).to_double() == 0.0);
}

TEST_CASE("termwise functional equation antisymmetry") {
  pf::FieldContext ctx(7, 128);
  pf::HalfPlanePoint tau(BigReal(0.21, 128), BigReal(0.95, 128));
  for (double sv : {0.4, 0.9}) {
    for (long t : {-2L, -1L, 1L, 2L, 3L, 6L}) {
      BigReal s(sv, 128);
      BigComplex plus = pf::coefficient_product(ctx, tau, t, s);
      // mirror side built on the quadrature continuation of the
      // archimedean integral
      BigReal ms = -s;
      BigComplex mirror =
          BigComplex(pow(BigReal(7L, 160), ldexp2(ms.at_prec(160) + 1L, -1))) *
          pf::arch_factor_quadrature(tau, t, ms, 128) *
          pf::q_factor(ctx, t, ms);
      for (const auto& [p, e] : pf::factorize(std::labs(t))) {
        if (p == 7) continue;
        mirror *= BigComplex(pf::finite_factor(ctx, p, t, ms));
      }
      CAPTURE(sv);
      CAPTURE(t);
      CHECK((abs(plus + mirror) / abs(plus)).to_double() < 1e-8);
    }
  }
}

TEST_CASE("truncation bound: cutoff solver finds the minimal cutoff") {
  for (long q : {7L, 11L}) {
    for (double s : {2.5, 3.0}) {
      for (double v : {0.7, 1.3}) {
        long m = pf::direct_sum_cutoff(q, v, s, 1e-6);
        CAPTURE(q);
        CAPTURE(s);
        CAPTURE(v);
        CHECK(pf::direct_sum_tail_bound(q, v, s, m) < 1e-6);
        CHECK(pf::direct_sum_tail_bound(q, v, s, m - 1) >= 1e-6);
      }
    }
  }
  // the reported table bound is the same formula
  pf::FieldContext ctx(7, 96);
  auto tab = pf::fourier_extract(ctx, 1.1, 2.5, 1, 2, 500);
  CHECK(tab.tail_bound == pf::direct_sum_tail_bound(7, 1.1, 2.5, 500));
  CHECK_THROWS_AS(pf::direct_sum_tail_bound(7, 1.0, 0.9, 100),
                  pf::domain_error);
  CHECK_THROWS_AS(pf::direct_sum_cutoff(7, 1.0, 2.5, 0.0), pf::domain_error);
}

TEST_CASE("constant term: exact antisymmetry and central derivative") {
  pf::FieldContext ctx(7, 160);
  BigReal v(0.83, 160);
  for (double sv : {0.4, 0.9, 1.3}) {
    BigReal s(sv, 160);
    BigReal plus = pf::constant_term(ctx, v, s);
    BigReal minus = pf::constant_term(ctx, v, -s);
    CAPTURE(sv);
    CHECK((abs(plus + minus) / abs(plus)).to_double() < 1e-40);
  }
  // derivative at the center against a finite difference
  BigReal h = ldexp2(BigReal(1L, 160), -30);
  BigReal fd = (pf::constant_term(ctx, v, h) - pf::constant_term(ctx, v, -h)) /
               ldexp2(h, 1);
  BigReal d0 = pf::constant_term_deriv0(ctx, v);
  CHECK((abs(d0 - fd) / abs(d0)).to_double() < 1e-15);
}

}  // namespace
