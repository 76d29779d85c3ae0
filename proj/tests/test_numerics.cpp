#include <doctest.h>

#include <cmath>

#include "core/bigreal.hpp"
#include "core/quadrature.hpp"
#include "core/special.hpp"

namespace {

using pf::BigComplex;
using pf::BigReal;

double rel_err(const BigReal& got, const BigReal& want) {
  if (want.is_zero()) return std::fabs(got.to_double());
  return pf::abs((got - want) / want).to_double();
}

double rel_err(const BigComplex& got, const BigComplex& want) {
  return (pf::abs(got - want) / pf::abs(want)).to_double();
}

TEST_CASE("BigReal arithmetic and precision propagation") {
  BigReal a(1.5, 256);
  BigReal b(2L, 128);
  CHECK((a + b).prec() == 128);
  CHECK((a * b).prec() == 128);
  CHECK((a + 1L).prec() == 256);
  CHECK((a * 2.0).to_double() == doctest::Approx(3.0));
  CHECK((1L - BigReal(0.25, 128)).to_double() == doctest::Approx(0.75));
  CHECK(BigReal::from_string("-2.5e3", 128).to_double() == doctest::Approx(-2500.0));
  CHECK_THROWS_AS(BigReal::from_string("zzz", 128), pf::domain_error);

  BigReal pi = pf::const_pi(128);
  BigReal back = BigReal::from_string(pi.to_string(), 256);
  CHECK(pf::abs(back - pi).to_double() < 1e-37);
}

TEST_CASE("BigComplex arithmetic") {
  BigComplex z(1.0, 2.0, 128);
  BigComplex w(3.0, -1.0, 128);
  BigComplex p = z * w;
  CHECK(p.real().to_double() == doctest::Approx(5.0));
  CHECK(p.imag().to_double() == doctest::Approx(5.0));
  BigComplex q = p / w;
  CHECK(rel_err(q, z) < 1e-30);
  BigComplex e = pf::exp(BigComplex(0.0, 0.0, 128));
  CHECK(e.real().to_double() == doctest::Approx(1.0));
  // exp(i pi) = -1
  BigComplex ip(BigReal(128), pf::const_pi(128));
  CHECK(pf::abs(pf::exp(ip) + BigReal(1L, 128)).to_double() < 1e-36);
}

TEST_CASE("tanh-sinh handles endpoint singularity") {
  auto f = [](const BigReal& v) { return 1L / pf::sqrt(v); };
  auto r = pf::integrate_finite(f, BigReal(0L, 128), BigReal(1L, 128), 128);
  CHECK(rel_err(r.value, BigReal(2L, 128)) < 1e-18);
}

TEST_CASE("exp-sinh on the half line") {
  auto f = [](const BigReal& v) { return pf::exp(-v); };
  auto r = pf::integrate_to_inf(f, BigReal(0L, 128), 128);
  CHECK(rel_err(r.value, BigReal(1L, 128)) < 1e-18);

  auto g = [](const BigReal& v) { return pf::exp(-v * v); };
  auto r2 = pf::integrate_to_inf(g, BigReal(0L, 128), 128);
  BigReal want = pf::ldexp2(pf::sqrt(pf::const_pi(128)), -1);
  CHECK(rel_err(r2.value, want) < 1e-18);
}

TEST_CASE("complex quadrature") {
  // integral_0^inf e^(-v) e^(iv) dv = 1/(1 - i) = (1 + i)/2
  auto f = [](const BigReal& v) {
    return pf::exp(BigComplex(-v, v));
  };
  auto r = pf::integrate_to_inf_c(f, BigReal(0L, 128), 128);
  CHECK(rel_err(r.value, BigComplex(0.5, 0.5, 128)) < 1e-17);
}

TEST_CASE("divergent integrand is reported") {
  auto f = [](const BigReal& v) { return 1L / v; };
  CHECK_THROWS_AS(pf::integrate_finite(f, BigReal(0L, 64), BigReal(1L, 64), 64),
                  pf::convergence_error);
}

TEST_CASE("gamma agrees with MPFR on the real axis") {
  for (double x : {0.5, 1.0, 1.7, 3.25, 7.5}) {
    BigComplex g = pf::gamma(BigComplex(x, 0.0, 192));
    BigReal want = pf::gamma(BigReal(x, 192));
    CHECK(rel_err(g.real(), want) < 1e-50);
    CHECK(pf::abs(g.imag()).to_double() < 1e-50);
  }
}

TEST_CASE("complex gamma against direct integral") {
  // Gamma(z) = integral_0^inf t^(z-1) e^(-t) dt at z = 1.3 + 0.2i
  BigComplex z(1.3, 0.2, 128);
  auto f = [&](const BigReal& t) {
    BigComplex tp = pf::exp(pf::log(BigComplex(t)) * (z - BigReal(1L, 128)));
    return tp * pf::exp(-t);
  };
  auto quad = pf::integrate_to_inf_c(f, BigReal(0L, 128), 128);
  CHECK(rel_err(pf::gamma(z), quad.value) < 1e-17);
}

TEST_CASE("gamma recurrence across the reflection seam") {
  BigComplex z(-0.6, 0.4, 160);
  BigComplex lhs = pf::gamma(z + BigReal(2L, 160));
  BigComplex rhs = (z + BigReal(1L, 160)) * z * pf::gamma(z);
  CHECK(rel_err(lhs, rhs) < 1e-42);
  CHECK_THROWS_AS(pf::gamma(BigComplex(-3.0, 0.0, 128)), pf::domain_error);
}

TEST_CASE("gamma duplication formula") {
  // Gamma(s) Gamma(s + 1/2) = 2^(1-2s) sqrt(pi) Gamma(2s)
  for (double sv : {0.77, 1.6}) {
    BigReal s(sv, 192);
    BigReal lhs = pf::gamma(s) * pf::gamma(s + 0.5);
    BigReal rhs = pf::pow(BigReal(2L, 192), 1L - 2L * s) * pf::sqrt(pf::const_pi(192)) *
                  pf::gamma(2L * s);
    CHECK(rel_err(lhs, rhs) < 1e-52);
  }
  BigComplex s(1.1, 0.6, 192);
  BigComplex lhs = pf::gamma(s) * pf::gamma(s + BigReal(0.5, 192));
  BigComplex two_s = s * 2L;
  BigComplex rhs = pf::exp(pf::log(BigComplex(BigReal(2L, 192))) *
                           (BigReal(1L, 192) - two_s)) *
                   pf::sqrt(pf::const_pi(192)) * pf::gamma(two_s);
  CHECK(rel_err(lhs, rhs) < 1e-50);
}

TEST_CASE("digamma special values") {
  BigReal g = pf::const_euler(128);
  CHECK(rel_err(pf::digamma(BigReal(1L, 128)), -g) < 1e-35);
  BigReal want_half = -g - 2L * pf::log(BigReal(2L, 128));
  CHECK(rel_err(pf::digamma(BigReal(0.5, 128)), want_half) < 1e-35);
}

TEST_CASE("beta1 value, both routes, and crossover continuity") {
  // E1(1) = 0.2193839343955202737... (frozen reference)
  BigReal b1 = pf::beta1(BigReal(1L, 128));
  CHECK(std::fabs(b1.to_double() - 0.21938393439552027) < 1e-15);

  for (double t : {0.01, 0.5, 1.0, 5.0, 30.0, 47.9, 48.1, 200.0}) {
    BigReal a = pf::beta1(BigReal(t, 160));
    BigReal b = pf::beta1_via_eint(BigReal(t, 160));
    CHECK(rel_err(a, b) < 1e-40);
  }
  CHECK_THROWS_AS(pf::beta1(BigReal(-1L, 128)), pf::domain_error);
}

TEST_CASE("beta1 derivative matches -e^(-t)/t") {
  BigReal h(1e-8, 320);
  BigReal t(2L, 320);
  BigReal fd = (pf::beta1(t + h) - pf::beta1(t - h)) / (2L * h);
  BigReal want = -pf::exp(-t) / t;
  CHECK(rel_err(fd, want) < 1e-6);
}

TEST_CASE("zeta log-derivative against von Mangoldt sum") {
  // zeta'(s)/zeta(s) = -sum Lambda(n) n^(-s), brute-forced in doubles
  const int N = 200000;
  std::vector<double> lambda(N + 1, 0.0);
  std::vector<int> least(N + 1, 0);
  for (int p = 2; p <= N; ++p) {
    if (least[p] == 0) {
      for (long long m = p; m <= N; m += p) {
        if (least[m] == 0) least[m] = p;
      }
    }
  }
  for (int n = 2; n <= N; ++n) {
    int p = least[n];
    long long m = n;
    while (m % p == 0) m /= p;
    if (m == 1) lambda[n] = std::log(static_cast<double>(p));
  }
  for (double sv : {2.0, 3.0}) {
    double acc = 0.0;
    for (int n = N; n >= 2; --n) acc += lambda[n] * std::pow(n, -sv);
    // prime-number-theorem tail: sum_{n>N} Lambda(n) n^-s ~ N^(1-s)/(s-1)
    acc += std::pow(N, 1.0 - sv) / (sv - 1.0);
    double got = pf::zeta_logderiv(BigReal(sv, 128)).to_double();
    CHECK(std::fabs(got + acc) < 1e-7);
  }
  CHECK_THROWS_AS(pf::zeta_logderiv(BigReal(1.0 + 1e-30, 128)), pf::domain_error);
}

TEST_CASE("hurwitz zeta residue classes reassemble zeta") {
  for (double sv : {2.3, 1.4, 0.6, -0.2}) {
    BigReal s(sv, 160);
    BigReal sum(160);
    for (long r = 1; r <= 7; ++r) {
      sum += pf::hurwitz_zeta(s, BigReal(r, 160) / 7L);
    }
    BigReal want = pf::pow(BigReal(7L, 160), s) * pf::riemann_zeta(s);
    CHECK(rel_err(sum, want) < 1e-40);
  }
  CHECK(rel_err(pf::hurwitz_zeta(BigReal(2L, 128), BigReal(1L, 128)),
                pf::riemann_zeta(BigReal(2L, 128))) < 1e-35);
  CHECK_THROWS_AS(pf::hurwitz_zeta(BigReal(2L, 128), BigReal(-1L, 128)), pf::domain_error);
}

TEST_CASE("beta1 Mellin transform identity") {
  for (double sv : {1.2, 1.5, 2.0, 2.5, 3.0}) {
    BigReal s(sv, 160);
    BigReal lhs = pf::beta1_mellin_quadrature(s, 160);
    BigReal rhs = pf::beta1_mellin_closed(s, 160);
    CHECK(rel_err(lhs, rhs) < 1e-20);
  }
}

}  // namespace
