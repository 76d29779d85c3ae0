#include "core/special.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "core/quadrature.hpp"

namespace pf {

BigReal gamma(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal digamma(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_digamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal riemann_zeta(const BigReal& s) {
  BigReal r(s.prec());
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

BigComplex sin(const BigComplex& z) {
  return BigComplex(sin(z.real()) * cosh(z.imag()), cos(z.real()) * sinh(z.imag()));
}

namespace {

// Spouge coefficients c_0..c_(a-1) at a given working precision.
const std::vector<BigReal>& spouge_coeffs(long wp, long a) {
  static std::map<std::pair<long, long>, std::vector<BigReal>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(wp, a);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<BigReal> c;
  c.reserve(static_cast<std::size_t>(a));
  BigReal two_pi = ldexp2(const_pi(wp), 1);
  c.push_back(sqrt(two_pi));
  BigReal fact(1L, wp);
  for (long k = 1; k < a; ++k) {
    if (k > 1) fact *= (k - 1);
    BigReal ak(a - k, wp);
    BigReal ck = pow(ak, BigReal(k, wp) - 0.5) * exp(ak) / fact;
    if (k % 2 == 0) ck = -ck;
    c.push_back(ck);
  }
  return cache.emplace(key, std::move(c)).first->second;
}

BigComplex gamma_spouge_shifted(const BigComplex& z, long wp) {
  // Spouge series for Gamma(z) with Re z >= 1/2.
  long a = static_cast<long>(0.3771 * static_cast<double>(wp)) + 4;
  const auto& c = spouge_coeffs(wp, a);
  BigComplex w = z - BigReal(1L, wp);
  BigComplex acc(c[0]);
  for (long k = 1; k < a; ++k) {
    acc += BigComplex(c[static_cast<std::size_t>(k)]) / (w + BigReal(k, wp));
  }
  BigComplex wa = w + BigReal(a, wp);
  BigComplex half(0.5, 0.0, wp);
  return pow(wa, w + half) * exp(-wa) * acc;
}

}  // namespace

BigComplex gamma(const BigComplex& z) {
  const long prec = z.prec();
  const long wp = prec + 32;
  BigComplex zz(z.real().at_prec(wp), z.imag().at_prec(wp));
  if (zz.imag().is_zero() && zz.real().is_integer() && zz.real() <= 0L) {
    throw domain_error("gamma: pole at nonpositive integer");
  }
  BigComplex g(wp);
  if (zz.real() >= 0.5) {
    g = gamma_spouge_shifted(zz, wp);
  } else {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    BigReal pi = const_pi(wp);
    BigComplex one(BigReal(1L, wp));
    BigComplex s = sin(zz * pi);
    g = pi / (s * gamma_spouge_shifted(one - zz, wp));
  }
  return BigComplex(g.real().at_prec(prec), g.imag().at_prec(prec));
}

namespace {

BigReal beta1_impl(const BigReal& t, bool half_exp) {
  const long prec = t.prec();
  if (!(t > 0L)) throw domain_error("beta1: argument must be positive");
  const double td = t.to_double();

  if (td <= 48.0) {
    // E1(t) = -euler - log t + sum_{k>=1} (-1)^(k+1) t^k / (k k!)
    // with guard bits for the alternating-sum cancellation (~1.45 t bits).
    const long wp = prec + 48 + static_cast<long>(1.5 * td);
    BigReal tt = t.at_prec(wp);
    BigReal sum = -const_euler(wp) - log(tt);
    BigReal pw(1L, wp);
    BigReal target = ldexp2(BigReal(1L, wp), -wp);
    for (long k = 1; k < 100000; ++k) {
      pw *= tt;
      pw /= k;
      BigReal term = pw / k;
      if (k % 2 == 0) {
        sum -= term;
      } else {
        sum += term;
      }
      if (term < target) {
        if (half_exp) sum *= exp(ldexp2(tt, -1));
        return sum.at_prec(prec);
      }
    }
    throw convergence_error("beta1: series did not converge");
  }

  // E1(t) = e^-t / (t + 1 - 1^2/(t + 3 - 2^2/(t + 5 - ...))), modified Lentz
  const long wp = prec + 32;
  BigReal tt = t.at_prec(wp);
  BigReal tiny = ldexp2(BigReal(1L, wp), -2 * wp);
  BigReal eps = ldexp2(BigReal(1L, wp), -wp);
  BigReal b = tt + 1L;
  BigReal f = b;
  if (f.is_zero()) f = tiny;
  BigReal C = f;
  BigReal D(wp);
  for (long j = 1; j < 200000; ++j) {
    BigReal a = BigReal(-j, wp) * BigReal(j, wp);
    b += 2L;
    D = b + a * D;
    if (D.is_zero()) D = tiny;
    C = b + a / C;
    if (C.is_zero()) C = tiny;
    D = 1L / D;
    BigReal delta = C * D;
    f *= delta;
    if (abs(delta - 1L) < eps) {
      BigReal pref = exp(half_exp ? -ldexp2(tt, -1) : -tt);
      return (pref / f).at_prec(prec);
    }
  }
  throw convergence_error("beta1: continued fraction did not converge");
}

}  // namespace

BigReal beta1(const BigReal& t) { return beta1_impl(t, false); }

BigReal beta1_half_exp(const BigReal& t) { return beta1_impl(t, true); }

BigReal beta1_via_eint(const BigReal& t) {
  if (!(t > 0L)) throw domain_error("beta1_via_eint: argument must be positive");
  BigReal r(t.prec());
  BigReal mt = -t;
  mpfr_eint(r.raw(), mt.raw(), MPFR_RNDN);
  return -r;
}

BigReal zeta_logderiv(const BigReal& s) {
  const long prec = s.prec();
  const long wp = 2 * prec + 48;
  BigReal ss = s.at_prec(wp);
  BigReal h = ldexp2(BigReal(1L, wp), -(prec / 3 + 4));
  if (!(abs(ss - 1L) > 8L * h)) {
    throw domain_error("zeta_logderiv: too close to the pole at s = 1");
  }
  if (ss <= -1L) {
    throw domain_error("zeta_logderiv: s <= -1 unsupported");
  }
  auto g = [&](const BigReal& x) { return log(abs(riemann_zeta(x))); };
  BigReal d = (-g(ss + 2L * h) + 8L * g(ss + h) - 8L * g(ss - h) + g(ss - 2L * h)) / (12L * h);
  return d.at_prec(prec);
}

BigReal hurwitz_zeta(const BigReal& s, const BigReal& a) {
  const long prec = detail::join_prec(s, a);
  const long wp = prec + 48;
  BigReal ss = s.at_prec(wp), aa = a.at_prec(wp);
  if (!(aa > 0L)) throw domain_error("hurwitz_zeta: a must be positive");
  if (abs(ss - 1L) < ldexp2(BigReal(1L, wp), -wp + 8)) {
    throw domain_error("hurwitz_zeta: pole at s = 1");
  }
  if (ss <= -6L) throw domain_error("hurwitz_zeta: s <= -6 unsupported");

  const long N = std::max<long>(16, wp / 3 + 2 * static_cast<long>(abs(ss).to_double()) + 4);
  BigReal sum(wp);
  for (long k = 0; k < N; ++k) {
    sum += pow(aa + k, -ss);
  }
  BigReal Na = aa + N;
  sum += pow(Na, 1L - ss) / (ss - 1L);
  sum += ldexp2(pow(Na, -ss), -1);

  // Euler-Maclaurin correction: sum_j B_2j/(2j)! (s)_(2j-1) (N+a)^(-s-2j+1),
  // with B_2j/(2j)! = (-1)^(j+1) 2 zeta(2j) / (2 pi)^(2j); the j dependence
  // beyond the Pochhammer factor collapses to base * r^j.
  BigReal two_pi = ldexp2(const_pi(wp), 1);
  BigReal base = pow(Na, 1L - ss);
  BigReal r = 1L / pow(two_pi * Na, 2L);
  BigReal rj = r;
  BigReal poch = ss;  // (s)_1
  BigReal target = ldexp2(fmax(abs(sum), BigReal(1L, wp)), -wp + 8);
  BigReal prev_mag(wp);
  for (long j = 1; j < 4 * wp; ++j) {
    BigReal z2j(wp);
    mpfr_zeta_ui(z2j.raw(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
    BigReal term = ldexp2(z2j * poch * base * rj, 1);
    if (j % 2 == 0) term = -term;
    sum += term;
    BigReal mag = abs(term);
    if (mag < target) return sum.at_prec(prec);
    if (j > 2 && mag > prev_mag) break;
    prev_mag = mag;
    rj *= r;
    poch = poch * (ss + (2 * j - 1)) * (ss + 2 * j);
  }
  throw convergence_error("hurwitz_zeta: Euler-Maclaurin tail did not reach target");
}

BigReal beta1_mellin_quadrature(const BigReal& s, long prec) {
  BigReal ss = s.at_prec(prec + 24);
  if (!(ss > 0L)) throw domain_error("beta1_mellin_quadrature: s must be positive");
  auto f = [&](const BigReal& v) {
    return beta1_half_exp(ldexp2(v, 1)) * pow(v, ss - 1L);
  };
  return integrate_to_inf(f, BigReal(0L, prec + 24), prec).value.at_prec(prec);
}

BigReal beta1_mellin_closed(const BigReal& s, long prec) {
  BigReal ss = s.at_prec(prec + 24);
  BigReal half = ldexp2(BigReal(1L, prec + 24), -1);
  BigReal d = digamma((ss + 1L) * half) - digamma(ss * half);
  return ldexp2(gamma(ss) * d, -1).at_prec(prec);
}

}  // namespace pf
