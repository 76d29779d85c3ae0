#include "core/whittaker.hpp"

#include <cmath>
#include <cstdlib>

#include "core/quadrature.hpp"
#include "core/special.hpp"

namespace pf {

BigReal bessel_k_scaled(const BigReal& nu, const BigReal& z, long prec) {
  if (!(z > 0L)) throw domain_error("bessel_k_scaled: need z > 0");
  const long wp = prec + 24;
  BigReal nw = abs(nu).at_prec(wp);
  BigReal zw = z.at_prec(wp);
  auto f = [&](const BigReal& w) {
    // cosh(w) - 1 = 2 sinh(w/2)^2, exact near w = 0; cosh(nu w) folded into
    // the exponent so extreme nodes underflow to 0 instead of 0 * inf
    BigReal sh = sinh(ldexp2(w, -1));
    BigReal a = nw * w;
    BigReal expo = a - zw * ldexp2(sh * sh, 1);
    return ldexp2(exp(expo) * (1L + exp(ldexp2(-a, 1))), -1);
  };
  auto r = integrate_to_inf(f, BigReal(wp), wp);
  return r.value.at_prec(prec);
}

int chi_q_local(const FieldContext& ctx, long t) {
  if (t == 0) throw domain_error("chi_q_local: need t != 0");
  long t0 = t;
  while (t0 % ctx.q() == 0) t0 /= ctx.q();
  return ctx.chi(t0);
}

BigReal finite_factor(const FieldContext& ctx, long p, long t, const BigReal& s) {
  if (t == 0) throw domain_error("finite_factor: need t != 0");
  if (p < 2 || p == ctx.q() || factorize(p).size() != 1 ||
      factorize(p).front().second != 1) {
    throw domain_error("finite_factor: p must be a prime distinct from q");
  }
  const long prec = s.prec();
  const long wp = prec + 24;
  const long k = ord_p(t, p);
  BigReal x = BigReal(static_cast<long>(ctx.chi(p)), wp) * pow(BigReal(p, wp), -s.at_prec(wp));
  BigReal acc(1L, wp);
  BigReal xr(1L, wp);
  for (long r = 1; r <= k; ++r) {
    xr *= x;
    acc += xr;
  }
  return acc.at_prec(prec);
}

BigReal finite_factor_deriv0(const FieldContext& ctx, long p, long t) {
  if (t == 0) throw domain_error("finite_factor_deriv0: need t != 0");
  const long k = ord_p(t, p);
  if (!ctx.is_inert(p) || k % 2 == 0) {
    throw domain_error("finite_factor_deriv0: value does not vanish at 0");
  }
  const long wp = ctx.prec() + 24;
  return (log(BigReal(p, wp)) * BigReal((k + 1) / 2, wp)).at_prec(ctx.prec());
}

BigComplex q_factor(const FieldContext& ctx, long t, const BigReal& s) {
  if (t == 0) throw domain_error("q_factor: need t != 0");
  const long prec = s.prec();
  const long wp = prec + 24;
  const long k = ord_p(t, ctx.q());
  const int eps = chi_q_local(ctx, t);
  BigReal qp = pow(BigReal(ctx.q(), wp), -s.at_prec(wp) * BigReal(k + 1, wp));
  BigReal paren = BigReal(1L, wp) - BigReal(static_cast<long>(eps), wp) * qp;
  BigReal cq_im = BigReal(1L, wp) / sqrt(BigReal(ctx.q(), wp));
  return BigComplex(BigReal(0L, prec), (paren * cq_im).at_prec(prec));
}

BigComplex q_factor_deriv0(const FieldContext& ctx, long t) {
  if (t == 0) throw domain_error("q_factor_deriv0: need t != 0");
  const long wp = ctx.prec() + 24;
  const long k = ord_p(t, ctx.q());
  const int eps = chi_q_local(ctx, t);
  BigReal mag = BigReal(static_cast<long>(eps) * (k + 1), wp) * log(BigReal(ctx.q(), wp)) /
                sqrt(BigReal(ctx.q(), wp));
  return BigComplex(BigReal(0L, ctx.prec()), mag.at_prec(ctx.prec()));
}

namespace {

// Shared prefactor v^((1-s)/2) e(tu) 2 i pi^(s/2) / Gamma(s/2) times the
// exponential e^(-2 pi |t| v), applied to the shifted integral value.
BigComplex assemble_arch(const BigReal& u, const BigReal& v, long t,
                         const BigReal& s, const BigReal& integral, long wp,
                         long prec) {
  BigReal two_pi = ldexp2(const_pi(wp), 1);
  BigReal vpow = pow(v, ldexp2(BigReal(1L, wp) - s, -1));
  BigComplex phase = unit_exp(BigReal(t, wp) * u);
  BigReal decay = (t == 0) ? BigReal(1L, wp)
                           : exp(-two_pi * BigReal(std::labs(t), wp) * v);
  BigReal scale = ldexp2(pow(const_pi(wp), ldexp2(s, -1)) / gamma(ldexp2(s, -1)),
                         1);
  BigComplex val = BigComplex(BigReal(0L, wp), vpow * decay * scale) * phase;
  return (val * integral).at_prec(prec);
}

}  // namespace

BigComplex arch_factor(const HalfPlanePoint& tau, long t, const BigReal& s,
                       long prec) {
  long wp = prec + 32;
  // the two Bessel terms cancel to O(s) as s -> 0; spend extra bits there
  if (!(s == 0L) && abs(s) < 1L) {
    wp += 16 + static_cast<long>(std::ceil(-std::log2(std::abs(s.to_double()))));
  }
  BigReal u = tau.u.at_prec(wp), v = tau.v.at_prec(wp);
  BigReal sw = s.at_prec(wp);
  BigReal pi = const_pi(wp);

  if (t == 0) {
    if (s == 0L) return BigComplex(BigReal(0L, prec), sqrt(v).at_prec(prec));
    BigReal half1 = ldexp2(sw + 1L, -1);
    BigReal mag = pow(v, ldexp2(BigReal(1L, wp) - sw, -1)) *
                  pow(pi, -half1) * gamma(half1);
    return BigComplex(BigReal(0L, prec), mag.at_prec(prec));
  }
  if (s == 0L) {
    if (t < 0) return BigComplex(BigReal(0L, prec), BigReal(0L, prec));
    BigReal two_pi = ldexp2(pi, 1);
    BigReal mag = ldexp2(sqrt(v) * exp(-two_pi * BigReal(t, wp) * v), 1);
    BigComplex val = BigComplex(BigReal(0L, wp), mag) * unit_exp(BigReal(t, wp) * u);
    return val.at_prec(prec);
  }
  if (sw <= -2L) throw domain_error("arch_factor: need s > -2");

  // shifted integrals J' (t > 0) and J (t < 0) through scaled Bessel
  // functions: J' + J and J' - J are symmetric-product integrals.
  BigReal p2 = ldexp2(pi, 1);                       // 2 pi
  BigReal beta = ldexp2(BigReal(std::labs(t), wp) * v, 1);  // 2|t|v
  BigReal z = pi * beta;                            // 2 pi |t| v = p beta / 2
  BigReal bp = beta / p2;
  BigReal half_s = ldexp2(sw, -1);
  BigReal nu_hi = ldexp2(sw + 1L, -1);
  BigReal nu_lo = ldexp2(sw - 1L, -1);
  BigReal rt_pi = sqrt(pi);
  BigReal sum_term = (ldexp2(p2, 1) / sw) * gamma(half_s + 1L) *
                     pow(bp, nu_hi) * bessel_k_scaled(nu_hi, z, wp) / rt_pi;
  BigReal diff_term = beta * gamma(half_s) * pow(bp, nu_lo) *
                      bessel_k_scaled(nu_lo, z, wp) / rt_pi;
  BigReal integral = ldexp2(t > 0 ? sum_term + diff_term : sum_term - diff_term,
                            -1);
  return assemble_arch(u, v, t, sw, integral, wp, prec);
}

BigComplex arch_factor_quadrature(const HalfPlanePoint& tau, long t,
                                  const BigReal& s, long prec) {
  if (s == 0L) throw domain_error("arch_factor_quadrature: s = 0 excluded");
  const long wp = prec + 32;
  BigReal u = tau.u.at_prec(wp), v = tau.v.at_prec(wp);
  BigReal sw = s.at_prec(wp);
  BigReal pi = const_pi(wp);
  BigReal p2 = ldexp2(pi, 1);
  BigReal half_s = ldexp2(sw, -1);

  BigReal integral(wp);
  if (t == 0) {
    auto f = [&](const BigReal& x) { return exp(-p2 * x) * pow(x, sw - 1L); };
    if (sw >= 0.4) {
      integral = integrate_to_inf(f, BigReal(wp), wp).value;
    } else if (sw > -0.8) {
      auto g0 = [&](const BigReal& x) {
        return expm1(-p2 * x) * pow(x, sw - 1L);
      };
      integral = integrate_finite(g0, BigReal(wp), BigReal(1L, wp), wp).value +
                 BigReal(1L, wp) / sw +
                 integrate_to_inf(f, BigReal(1L, wp), wp).value;
    } else {
      throw domain_error("arch_factor_quadrature: s out of range for t = 0");
    }
  } else {
    BigReal beta = ldexp2(BigReal(std::labs(t), wp) * v, 1);
    if (t < 0) {
      // integrand x^(s/2) (x + beta)^(s/2 - 1): integrable endpoint for s > -2
      if (sw <= -1.6) {
        throw domain_error("arch_factor_quadrature: s too negative");
      }
      auto f = [&](const BigReal& x) {
        return exp(-p2 * x) * pow(x, half_s) * pow(x + beta, half_s - 1L);
      };
      integral = integrate_to_inf(f, BigReal(wp), wp).value;
    } else {
      auto f = [&](const BigReal& x) {
        return exp(-p2 * x) * pow(x + beta, half_s) * pow(x, half_s - 1L);
      };
      if (sw >= 0.4) {
        integral = integrate_to_inf(f, BigReal(wp), wp).value;
      } else if (sw > -1.6) {
        // subtract the endpoint value to continue through s = 0
        BigReal f0 = pow(beta, half_s);
        auto g0 = [&](const BigReal& x) {
          return (exp(-p2 * x) * pow(x + beta, half_s) - f0) *
                 pow(x, half_s - 1L);
        };
        integral = integrate_finite(g0, BigReal(wp), BigReal(1L, wp), wp).value +
                   f0 * (BigReal(2L, wp) / sw) +
                   integrate_to_inf(f, BigReal(1L, wp), wp).value;
      } else {
        throw domain_error("arch_factor_quadrature: s too negative");
      }
    }
  }
  return assemble_arch(u, v, t, sw, integral, wp, prec);
}

BigComplex arch_factor_deriv0(const HalfPlanePoint& tau, long t, long prec) {
  if (t >= 0) throw domain_error("arch_factor_deriv0: need t < 0");
  const long wp = prec + 32;
  BigReal u = tau.u.at_prec(wp), v = tau.v.at_prec(wp);
  BigReal four_pi = ldexp2(const_pi(wp), 2);
  // e^(2 pi |t| v) beta1(4 pi |t| v) evaluated as a fused pair
  BigReal mag = sqrt(v) * beta1_half_exp(four_pi * BigReal(-t, wp) * v);
  BigComplex val = BigComplex(BigReal(0L, wp), mag) * unit_exp(BigReal(t, wp) * u);
  return val.at_prec(prec);
}

}  // namespace pf
