#include "core/phi.hpp"

#include <cmath>
#include <vector>

#include "core/quadrature.hpp"
#include "core/special.hpp"

namespace pf {

BigReal eval_prime_log_combo(const PrimeLogCombo& combo, long prec) {
  BigReal acc(0L, prec);
  for (const auto& [p, c] : combo) {
    acc += BigReal(c, prec) * log(BigReal(p, prec));
  }
  return acc;
}

PrimeLogCombo coeff_positive_symbolic(const FieldContext& ctx, long n) {
  if (n < 1) throw domain_error("coeff_positive: n must be positive");
  PrimeLogCombo combo;
  const long q = ctx.q();
  long r = ctx.rho(n);
  if (r > 0) combo[q] += 2 * (ord_p(n, q) + 1) * r;
  for (const auto& [p, e] : factorize(n)) {
    if (p == q || !ctx.is_inert(p)) continue;
    long rp = ctx.rho(n / p);
    if (rp > 0) combo[p] += 2 * (e + 1) * rp;
  }
  return combo;
}

BigReal coeff_positive(const FieldContext& ctx, long n) {
  return eval_prime_log_combo(coeff_positive_symbolic(ctx, n), ctx.prec());
}

BigReal coeff_negative(const FieldContext& ctx, long n, const BigReal& v) {
  if (n < 1) throw domain_error("coeff_negative: index by |n|");
  if (!(v > BigReal(0L, 32))) throw domain_error("coeff_negative: v <= 0");
  long r = ctx.rho(n);
  if (r == 0) return BigReal(0L, ctx.prec());
  long wp = ctx.prec() + 16;
  BigReal x = ldexp2(const_pi(wp) * BigReal(n, wp) * v.at_prec(wp), 2);
  return ldexp2(BigReal(r, wp) * beta1(x), 1).at_prec(ctx.prec());
}

BigReal coeff_constant(const FieldContext& ctx, const BigReal& v) {
  if (!(v > BigReal(0L, 32))) throw domain_error("coeff_constant: v <= 0");
  long wp = ctx.prec() + 16;
  BigReal inner = ctx.log_q() + log(v.at_prec(wp)) +
                  ldexp2(ctx.lambda_logderiv_one(), 1);
  return (-BigReal(ctx.class_number(), wp) * inner).at_prec(ctx.prec());
}

PhiValue eval_phi(const FieldContext& ctx, const HalfPlanePoint& tau,
                  long nmax) {
  if (nmax < 1) throw domain_error("eval_phi: nmax < 1");
  const long prec = ctx.prec();
  const long wp = prec + 32;
  const BigReal u = tau.u.at_prec(wp);
  const BigReal v = tau.v.at_prec(wp);
  const BigReal two_pi_v = ldexp2(const_pi(wp) * v, 1);
  const BigReal r = exp(-two_pi_v);

  BigComplex acc(coeff_constant(ctx, v), BigReal(0L, wp));
  BigReal rn(1L, wp);
  for (long n = 1; n <= nmax; ++n) {
    rn = rn * r;
    BigComplex phase = unit_exp(BigReal(n, wp) * u);
    PrimeLogCombo combo = coeff_positive_symbolic(ctx, n);
    if (!combo.empty()) {
      acc += phase * BigComplex(eval_prime_log_combo(combo, wp) * rn);
    }
    long rho_n = ctx.rho(n);
    if (rho_n > 0) {
      // 2 rho(n) beta1(4 pi n v) e(-n tau) with the growing exponential of
      // e(-n tau) folded into beta1 exactly
      BigReal mag =
          ldexp2(BigReal(rho_n, wp) * beta1_half_exp(ldexp2(two_pi_v * BigReal(n, wp), 1)), 1);
      acc += conj(phase) * BigComplex(mag);
    }
  }

  // dropped positive terms: a_n <= 2 n (log q + 3 log n) and the ratio of
  // consecutive bounds is at most r (1 + 1/n)^2; dropped negative terms:
  // 2 rho(n) beta1(x) e^(x/2) <= e^(-2 pi n v) / (2 pi v)
  BigReal tail(0L, wp);
  {
    BigReal np1(nmax + 1, wp);
    BigReal g = r * (1L + BigReal(1L, wp) / np1) * (1L + BigReal(1L, wp) / np1);
    if (!(g < BigReal(1L, wp))) {
      throw convergence_error("eval_phi: tail bound needs nmax > 1/(pi v)");
    }
    BigReal first = ldexp2(np1 * (ctx.log_q() + BigReal(3L, wp) * log(np1)), 1) *
                    pow(r, np1);
    tail += first / (1L - g);
    tail += pow(r, np1) / (two_pi_v * (1L - r));
  }
  return {acc.at_prec(prec), tail.at_prec(prec)};
}

BigReal mellin_closed(const FieldContext& ctx, const BigReal& s) {
  if (!(s > BigReal(1L, 32))) {
    throw domain_error("mellin_closed: defined for s > 1");
  }
  const long wp = ctx.prec() + 32;
  BigReal sw = s.at_prec(wp);
  BigReal two_pi = ldexp2(const_pi(wp), 1);
  BigReal lambda_k = ldexp2(pow(two_pi, -sw) * gamma(sw) * riemann_zeta(sw) *
                                ctx.dirichlet_l(sw),
                            1);
  BigReal kappa =
      ldexp2(digamma(ldexp2(sw + 1L, -1)) - digamma(ldexp2(sw, -1)), -1);
  BigReal bracket =
      ctx.log_q() + kappa + ctx.l_logderiv(sw) - zeta_logderiv(sw);
  return (lambda_k * bracket).at_prec(ctx.prec());
}

BigReal mellin_quadrature(const FieldContext& ctx, const BigReal& s,
                          long nmax) {
  if (!(s > BigReal(1L, 32))) {
    throw domain_error("mellin_quadrature: defined for s > 1");
  }
  if (nmax < 4) throw domain_error("mellin_quadrature: nmax < 4");
  const long prec = ctx.prec();
  const long wp = prec + 24;
  const BigReal sw = s.at_prec(wp);
  const BigReal pi = const_pi(wp);
  const BigReal two_pi = ldexp2(pi, 1);

  std::vector<BigReal> an;
  std::vector<long> rho_n(static_cast<size_t>(nmax) + 1, 0);
  an.reserve(static_cast<size_t>(nmax) + 1);
  an.emplace_back(0L, wp);
  BigReal an_max(1L, wp);
  for (long n = 1; n <= nmax; ++n) {
    an.push_back(eval_prime_log_combo(coeff_positive_symbolic(ctx, n), wp));
    rho_n[n] = ctx.rho(n);
    if (an.back() > an_max) an_max = an.back();
  }

  // truncated expansion without the constant term, at height v
  auto truncated = [&](const BigReal& v) {
    BigReal r = exp(-two_pi * v);
    BigReal acc(0L, wp);
    BigReal rn(1L, wp);
    BigReal floor = ldexp2(BigReal(1L, wp), -wp - 16);
    for (long n = 1; n <= nmax; ++n) {
      rn = rn * r;
      if (an_max * rn < floor) break;  // later terms below working precision
      if (!(an[n] == BigReal(0L, wp))) acc += an[n] * rn;
      if (rho_n[n] > 0) {
        acc += ldexp2(
            BigReal(rho_n[n], wp) *
                beta1_half_exp(ldexp2(two_pi * BigReal(n, wp) * v, 1)),
            1);
      }
    }
    return acc;
  };

  QuadOptions opt;
  opt.tolerance = ldexp2(BigReal(1L, wp), -prec);
  // upper half directly; lower half via v -> 1/w so both live on [1, inf)
  auto upper = integrate_to_inf(
      [&](const BigReal& v) { return truncated(v) * pow(v, sw - 1L); },
      BigReal(1L, wp), wp, opt);
  auto lower = integrate_to_inf(
      [&](const BigReal& w) {
        return truncated(BigReal(1L, wp) / w) * pow(w, -sw - 1L);
      },
      BigReal(1L, wp), wp, opt);

  // indices beyond nmax, restored through the Dirichlet series: the positive
  // side sums to 2 zeta_k(s) (log q + L'/L - zeta'/zeta) and each term
  // integrates to Gamma(s) (2 pi n)^(-s); the negative side sums to
  // 2 zeta_k(s) and integrates against Gamma(s) kappa(s) (2 pi n)^(-s)
  BigReal zeta_s = riemann_zeta(sw);
  BigReal l_s = ctx.dirichlet_l(sw);
  BigReal zk = zeta_s * l_s;
  BigReal dseries =
      ldexp2(zk * (ctx.log_q() + ctx.l_logderiv(sw) - zeta_logderiv(sw)), 1);
  BigReal rho_series = ldexp2(zk, 1);
  for (long n = 1; n <= nmax; ++n) {
    BigReal ns = pow(BigReal(n, wp), -sw);
    if (!(an[n] == BigReal(0L, wp))) dseries -= an[n] * ns;
    if (rho_n[n] > 0) rho_series -= ldexp2(BigReal(rho_n[n], wp) * ns, 1);
  }
  BigReal kappa =
      ldexp2(digamma(ldexp2(sw + 1L, -1)) - digamma(ldexp2(sw, -1)), -1);
  BigReal tail =
      gamma(sw) * pow(two_pi, -sw) * (dseries + kappa * rho_series);

  return (upper.value + lower.value + tail).at_prec(prec);
}

}  // namespace pf
