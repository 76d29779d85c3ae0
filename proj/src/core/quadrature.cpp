#include "core/quadrature.hpp"

namespace pf {
namespace {

template <class V>
V make_zero(long prec);
template <>
BigReal make_zero<BigReal>(long prec) { return BigReal(prec); }
template <>
BigComplex make_zero<BigComplex>(long prec) { return BigComplex(prec); }

// Truncation point: node parameters run over |t| <= t_max with
// u = (pi/2) sinh(t) reaching u_max = 2.5 * wp * ln 2, which keeps the
// discarded double-exponential tail below 2^-wp even for integrands with
// endpoint behavior as strong as x^(alpha-1), alpha >= 0.2.
BigReal t_cutoff(long wp) {
  BigReal u_max = BigReal(2.5, wp) * BigReal(static_cast<long>(wp), wp) * const_log2(wp);
  return asinh(2L * u_max / const_pi(wp));
}

struct Node {
  BigReal point;   // abscissa in the target interval
  BigReal weight;  // quadrature weight including the jacobian
  bool usable = false;
};

// tanh-sinh node for parameter t (t may be negative) on [a, b].
Node ts_node(const BigReal& t, const BigReal& a, const BigReal& b, const BigReal& half_pi,
             long wp) {
  Node n;
  BigReal u = half_pi * sinh(t);
  BigReal au = abs(u);
  // delta = 1 - |tanh(u)| = 2 / (exp(2|u|) + 1), computed without cancellation
  BigReal delta = 2L / (exp(ldexp2(au, 1)) + 1L);
  if (delta.is_zero()) return n;
  BigReal w = half_pi * cosh(t) / pow(cosh(u), 2L);
  if (w.is_zero()) return n;
  BigReal r = ldexp2(b - a, -1);
  // attach the node to the nearer endpoint for relative accuracy there
  n.point = (u.sign() >= 0) ? b - r * delta : a + r * delta;
  n.weight = r * w;
  n.usable = true;
  (void)wp;
  return n;
}

// exp-sinh node for parameter t on [a, infinity).
Node es_node(const BigReal& t, const BigReal& a, const BigReal& half_pi) {
  Node n;
  BigReal x = exp(half_pi * sinh(t));
  if (x.is_zero() || x.is_inf()) return n;
  BigReal w = half_pi * cosh(t) * x;
  if (w.is_zero() || w.is_inf()) return n;
  n.point = a + x;
  n.weight = w;
  n.usable = true;
  return n;
}

template <class V, class F, class NodeGen>
QuadResult<V> de_levels(const F& f, long prec, const QuadOptions& opt, const NodeGen& gen) {
  const long wp = prec + 24;
  BigReal tol = opt.tolerance.is_zero() ? ldexp2(BigReal(1L, wp), -prec / 2)
                                        : opt.tolerance.at_prec(wp);
  BigReal floor_scale = opt.absolute_floor.at_prec(wp);
  const BigReal t_max = t_cutoff(wp);
  const BigReal tiny = ldexp2(BigReal(1L, wp), -wp - 10);

  QuadResult<V> res;
  res.value = make_zero<V>(wp);
  res.error_estimate = BigReal(wp);

  V total = make_zero<V>(wp);
  V prev = make_zero<V>(wp);
  BigReal level_peak(wp);

  auto add_param = [&](const BigReal& t, const BigReal& h) -> BigReal {
    Node n = gen(t);
    if (!n.usable) return BigReal(wp);
    V fv = f(n.point);
    BigReal mag = abs(fv);
    if (mag.is_nan()) {
      throw domain_error("quadrature: integrand is nan at an interior node");
    }
    V term = fv * (n.weight * h);
    total += term;
    ++res.evaluations;
    BigReal tmag = abs(term);
    if (tmag > level_peak) level_peak = tmag;
    return tmag;
  };

  for (long level = 0; level <= opt.max_level; ++level) {
    BigReal h = ldexp2(BigReal(1L, wp), -level);
    level_peak = BigReal(wp);
    auto is_negligible = [&](const BigReal& m) {
      BigReal peak = fmax(level_peak, floor_scale);
      return !peak.is_zero() && m < tiny * peak;
    };
    long first_k = 1, stride = 1;
    if (level == 0) {
      add_param(BigReal(wp), h);
    } else {
      // only odd multiples of h are new at this level
      total = total * BigReal(0.5, wp);
      stride = 2;
    }
    long consecutive_small = 0;
    for (long k = first_k;; k += stride) {
      BigReal t = BigReal(k, wp) * h;
      if (t > t_max) break;
      BigReal m1 = add_param(t, h);
      BigReal m2 = add_param(-t, h);
      if (is_negligible(fmax(m1, m2))) {
        if (++consecutive_small >= 2) break;
      } else {
        consecutive_small = 0;
      }
    }

    res.levels = level;
    if (level >= 2) {
      BigReal diff = abs(total - prev);
      BigReal scale = fmax(abs(total), floor_scale);
      res.error_estimate = diff;
      if (diff <= tol * scale) {
        res.value = total;
        return res;
      }
    }
    prev = total;
  }
  throw convergence_error("quadrature: no convergence within level budget");
}

}  // namespace

QuadResult<BigReal> integrate_finite(const std::function<BigReal(const BigReal&)>& f,
                                     const BigReal& a, const BigReal& b, long prec,
                                     const QuadOptions& opt) {
  const long wp = prec + 24;
  BigReal half_pi = ldexp2(const_pi(wp), -1);
  BigReal aa = a.at_prec(wp), bb = b.at_prec(wp);
  return de_levels<BigReal>(f, prec, opt,
                            [&](const BigReal& t) { return ts_node(t, aa, bb, half_pi, wp); });
}

QuadResult<BigComplex> integrate_finite_c(const std::function<BigComplex(const BigReal&)>& f,
                                          const BigReal& a, const BigReal& b, long prec,
                                          const QuadOptions& opt) {
  const long wp = prec + 24;
  BigReal half_pi = ldexp2(const_pi(wp), -1);
  BigReal aa = a.at_prec(wp), bb = b.at_prec(wp);
  return de_levels<BigComplex>(f, prec, opt,
                               [&](const BigReal& t) { return ts_node(t, aa, bb, half_pi, wp); });
}

QuadResult<BigReal> integrate_to_inf(const std::function<BigReal(const BigReal&)>& f,
                                     const BigReal& a, long prec, const QuadOptions& opt) {
  const long wp = prec + 24;
  BigReal half_pi = ldexp2(const_pi(wp), -1);
  BigReal aa = a.at_prec(wp);
  return de_levels<BigReal>(f, prec, opt,
                            [&](const BigReal& t) { return es_node(t, aa, half_pi); });
}

QuadResult<BigComplex> integrate_to_inf_c(const std::function<BigComplex(const BigReal&)>& f,
                                          const BigReal& a, long prec, const QuadOptions& opt) {
  const long wp = prec + 24;
  BigReal half_pi = ldexp2(const_pi(wp), -1);
  BigReal aa = a.at_prec(wp);
  return de_levels<BigComplex>(f, prec, opt,
                               [&](const BigReal& t) { return es_node(t, aa, half_pi); });
}

}  // namespace pf
