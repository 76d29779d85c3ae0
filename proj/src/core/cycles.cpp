#include "core/cycles.hpp"

#include "core/special.hpp"

namespace pf {

namespace {

// unit group order of the ring of integers; the labels q > 3 exclude the
// discriminants -3 and -4 with extra units
constexpr long kUnits = 2;

}  // namespace

GrossMultiplicity gross_multiplicity(const FieldContext& ctx, long p, long t) {
  if (t < 1) throw domain_error("gross_multiplicity: t must be positive");
  if (ctx.is_split(p)) {
    throw domain_error("gross_multiplicity: split primes carry no cycle");
  }
  long e = ord_p(t, p);
  if (p == ctx.q()) {
    return {p, 1, 1, e + 1};
  }
  if (e % 2 == 0) {
    throw domain_error(
        "gross_multiplicity: inert prime needs odd valuation of t");
  }
  return {p, 2, 0, (e + 1) / 2};
}

PrimeLogCombo deg_z_closed_symbolic(const FieldContext& ctx, long t) {
  if (t < 1) throw domain_error("deg_z_closed: t must be positive");
  return coeff_positive_symbolic(ctx, t);
}

BigReal deg_z_closed(const FieldContext& ctx, long t) {
  return eval_prime_log_combo(deg_z_closed_symbolic(ctx, t), ctx.prec());
}

PrimeLogCombo deg_z_lattice_symbolic(const FieldContext& ctx, long t) {
  if (t < 1) throw domain_error("deg_z_lattice: t must be positive");
  PrimeLogCombo combo;
  const long h = ctx.class_number();
  {
    GrossMultiplicity g = gross_multiplicity(ctx, ctx.q(), t);
    long cnt = 0;
    for (long i = 0; i < h; ++i) cnt += ctx.class_rep_count(i, t);
    long c = g.f_p * g.nu * kUnits * cnt;
    if (c != 0) combo[ctx.q()] = c;
  }
  for (const auto& [p, e] : factorize(t)) {
    if (p == ctx.q() || !ctx.is_inert(p) || e % 2 == 0) continue;
    GrossMultiplicity g = gross_multiplicity(ctx, p, t);
    long cnt = 0;
    for (long i = 0; i < h; ++i) cnt += ctx.class_rep_count(i, t * p);
    long c = g.f_p * g.nu * kUnits * cnt;
    if (c != 0) combo[p] = c;
  }
  return combo;
}

BigReal deg_z_lattice(const FieldContext& ctx, long t) {
  return eval_prime_log_combo(deg_z_lattice_symbolic(ctx, t), ctx.prec());
}

ArakelovDivisor arakelov_finite(const FieldContext& ctx, long t) {
  if (t < 1) throw domain_error("arakelov_finite: t must be positive");
  ArakelovDivisor div;
  const long h = ctx.class_number();
  {
    GrossMultiplicity g = gross_multiplicity(ctx, ctx.q(), t);
    for (long i = 0; i < h; ++i) {
      long c = ctx.class_rep_count(i, t);
      if (c > 0) div.finite[{ctx.q(), i}] = g.nu * kUnits * c;
    }
  }
  for (const auto& [p, e] : factorize(t)) {
    if (p == ctx.q() || !ctx.is_inert(p) || e % 2 == 0) continue;
    GrossMultiplicity g = gross_multiplicity(ctx, p, t);
    for (long i = 0; i < h; ++i) {
      long c = ctx.class_rep_count(i, t / p);
      if (c > 0) div.finite[{p, i}] = g.nu * kUnits * c;
    }
  }
  return div;
}

ArakelovDivisor arakelov_archimedean(const FieldContext& ctx, long t,
                                     const BigReal& v) {
  if (t > -1) throw domain_error("arakelov_archimedean: t must be negative");
  if (!(v > BigReal(0L, 32))) {
    throw domain_error("arakelov_archimedean: v <= 0");
  }
  ArakelovDivisor div;
  const long m = -t;
  const long wp = ctx.prec() + 16;
  BigReal weight = ldexp2(
      beta1(ldexp2(const_pi(wp) * BigReal(m, wp) * v.at_prec(wp), 2)), 1);
  for (long i = 0; i < ctx.class_number(); ++i) {
    long c = ctx.class_rep_count(i, m);
    if (c > 0) {
      div.archimedean.emplace(i, (weight * BigReal(c, wp)).at_prec(ctx.prec()));
    }
  }
  return div;
}

PrimeLogCombo arakelov_degree_symbolic(const FieldContext& ctx,
                                       const ArakelovDivisor& div) {
  PrimeLogCombo combo;
  for (const auto& [key, n] : div.finite) {
    long p = key.first;
    long f = (p == ctx.q()) ? 1 : 2;
    combo[p] += f * n;
  }
  return combo;
}

BigReal arakelov_degree_arch(const FieldContext& ctx,
                             const ArakelovDivisor& div) {
  BigReal acc(0L, ctx.prec());
  for (const auto& [i, r] : div.archimedean) acc += r;
  return acc;
}

}  // namespace pf
