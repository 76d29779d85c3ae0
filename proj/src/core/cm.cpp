#include "core/cm.hpp"

#include <gmp.h>

#include <numeric>
#include <utility>
#include <vector>

namespace pf {

namespace {

std::string rounded_integer_string(const BigReal& x) {
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, x.raw(), MPFR_RNDN);
  std::vector<char> buf(mpz_sizeinbase(z, 10) + 2);
  mpz_get_str(buf.data(), 10, z);
  mpz_clear(z);
  return std::string(buf.data());
}

int kronecker_si(long a, long b) {
  mpz_t za, zb;
  mpz_init_set_si(za, a);
  mpz_init_set_si(zb, b);
  int r = mpz_kronecker(za, zb);
  mpz_clear(za);
  mpz_clear(zb);
  return r;
}

long sigma3(long n) {
  long s = 0;
  for (long a = 1; a * a <= n; ++a) {
    if (n % a) continue;
    long b = n / a;
    s += a * a * a;
    if (b != a) s += b * b * b;
  }
  return s;
}

}  // namespace

std::vector<CMPoint> cm_points(long D, long prec_bits) {
  std::vector<CMPoint> pts;
  const BigReal root = sqrt(BigReal(D, prec_bits));
  for (const QuadForm& f : reduced_forms(D)) {
    const BigReal den(2 * f.a, prec_bits);
    pts.push_back({f, BigComplex(BigReal(-f.b, prec_bits) / den, root / den)});
  }
  return pts;
}

BigComplex j_invariant(const BigComplex& tau, long prec_bits) {
  if (!(tau.imag() > BigReal(0.5, 32)))
    throw domain_error("j_invariant needs Im(tau) >= 1/2");
  const long wp = prec_bits + 64;

  // nome e(tau); |nome| <= e^-pi < 0.05
  const BigReal mag = exp(-ldexp2(const_pi(wp) * tau.imag().at_prec(wp), 1));
  const BigComplex nome = unit_exp(tau.real().at_prec(wp)) * mag;
  const BigReal thr = ldexp2(BigReal(1L, 32), -(prec_bits + 32));

  // prod (1 - nome^n) and 1 + 240 sum sigma_3(n) nome^n, truncated when the
  // remaining terms (divisor sums bounded by 1.3 n^3, geometric tail ratio
  // below e^-pi) drop under the threshold
  BigComplex prod(BigReal(1L, wp));
  BigComplex e4(BigReal(1L, wp));
  BigComplex qpow = nome;
  BigReal magpow = mag;
  for (long n = 1;; ++n) {
    prod = prod * (BigReal(1L, wp) - qpow);
    e4 = e4 + BigComplex(qpow) * (240 * sigma3(n));
    const long nc = n + 1;
    if (BigReal(640L * nc * nc * nc, 32) * (magpow * mag) < thr) break;
    qpow = qpow * nome;
    magpow = magpow * mag;
  }

  // discriminant form nome * prod^24; then j = E4^3 / Delta
  const BigComplex p2 = prod * prod;
  const BigComplex p4 = p2 * p2;
  const BigComplex p8 = p4 * p4;
  const BigComplex delta = nome * (p8 * p8 * p8);
  return ((e4 * e4 * e4) / delta).at_prec(prec_bits);
}

SingularModuliProduct singular_moduli_product(long q, long d, long prec_bits) {
  if (!is_valid_field_label(q))
    throw domain_error("q must be a prime q = 3 (mod 4), q > 3");
  if (d <= 4 || !is_fundamental_discriminant_neg(d))
    throw domain_error("-d must be a fundamental discriminant with d > 4");
  if (std::gcd(q, d) != 1) throw domain_error("d must be prime to q");
  const long wp = prec_bits + 64;

  std::vector<BigComplex> j1, j2;
  for (const CMPoint& p : cm_points(q, wp)) j1.push_back(j_invariant(p.tau, wp));
  for (const CMPoint& p : cm_points(d, wp)) j2.push_back(j_invariant(p.tau, wp));

  BigComplex prod(BigReal(1L, wp));
  for (const BigComplex& a : j1)
    for (const BigComplex& b : j2) prod = prod * (a - b);

  // complex conjugation permutes the class pairs, so the product is real
  if (!(abs(prod.imag()) <= ldexp2(abs(prod), -prec_bits + 16)))
    throw tolerance_error("singular moduli product failed its reality check");

  SingularModuliProduct out;
  out.q = q;
  out.d = d;
  out.value = prod.real().at_prec(prec_bits);
  out.nearest_integer = rounded_integer_string(out.value);
  out.integrality_gap =
      abs(out.value - round_nearest(out.value)).at_prec(64);
  if (!(out.integrality_gap < BigReal(1e-5, 64)))
    throw tolerance_error("precision too low for an integral product");
  return out;
}

PrimeLogCombo genus_product_combo(const FieldContext& ctx, long d, long m) {
  if (m < 1) throw domain_error("genus_product_combo needs m >= 1");
  const long q = ctx.q();
  // sigma_eps(k) = sum over divisors of k of eps; multiplicative, vanishes
  // when a prime with eps(p) = -1 enters at odd order
  auto sigma_eps = [&](long k) -> long {
    long out = 1;
    for (auto [p, e] : factorize(k)) {
      const int eps = (p == q) ? kronecker_si(-d, p) : ctx.chi(p);
      if (eps == 1)
        out *= e + 1;
      else if (e % 2)
        return 0;
    }
    return out;
  };
  // log F(m) = sum_p log p sum_{a=1..ord_p m} sigma_eps(m / p^a)
  PrimeLogCombo combo;
  for (auto [p, e] : factorize(m)) {
    long c = 0;
    long rest = m;
    for (int a = 1; a <= e; ++a) {
      rest /= p;
      c += sigma_eps(rest);
    }
    if (c) combo[p] += c;
  }
  return combo;
}

GrossZagierReport gross_zagier_check(const FieldContext& ctx, long d,
                                     long prec_bits) {
  GrossZagierReport rep;
  rep.product = singular_moduli_product(ctx.q(), d, prec_bits);
  rep.lhs = ldexp2(log(abs(rep.product.value)), 1);

  const long dq = d * ctx.q();
  PrimeLogCombo genus, coeff_nonneg, coeff_all;
  auto add = [](PrimeLogCombo& dst, const PrimeLogCombo& src, long w) {
    for (const auto& [p, c] : src) dst[p] += w * c;
  };
  for (long n = 0; n * n < dq; ++n) {
    if ((dq - n * n) % 4) continue;
    const long m = (dq - n * n) / 4;
    const long w = n ? 2 : 1;  // +-n both enter the all-integers ranges
    add(genus, genus_product_combo(ctx, d, m), w);
    const PrimeLogCombo am = coeff_positive_symbolic(ctx, m);
    add(coeff_nonneg, am, 1);
    add(coeff_all, am, w);
  }
  rep.rhs = eval_prime_log_combo(genus, prec_bits);
  rep.gap = abs(rep.lhs - rep.rhs);
  rep.rhs_coeff_nonneg = eval_prime_log_combo(coeff_nonneg, prec_bits);
  rep.rhs_coeff_all = eval_prime_log_combo(coeff_all, prec_bits);
  return rep;
}

}  // namespace pf
