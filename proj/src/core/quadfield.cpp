#include "core/quadfield.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "core/special.hpp"

namespace pf {

namespace {

long isqrt_exact(long n, bool* exact) {
  if (n < 0) {
    *exact = false;
    return -1;
  }
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  *exact = (r * r == n);
  return r;
}

}  // namespace

bool is_valid_field_label(long q) {
  if (q <= 3 || q % 4 != 3) return false;
  mpz_t z;
  mpz_init_set_si(z, q);
  int r = mpz_probab_prime_p(z, 40);
  mpz_clear(z);
  return r != 0;
}

bool is_fundamental_discriminant_neg(long D) {
  if (D <= 0) return false;
  long m = D % 4;
  if (m == 3) {
    // -D = 1 mod 4: fundamental iff D squarefree.
    for (long p = 2; p * p <= D; ++p) {
      if (D % (p * p) == 0) return false;
    }
    return true;
  }
  if (m == 0) {
    long d = D / 4;  // -D = 4d, need d squarefree and d = 1 or 2 mod 4
    long dm = d % 4;
    if (dm != 1 && dm != 2) return false;
    for (long p = 2; p * p <= d; ++p) {
      if (d % (p * p) == 0) return false;
    }
    return true;
  }
  return false;
}

std::vector<QuadForm> reduced_forms(long D) {
  if (D <= 0 || (D % 4 != 0 && D % 4 != 3)) {
    throw domain_error("reduced_forms: need D > 0 with D = 0 or 3 mod 4");
  }
  std::vector<QuadForm> out;
  for (long b = D % 2; 3 * b * b <= D; b += 2) {
    long m4 = b * b + D;  // = 4ac
    if (m4 % 4 != 0) continue;
    long m = m4 / 4;
    for (long a = std::max(b, 1L); a * a <= m; ++a) {
      if (m % a != 0) continue;
      long c = m / a;
      // reduction: |b| <= a <= c, with b >= 0 when |b| = a or a = c
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadForm& f, const QuadForm& g) {
    if (f.a != g.a) return f.a < g.a;
    if (std::labs(f.b) != std::labs(g.b)) return std::labs(f.b) < std::labs(g.b);
    return f.b > g.b;
  });
  if (out.empty() || out.front().a != 1) {
    throw domain_error("reduced_forms: principal form missing");
  }
  return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n <= 0) throw domain_error("factorize: need n >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long ord_p(long n, long p) {
  if (n == 0 || p < 2) throw domain_error("ord_p: need n != 0, p >= 2");
  long m = std::labs(n);
  long e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

FieldContext::FieldContext(long q, long prec_bits) : q_(q), prec_(prec_bits) {
  if (!is_valid_field_label(q)) {
    throw domain_error("FieldContext: q must be a prime = 3 mod 4, q > 3");
  }
  if (prec_bits < kMinPrecision || prec_bits > kMaxPrecision) {
    throw domain_error("FieldContext: precision out of range");
  }
  forms_ = reduced_forms(q);

  const long wp = prec_ + 64;
  log_q_ = log(BigReal(q, wp)).at_prec(prec_);

  // L(1, chi) from the digamma limit of the Hurwitz decomposition:
  // L(1) = -(1/q) sum_r chi(r) psi(r/q); the pole terms cancel since
  // sum_r chi(r) = 0.
  BigReal acc(wp);
  for (long r = 1; r < q_; ++r) {
    int c = chi(r);
    if (c == 0) continue;
    BigReal psi = digamma(BigReal(r, wp) / BigReal(q_, wp));
    if (c > 0) {
      acc -= psi;
    } else {
      acc += psi;
    }
  }
  BigReal l1 = acc / BigReal(q_, wp);
  if (!(l1 > 0L)) throw convergence_error("FieldContext: L(1) not positive");
  l_one_ = l1.at_prec(prec_);

  // Dirichlet class number formula (unit count 2): h = sqrt(q) L(1) / pi.
  BigReal h_formula = sqrt(BigReal(q_, wp)) * l1 / const_pi(wp);
  BigReal h_round = round_nearest(h_formula);
  if (abs(h_formula - h_round) > ldexp2(BigReal(1L, wp), -24) ||
      h_round.to_long() != class_number()) {
    throw convergence_error("FieldContext: class data inconsistent");
  }

  l_logderiv_one_ = l_logderiv(BigReal(1L, prec_));
  // Lambda(s) = pi^(-(s+1)/2) Gamma((s+1)/2) L(s): logarithmic derivative at
  // s = 1 picks up -(1/2) log pi + (1/2) psi(1).
  BigReal half(wp);
  half = BigReal(1L, wp) / 2L;
  BigReal corr = -half * log(const_pi(wp)) - half * const_euler(wp);
  lambda_logderiv_one_ = (corr + l_logderiv_one_).at_prec(prec_);
}

int FieldContext::chi(long n) const {
  mpz_t zq;
  mpz_init_set_si(zq, q_);
  int r = mpz_si_kronecker(n, zq);
  mpz_clear(zq);
  return r;
}

long FieldContext::rho(long n) const {
  if (n <= 0) throw domain_error("rho: need n >= 1");
  long out = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (p == q_) continue;  // ramified: one ideal above q at every exponent
    int c = chi(p);
    if (c == 1) {
      out *= (e + 1);
    } else if (e % 2 == 1) {
      return 0;  // inert prime at odd exponent
    }
  }
  return out;
}

long FieldContext::form_rep_count(std::size_t form_index, long m) const {
  if (form_index >= forms_.size()) {
    throw domain_error("form_rep_count: bad class index");
  }
  if (m <= 0) throw domain_error("form_rep_count: need m >= 1");
  const QuadForm& f = forms_[form_index];
  const long D = -f.disc();
  long count = 0;
  for (long y = 0;; ++y) {
    long rem = 4 * f.a * m - D * y * y;
    if (rem < 0) break;
    bool exact = false;
    long X = isqrt_exact(rem, &exact);  // X = 2ax + by
    if (!exact) continue;
    for (int sy : {1, -1}) {
      if (y == 0 && sy < 0) continue;
      for (int sx : {1, -1}) {
        if (X == 0 && sx < 0) continue;
        long num = sx * X - f.b * (sy * y);
        if (num % (2 * f.a) == 0) ++count;
      }
    }
  }
  return count;
}

long FieldContext::class_rep_count(std::size_t form_index, long m) const {
  long c = form_rep_count(form_index, m);
  if (c % 2 != 0) throw convergence_error("class_rep_count: odd lattice count");
  return c / 2;
}

long FieldContext::rho_brute(long n) const {
  long acc = 0;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    acc += class_rep_count(i, n);
  }
  return acc;
}

BigReal FieldContext::dirichlet_l(const BigReal& s) const {
  const long prec = std::max(s.prec(), prec_);
  const long wp = prec + 48;
  BigReal sw = s.at_prec(wp);
  if (sw == 1L) {
    BigReal acc(wp);
    for (long r = 1; r < q_; ++r) {
      int c = chi(r);
      if (c == 0) continue;
      BigReal psi = digamma(BigReal(r, wp) / BigReal(q_, wp));
      if (c > 0) {
        acc -= psi;
      } else {
        acc += psi;
      }
    }
    return (acc / BigReal(q_, wp)).at_prec(prec);
  }
  BigReal acc(wp);
  for (long r = 1; r < q_; ++r) {
    int c = chi(r);
    if (c == 0) continue;
    BigReal z = hurwitz_zeta(sw, BigReal(r, wp) / BigReal(q_, wp));
    if (c > 0) {
      acc += z;
    } else {
      acc -= z;
    }
  }
  return (acc * pow(BigReal(q_, wp), -sw)).at_prec(prec);
}

BigReal FieldContext::l_logderiv(const BigReal& s) const {
  const long prec = std::max(s.prec(), prec_);
  const long wp = 2 * prec + 48;
  if (!(s > 0L)) throw domain_error("l_logderiv: need s > 0");
  BigReal sw = s.at_prec(wp);
  BigReal h = ldexp2(BigReal(1L, wp), -(prec / 3 + 4));
  auto g = [&](const BigReal& x) { return log(abs(dirichlet_l(x))); };
  BigReal d = (-g(sw + 2L * h) + 8L * g(sw + h) - 8L * g(sw - h) +
               g(sw - 2L * h)) /
              (12L * h);
  return d.at_prec(prec);
}

BigReal FieldContext::lambda_chi(const BigReal& s) const {
  const long prec = std::max(s.prec(), prec_);
  const long wp = prec + 48;
  BigReal sw = s.at_prec(wp);
  BigReal half_arg = (sw + 1L) / 2L;
  if (half_arg.is_integer() && !(half_arg > 0L)) {
    throw domain_error("lambda_chi: gamma pole");
  }
  BigReal g = gamma(half_arg);
  BigReal p = pow(const_pi(wp), -half_arg);
  return (p * g * dirichlet_l(sw)).at_prec(prec);
}

}  // namespace pf
