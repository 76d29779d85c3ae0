#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "core/bigreal.hpp"

namespace pf {

// Positive definite integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
  long a = 0, b = 0, c = 0;
  long disc() const { return b * b - 4 * a * c; }
};

// q admissible as the field label: prime, q = 3 (mod 4), q > 3.
bool is_valid_field_label(long q);

// All reduced forms of discriminant -D (D > 0, D = 0 or 3 mod 4),
// principal form first, then sorted by (a, |b|, sign).
std::vector<QuadForm> reduced_forms(long D);

// -D is a fundamental discriminant.
bool is_fundamental_discriminant_neg(long D);

// Trial-division factorization, pairs (prime, exponent), ascending.
std::vector<std::pair<long, int>> factorize(long n);

long ord_p(long n, long p);

// The imaginary quadratic field attached to q, with its class data and
// character; all analytic values are produced at the context precision.
class FieldContext {
 public:
  explicit FieldContext(long q, long prec_bits = kDefaultPrecision);

  long q() const { return q_; }
  long prec() const { return prec_; }
  long class_number() const { return static_cast<long>(forms_.size()); }
  const std::vector<QuadForm>& forms() const { return forms_; }

  // Quadratic character mod q (Kronecker symbol).
  int chi(long n) const;
  bool is_split(long p) const { return chi(p) == 1; }
  bool is_inert(long p) const { return chi(p) == -1; }
  bool is_ramified(long p) const { return p == q_; }

  // Number of integral ideals of norm n (multiplicative closed form).
  long rho(long n) const;
  // The same count by lattice-point enumeration over all reduced forms.
  long rho_brute(long n) const;

  // Lattice points (x, y) with Q_i(x, y) = m, counting both signs.
  long form_rep_count(std::size_t form_index, long m) const;
  // Ideals of norm m in the class labeled by form_index (= half the above).
  long class_rep_count(std::size_t form_index, long m) const;

  // L(s, chi) via Hurwitz zeta decomposition; s = 1 handled by the
  // digamma limit of the same decomposition.
  BigReal dirichlet_l(const BigReal& s) const;
  // L'(s)/L(s) by high-order central differences at elevated precision.
  BigReal l_logderiv(const BigReal& s) const;
  // Gamma-completed L: pi^(-(s+1)/2) Gamma((s+1)/2) L(s, chi).
  BigReal lambda_chi(const BigReal& s) const;

  const BigReal& log_q() const { return log_q_; }
  const BigReal& l_one() const { return l_one_; }
  const BigReal& l_logderiv_one() const { return l_logderiv_one_; }
  // Lambda'(1, chi) / Lambda(1, chi)
  const BigReal& lambda_logderiv_one() const { return lambda_logderiv_one_; }

 private:
  long q_;
  long prec_;
  std::vector<QuadForm> forms_;
  BigReal log_q_;
  BigReal l_one_;
  BigReal l_logderiv_one_;
  BigReal lambda_logderiv_one_;
};

}  // namespace pf
