#pragma once

#include <string>
#include <vector>

#include "core/bigreal.hpp"
#include "core/phi.hpp"
#include "core/quadfield.hpp"

namespace pf {

// CM point (-b + i sqrt(D)) / (2a) attached to a reduced form of
// discriminant -D; reduction keeps it in the standard fundamental domain,
// so Im(tau) >= sqrt(3)/2.
struct CMPoint {
  QuadForm form;
  BigComplex tau;
};

std::vector<CMPoint> cm_points(long D, long prec_bits);

// Klein j-function by the weight-4 Eisenstein series cubed over the
// discriminant form, both from series in the nome truncated at
// 2^-(prec_bits+32). Requires Im(tau) >= 1/2.
BigComplex j_invariant(const BigComplex& tau, long prec_bits);

// prod (j(tau1) - j(tau2)) over all class pairs of discriminants -q, -d:
// a rational integer, computed to prec_bits and rounded.
struct SingularModuliProduct {
  long q = 0;
  long d = 0;
  BigReal value;                // the real product
  std::string nearest_integer;  // decimal string of the rounded value
  BigReal integrality_gap;      // |value - rounded value|
};

// pre: q a valid field label, -d fundamental, d > 4, gcd(d, q) = 1
SingularModuliProduct singular_moduli_product(long q, long d, long prec_bits);

// log F(m) as an exact prime-log combination, where
//   F(m) = prod over factorizations n n' = m of n^eps(n'),
// eps the genus character of the discriminant pair (-q, -d):
// eps(p) = chi(p) for p != q, and eps(q) = kronecker(-d, q).
PrimeLogCombo genus_product_combo(const FieldContext& ctx, long d, long m);

// Two-sided check of the singular-moduli identity: lhs = 2 log |J| against
// sums over n^2 < dq, n^2 = dq (mod 4), m = (dq - n^2)/4.  The sum of
// genus-character products over all integers n reproduces lhs; the raw
// expansion-coefficient sums (both n-range readings) are reported alongside,
// and do not match for any reading - see the tests for the witnesses.
struct GrossZagierReport {
  SingularModuliProduct product;
  BigReal lhs;               // 2 log |J|
  BigReal rhs;               // sum of log F(m) over all integers n
  BigReal gap;               // |lhs - rhs|
  BigReal rhs_coeff_nonneg;  // sum of coeff_positive(m) over n >= 0
  BigReal rhs_coeff_all;     // sum of coeff_positive(m) over all integers n
};

GrossZagierReport gross_zagier_check(const FieldContext& ctx, long d,
                                     long prec_bits);

}  // namespace pf
