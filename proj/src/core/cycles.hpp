#pragma once

#include <map>
#include <utility>

#include "core/bigreal.hpp"
#include "core/phi.hpp"
#include "core/quadfield.hpp"

namespace pf {

struct GrossMultiplicity {
  long p;
  int f_p;  // residue degree of the fiber
  int d_p;  // valuation of the field discriminant at p
  long nu;  // local length (ord_p(t) + d_p - 1)/f_p + 1
};

// local multiplicity at a non-split prime; throws for split primes and for
// inert primes at even valuation (no cycle support there)
GrossMultiplicity gross_multiplicity(const FieldContext& ctx, long p, long t);

// closed-form degree: the same prime-log combination as the positive
// Fourier coefficient of index t
PrimeLogCombo deg_z_closed_symbolic(const FieldContext& ctx, long t);
BigReal deg_z_closed(const FieldContext& ctx, long t);

// degree assembled from representation counts over the class-labeled fiber:
// per non-split p, f_p log(p) nu_p(t) times the number of lattice vectors of
// norm t, counted as 2 ideals of norm tp (inert) or t (ramified) per class
PrimeLogCombo deg_z_lattice_symbolic(const FieldContext& ctx, long t);
BigReal deg_z_lattice(const FieldContext& ctx, long t);

struct ArakelovDivisor {
  // finite multiplicities keyed by (rational prime, class index)
  std::map<std::pair<long, long>, long> finite;
  // archimedean weights keyed by class index
  std::map<long, BigReal> archimedean;
};

// finite divisor of index t > 0: one prime of the class field per ideal
// class over each active non-split p, with multiplicity
// nu_p(t) * 2 * #{ideals in the class of norm t/kappa_p},
// kappa_p = p (inert) or 1 (ramified)
ArakelovDivisor arakelov_finite(const FieldContext& ctx, long t);

// archimedean divisor of index t < 0 at height v: per-class weight
// 2 beta1(4 pi |t| v) * #{ideals in the class of norm |t|}
ArakelovDivisor arakelov_archimedean(const FieldContext& ctx, long t,
                                     const BigReal& v);

// degree of the finite part, sum of f_p log(p) times multiplicity
PrimeLogCombo arakelov_degree_symbolic(const FieldContext& ctx,
                                       const ArakelovDivisor& div);
// total archimedean weight
BigReal arakelov_degree_arch(const FieldContext& ctx,
                             const ArakelovDivisor& div);

}  // namespace pf
