#pragma once

#include <functional>

#include "core/bigreal.hpp"

namespace pf {

struct QuadOptions {
  long max_level = 14;
  // Relative stopping tolerance; zero selects 2^(-prec/2).
  BigReal tolerance{0.0, kDefaultPrecision};
  // Scale floor so integrals near zero can still converge.
  BigReal absolute_floor{0.0, kDefaultPrecision};
};

template <class V>
struct QuadResult {
  V value;
  BigReal error_estimate;
  long levels = 0;
  long evaluations = 0;
};

// Double-exponential (tanh-sinh) quadrature over [a, b].
// Integrable endpoint singularities are fine; nodes are generated so that
// the distance to the nearer endpoint keeps full relative accuracy.
QuadResult<BigReal> integrate_finite(const std::function<BigReal(const BigReal&)>& f,
                                     const BigReal& a, const BigReal& b, long prec,
                                     const QuadOptions& opt = {});
QuadResult<BigComplex> integrate_finite_c(const std::function<BigComplex(const BigReal&)>& f,
                                          const BigReal& a, const BigReal& b, long prec,
                                          const QuadOptions& opt = {});

// Double-exponential (exp-sinh) quadrature over [a, infinity).
QuadResult<BigReal> integrate_to_inf(const std::function<BigReal(const BigReal&)>& f,
                                     const BigReal& a, long prec,
                                     const QuadOptions& opt = {});
QuadResult<BigComplex> integrate_to_inf_c(const std::function<BigComplex(const BigReal&)>& f,
                                          const BigReal& a, long prec,
                                          const QuadOptions& opt = {});

}  // namespace pf
