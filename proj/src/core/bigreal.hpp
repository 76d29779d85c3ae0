#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pf {

// Exit-code-bearing error taxonomy shared by the whole library.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

class tolerance_error : public std::runtime_error {
 public:
  explicit tolerance_error(const std::string& msg) : std::runtime_error(msg) {}
};

class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr long kDefaultPrecision = 128;
inline constexpr long kMinPrecision = 24;
inline constexpr long kMaxPrecision = 1 << 20;

// Arbitrary-precision real backed by MPFR, round-to-nearest throughout.
// Binary operations produce a result at min(precision of operands);
// long/double scalars adopt the precision of the big operand.
class BigReal {
 public:
  BigReal() { mpfr_init2(v_, kDefaultPrecision); mpfr_set_zero(v_, 1); }

  explicit BigReal(long prec_bits) {
    check_prec(prec_bits);
    mpfr_init2(v_, prec_bits);
    mpfr_set_zero(v_, 1);
  }

  BigReal(double value, long prec_bits) {
    check_prec(prec_bits);
    mpfr_init2(v_, prec_bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  BigReal(long value, long prec_bits) {
    check_prec(prec_bits);
    mpfr_init2(v_, prec_bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  static BigReal from_string(const std::string& s, long prec_bits) {
    check_prec(prec_bits);
    BigReal r(prec_bits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      throw domain_error("BigReal: cannot parse '" + s + "'");
    }
    return r;
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }

  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigReal& operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigReal() { mpfr_clear(v_); }

  long prec() const { return mpfr_get_prec(v_); }

  BigReal at_prec(long prec_bits) const {
    check_prec(prec_bits);
    BigReal r(prec_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Scientific-notation decimal string; digits == 0 picks full precision.
  std::string to_string(std::size_t digits = 0) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend void swap(BigReal& a, BigReal& b) noexcept { mpfr_swap(a.v_, b.v_); }

  BigReal operator-() const {
    BigReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  static void check_prec(long prec_bits) {
    if (prec_bits < kMinPrecision || prec_bits > kMaxPrecision) {
      throw domain_error("precision out of range: " + std::to_string(prec_bits));
    }
  }

 private:
  mpfr_t v_;
};

namespace detail {
inline long join_prec(const BigReal& a, const BigReal& b) {
  return a.prec() < b.prec() ? a.prec() : b.prec();
}
}  // namespace detail

#define PF_BIGREAL_BINOP(op, fn)                                          \
  inline BigReal operator op(const BigReal& a, const BigReal& b) {        \
    BigReal r(detail::join_prec(a, b));                                   \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                             \
    return r;                                                             \
  }                                                                       \
  inline BigReal operator op(const BigReal& a, long b) {                  \
    BigReal r(a.prec());                                                  \
    fn##_si(r.raw(), a.raw(), b, MPFR_RNDN);                              \
    return r;                                                             \
  }                                                                       \
  inline BigReal operator op(const BigReal& a, double b) {                \
    BigReal r(a.prec());                                                  \
    fn##_d(r.raw(), a.raw(), b, MPFR_RNDN);                               \
    return r;                                                             \
  }

PF_BIGREAL_BINOP(+, mpfr_add)
PF_BIGREAL_BINOP(-, mpfr_sub)
PF_BIGREAL_BINOP(*, mpfr_mul)
PF_BIGREAL_BINOP(/, mpfr_div)
#undef PF_BIGREAL_BINOP

inline BigReal operator+(long a, const BigReal& b) { return b + a; }
inline BigReal operator+(double a, const BigReal& b) { return b + a; }
inline BigReal operator*(long a, const BigReal& b) { return b * a; }
inline BigReal operator*(double a, const BigReal& b) { return b * a; }
inline BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline BigReal operator-(double a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_d_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline BigReal operator/(double a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_d_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

inline bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
inline bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }
inline bool operator!=(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) != 0; }
inline bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator<(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
inline bool operator<=(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
inline bool operator>=(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }

#define PF_BIGREAL_UNFN(name, fn)              \
  inline BigReal name(const BigReal& x) {      \
    BigReal r(x.prec());                       \
    fn(r.raw(), x.raw(), MPFR_RNDN);           \
    return r;                                  \
  }

PF_BIGREAL_UNFN(abs, mpfr_abs)
PF_BIGREAL_UNFN(sqrt, mpfr_sqrt)
PF_BIGREAL_UNFN(exp, mpfr_exp)
PF_BIGREAL_UNFN(expm1, mpfr_expm1)
PF_BIGREAL_UNFN(log, mpfr_log)
PF_BIGREAL_UNFN(log1p, mpfr_log1p)
PF_BIGREAL_UNFN(sin, mpfr_sin)
PF_BIGREAL_UNFN(cos, mpfr_cos)
PF_BIGREAL_UNFN(atan, mpfr_atan)
PF_BIGREAL_UNFN(sinh, mpfr_sinh)
PF_BIGREAL_UNFN(cosh, mpfr_cosh)
PF_BIGREAL_UNFN(tanh, mpfr_tanh)
PF_BIGREAL_UNFN(asinh, mpfr_asinh)
PF_BIGREAL_UNFN(floor, mpfr_rint_floor)
PF_BIGREAL_UNFN(ceil, mpfr_rint_ceil)
PF_BIGREAL_UNFN(round_nearest, mpfr_rint_round)
#undef PF_BIGREAL_UNFN

inline BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(detail::join_prec(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline BigReal pow(const BigReal& x, long n) {
  BigReal r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(detail::join_prec(x, y));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(detail::join_prec(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline BigReal fmin(const BigReal& a, const BigReal& b) { return a < b ? a : b; }
inline BigReal fmax(const BigReal& a, const BigReal& b) { return a > b ? a : b; }

inline BigReal ldexp2(const BigReal& x, long e) {
  BigReal r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

inline BigReal const_pi(long prec_bits) {
  BigReal r(prec_bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
inline BigReal const_euler(long prec_bits) {
  BigReal r(prec_bits);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}
inline BigReal const_log2(long prec_bits) {
  BigReal r(prec_bits);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

// Complex number as a pair of BigReals with the same propagation rules.
class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(long prec_bits) : re_(prec_bits), im_(prec_bits) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigReal re) : re_(std::move(re)), im_(0L, re_.prec()) {}
  BigComplex(double re, double im, long prec_bits) : re_(re, prec_bits), im_(im, prec_bits) {}

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }
  BigReal& real() { return re_; }
  BigReal& imag() { return im_; }
  long prec() const { return detail::join_prec(re_, im_); }
  BigComplex at_prec(long prec_bits) const {
    return BigComplex(re_.at_prec(prec_bits), im_.at_prec(prec_bits));
  }

  BigComplex operator-() const { return BigComplex(-re_, -im_); }

  BigComplex& operator+=(const BigComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  BigComplex& operator*=(const BigComplex& o) {
    BigReal nr = re_ * o.re_ - im_ * o.im_;
    BigReal ni = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(nr);
    im_ = std::move(ni);
    return *this;
  }

  std::string to_string(std::size_t digits = 0) const {
    return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") +
           abs(im_).to_string(digits) + "i";
  }

 private:
  BigReal re_;
  BigReal im_;
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.real() + b.real(), a.imag() + b.imag());
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.real() - b.real(), a.imag() - b.imag());
}
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.real() * b.real() - a.imag() * b.imag(),
                    a.real() * b.imag() + a.imag() * b.real());
}
inline BigComplex operator*(const BigComplex& a, const BigReal& b) {
  return BigComplex(a.real() * b, a.imag() * b);
}
inline BigComplex operator*(const BigReal& a, const BigComplex& b) { return b * a; }
inline BigComplex operator*(const BigComplex& a, long b) {
  return BigComplex(a.real() * b, a.imag() * b);
}
inline BigComplex operator+(const BigComplex& a, const BigReal& b) {
  return BigComplex(a.real() + b, a.imag());
}
inline BigComplex operator-(const BigComplex& a, const BigReal& b) {
  return BigComplex(a.real() - b, a.imag());
}
inline BigComplex operator+(const BigReal& a, const BigComplex& b) {
  return BigComplex(a + b.real(), b.imag());
}
inline BigComplex operator-(const BigReal& a, const BigComplex& b) {
  return BigComplex(a - b.real(), -b.imag());
}
inline BigComplex operator/(const BigComplex& a, const BigReal& b) {
  return BigComplex(a.real() / b, a.imag() / b);
}
inline BigReal norm(const BigComplex& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}
inline BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }
inline BigReal arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }
inline BigComplex conj(const BigComplex& z) { return BigComplex(z.real(), -z.imag()); }
inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal n = norm(b);
  return BigComplex((a.real() * b.real() + a.imag() * b.imag()) / n,
                    (a.imag() * b.real() - a.real() * b.imag()) / n);
}
inline BigComplex operator/(const BigReal& a, const BigComplex& b) {
  BigReal n = norm(b);
  return BigComplex(a * b.real() / n, -(a * b.imag()) / n);
}
inline BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.real());
  return BigComplex(m * cos(z.imag()), m * sin(z.imag()));
}
inline BigComplex log(const BigComplex& z) {
  return BigComplex(BigReal(0.5, z.prec()) * log(norm(z)), arg(z));
}
inline BigComplex pow(const BigComplex& z, const BigComplex& w) {
  return exp(w * log(z));
}
inline BigComplex pow(const BigComplex& z, const BigReal& w) {
  return exp(log(z) * w);
}

// e(x) = exp(2 pi i x)
inline BigComplex unit_exp(const BigReal& x) {
  BigReal t = 2L * const_pi(x.prec()) * x;
  return BigComplex(cos(t), sin(t));
}

}  // namespace pf
