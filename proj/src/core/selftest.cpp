#include "core/selftest.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

#include "core/cm.hpp"
#include "core/cycles.hpp"
#include "core/eisenstein.hpp"
#include "core/phi.hpp"
#include "core/quadfield.hpp"
#include "core/whittaker.hpp"

namespace pf {

namespace {

struct Harness {
  bool quick;
  std::vector<SelfCheck> out;

  template <typename F>
  void check(const std::string& name, F&& body) {
    SelfCheck c;
    c.name = name;
    c.ok = true;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
};

std::string fmt(const char* pattern, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

}  // namespace

std::vector<SelfCheck> run_selftest(bool quick) {
  Harness h{quick, {}};
  const long nmax_rho = quick ? 120 : 400;
  const long tmax_deg = quick ? 50 : 150;
  const long tmax_fiber = quick ? 30 : 80;

  h.check("ideal counts: closed form vs lattice enumeration", [&](SelfCheck& c) {
    for (long q : {7L, 11L}) {
      if (quick && q != 7) break;
      FieldContext ctx(q, 64);
      for (long n = 1; n <= nmax_rho; ++n) {
        if (ctx.rho(n) != ctx.rho_brute(n)) {
          c.ok = false;
          c.detail = fmt("q=%ld n=%ld", q, n);
          return;
        }
      }
    }
  });

  h.check("positive coefficients equal cycle degrees by both routes",
          [&](SelfCheck& c) {
            for (long q : {7L, 11L}) {
              if (quick && q != 7) break;
              FieldContext ctx(q, 64);
              for (long t = 1; t <= tmax_deg; ++t) {
                auto a = coeff_positive_symbolic(ctx, t);
                if (a != deg_z_lattice_symbolic(ctx, t) ||
                    a != deg_z_closed_symbolic(ctx, t)) {
                  c.ok = false;
                  c.detail = fmt("q=%ld t=%ld", q, t);
                  return;
                }
              }
            }
          });

  h.check("finite divisor degree matches the closed degree", [&](SelfCheck& c) {
    FieldContext ctx(23, 64);  // class number 3 exercises the fiber split
    for (long t = 1; t <= tmax_fiber; ++t) {
      if (arakelov_degree_symbolic(ctx, arakelov_finite(ctx, t)) !=
          deg_z_closed_symbolic(ctx, t)) {
        c.ok = false;
        c.detail = fmt("t=%ld", t);
        return;
      }
    }
  });

  h.check("archimedean divisor degree equals the negative coefficient",
          [&](SelfCheck& c) {
            FieldContext ctx(23, 128);
            BigReal v(1L, 128);
            for (long t = 1; t <= 12; ++t) {
              BigReal deg =
                  arakelov_degree_arch(ctx, arakelov_archimedean(ctx, -t, v));
              BigReal want = coeff_negative(ctx, t, v);
              BigReal gap = abs(deg - want);
              if (ctx.rho(t) == 0 ? !deg.is_zero()
                                  : (gap / want).to_double() > 1e-30) {
                c.ok = false;
                c.detail = fmt("t=-%ld", t);
                return;
              }
            }
          });

  h.check("direct extraction matches the local factor product",
          [&](SelfCheck& c) {
            const double tol = quick ? 1e-4 : 1e-5;
            const double v = 1.0, s = 3.0;
            FieldContext ctx(7, 128);
            long cutoff = direct_sum_cutoff(7, v, s, tol);
            auto table = fourier_extract(ctx, v, s, -2, 4, cutoff);
            BigReal vb(v, 128), sb(s, 128);
            BigReal scal = extract_scalar(ctx, vb, sb);
            HalfPlanePoint tau(BigReal(0L, 128), vb);
            double worst = 0;
            for (long t = -2; t <= 4; ++t) {
              if (t == 0) continue;
              BigComplex closed =
                  coefficient_product(ctx, tau, t, sb) * BigComplex(scal);
              std::complex<double> want(closed.real().to_double(),
                                        closed.imag().to_double());
              worst = std::max(worst, std::abs(table.coeff.at(t) - want));
            }
            c.ok = worst < tol;
            c.detail = fmt("max gap %.2e at cutoff %ld", worst, cutoff);
          });

  h.check("center: nonconstant coefficients and constant term vanish",
          [&](SelfCheck& c) {
            FieldContext ctx(7, 96);
            BigReal zero(0L, 96);
            HalfPlanePoint tau(BigReal(0.21, 96), BigReal(0.9, 96));
            for (long t : {1L, 2L, 3L, 6L, -1L, -3L}) {
              BigComplex w = coefficient_product(ctx, tau, t, zero);
              if (!(w.real().is_zero() && w.imag().is_zero())) {
                c.ok = false;
                c.detail = fmt("t=%ld", t);
                return;
              }
            }
            if (!constant_term(ctx, tau.v, zero).is_zero()) {
              c.ok = false;
              c.detail = "constant term";
            }
          });

  h.check("functional equation: completed constant term is odd",
          [&](SelfCheck& c) {
            FieldContext ctx(7, 128);
            BigReal v(0.83, 128);
            for (double sv : {0.4, 0.9}) {
              BigReal s(sv, 128);
              BigReal plus = constant_term(ctx, v, s);
              BigReal minus = constant_term(ctx, v, -s);
              if ((abs(plus + minus) / abs(plus)).to_double() > 1e-30) {
                c.ok = false;
                c.detail = fmt("s=%.1f", sv);
                return;
              }
            }
          });

  h.check("Mellin transform: quadrature matches the closed form",
          [&](SelfCheck& c) {
            FieldContext ctx(7, 96);
            double worst = 0;
            for (double sv : {2.0, 2.5}) {
              if (quick && sv != 2.0) break;
              BigReal s(sv, 96);
              BigReal closed = mellin_closed(ctx, s);
              BigReal quad = mellin_quadrature(ctx, s, quick ? 40 : 60);
              worst = std::max(worst,
                               (abs(quad - closed) / abs(closed)).to_double());
            }
            c.ok = worst < 1e-5;
            c.detail = fmt("max rel gap %.2e", worst);
          });

  h.check("value expansion: dropped tail stays within its bound",
          [&](SelfCheck& c) {
            FieldContext ctx(7, 128);
            HalfPlanePoint tau(BigReal(0.3, 128), BigReal(1.1, 128));
            // nmax = 3 leaves a tail resolvable at this precision, so the
            // comparison really exercises the bound
            PhiValue lo = eval_phi(ctx, tau, 3);
            PhiValue hi = eval_phi(ctx, tau, 40);
            BigReal diff = abs(lo.value - hi.value);
            c.ok = diff < lo.tail_bound && hi.tail_bound < lo.tail_bound;
            c.detail = fmt("gap %.2e bound %.2e", diff.to_double(),
                           lo.tail_bound.to_double());
          });

  h.check("modular invariance of the j-invariant", [&](SelfCheck& c) {
    BigComplex tau(BigReal(-0.137, 128), BigReal(1.21, 128));
    BigComplex a = j_invariant(tau, 128);
    BigComplex b = j_invariant(-(BigComplex(BigReal(1L, 128)) / tau), 128);
    c.ok = (abs(a - b) < ldexp2(abs(a), -100));
  });

  h.check("singular moduli identity at a witness pair", [&](SelfCheck& c) {
    FieldContext ctx(7, 128);
    GrossZagierReport rep = gross_zagier_check(ctx, 8, quick ? 160 : 192);
    c.ok = rep.gap.to_double() < 1e-10 &&
           rep.product.integrality_gap.to_double() < 1e-5;
    c.detail = fmt("J ~ %s, identity gap %.2e",
                   rep.product.nearest_integer.c_str(), rep.gap.to_double());
  });

  h.check("invalid inputs are rejected", [&](SelfCheck& c) {
    auto expect_reject = [&c](const char* what, auto&& fn) {
      if (!c.ok) return;
      try {
        fn();
        c.ok = false;
        c.detail = what;
      } catch (const domain_error&) {
      }
    };
    expect_reject("field label 8", [] { FieldContext bad(8, 64); });
    expect_reject("field label 13", [] { FieldContext bad(13, 64); });
    FieldContext ctx(7, 64);
    expect_reject("height 0", [] {
      HalfPlanePoint bad(BigReal(0L, 64), BigReal(0L, 64));
    });
    expect_reject("index 0", [&] {
      coefficient_product(ctx, HalfPlanePoint(BigReal(0L, 64), BigReal(1L, 64)),
                          0, BigReal(2L, 64));
    });
    expect_reject("non-fundamental auxiliary discriminant",
                  [] { singular_moduli_product(7, 12, 64); });
  });

  return h.out;
}

}  // namespace pf
