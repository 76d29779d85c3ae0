// Acceptance suite: eight end-to-end criteria, one line of output each.
// Exit status is the number of failing criteria.  Tolerances and ranges are
// pinned here on purpose; loosening them is not an option.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "core/bigreal.hpp"
#include "core/cm.hpp"
#include "core/cycles.hpp"
#include "core/eisenstein.hpp"
#include "core/phi.hpp"
#include "core/quadfield.hpp"
#include "core/special.hpp"
#include "core/whittaker.hpp"

namespace {

using pf::BigComplex;
using pf::BigReal;

struct Criterion {
  std::string detail;
  bool ok = true;
  double budget_s = 0;  // 0 = no runtime budget

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double crel(const BigComplex& a, const BigComplex& b) {
  return (abs(a - b) / abs(a)).to_double();
}

// 1. closed-form ideal counts against lattice enumeration, exact
void c1_ideal_counts(Criterion& c) {
  c.budget_s = 30;
  for (long q : {7L, 11L, 19L, 31L}) {
    pf::FieldContext ctx(q, 64);
    for (long n = 1; n <= 5000; ++n) {
      if (ctx.rho(n) != ctx.rho_brute(n)) {
        c.fail(fmt("q=%ld n=%ld", q, n));
        return;
      }
    }
  }
  c.detail = "4 fields, n <= 5000, exact";
}

// 2. direct Fourier extraction against the local factor product
void c2_extraction_vs_product(Criterion& c) {
  c.budget_s = 300;
  const double tol = 1e-6;
  double worst = 0;
  for (long q : {7L, 11L}) {
    pf::FieldContext ctx(q, 128);
    for (double sv : {2.5, 3.0}) {
      for (double vv : {0.7, 1.3}) {
        long cutoff = pf::direct_sum_cutoff(q, vv, sv, tol);
        auto table = pf::fourier_extract(ctx, vv, sv, -4, 8, cutoff);
        BigReal sb(sv, 128), vb(vv, 128);
        BigReal scal = pf::extract_scalar(ctx, vb, sb);
        pf::HalfPlanePoint tau(BigReal(0L, 128), vb);
        for (long t = -4; t <= 8; ++t) {
          if (t == 0) continue;
          BigComplex closed =
              pf::coefficient_product(ctx, tau, t, sb) * BigComplex(scal);
          std::complex<double> want(closed.real().to_double(),
                                    closed.imag().to_double());
          double gap = std::abs(table.coeff.at(t) - want);
          worst = std::max(worst, gap);
          if (gap >= tol) {
            c.fail(fmt("q=%ld s=%.1f v=%.1f t=%ld gap=%.2e", q, sv, vv, t,
                       gap));
            return;
          }
        }
      }
    }
  }
  c.detail = fmt("8 configs, t in [-4,8], max gap %.2e < 1e-6", worst);
}

// 3. central vanishing of every indexed coefficient and the constant term,
//    plus termwise functional-equation antisymmetry
void c3_central_vanishing(Criterion& c) {
  pf::FieldContext ctx(7, 128);
  pf::HalfPlanePoint tau(BigReal(0.21, 128), BigReal(0.95, 128));
  BigReal zero(0L, 128);
  for (long t = -50; t <= 50; ++t) {
    if (t == 0) continue;
    BigComplex w = pf::coefficient_product(ctx, tau, t, zero);
    if (!(w.real().is_zero() && w.imag().is_zero())) {
      c.fail(fmt("product nonzero at t=%ld", t));
      return;
    }
  }
  if (!pf::constant_term(ctx, tau.v, zero).is_zero()) {
    c.fail("constant term nonzero at the center");
    return;
  }
  double worst = 0;
  for (double sv : {0.4, 0.9}) {
    BigReal s(sv, 128);
    BigReal ms = -s;
    for (long t : {-6L, -2L, -1L, 1L, 2L, 3L, 6L, 12L}) {
      BigComplex plus = pf::coefficient_product(ctx, tau, t, s);
      BigComplex mirror =
          BigComplex(pow(BigReal(7L, 160), ldexp2(ms.at_prec(160) + 1L, -1))) *
          pf::arch_factor_quadrature(tau, t, ms, 128) *
          pf::q_factor(ctx, t, ms);
      for (const auto& [p, e] : pf::factorize(std::labs(t))) {
        if (p == 7) continue;
        mirror *= BigComplex(pf::finite_factor(ctx, p, t, ms));
      }
      double dev = (abs(plus + mirror) / abs(plus)).to_double();
      worst = std::max(worst, dev);
      if (dev >= 1e-8) {
        c.fail(fmt("antisymmetry s=%.1f t=%ld dev=%.2e", sv, t, dev));
        return;
      }
    }
  }
  c.detail = fmt("|t| <= 50 exactly zero; antisymmetry max dev %.2e < 1e-8",
                 worst);
}

// 4. Mellin transform: quadrature against the closed form, and the
//    beta1-integral identity on its own
void c4_mellin(Criterion& c) {
  c.budget_s = 120;
  double worst = 0;
  for (long q : {7L, 11L}) {
    pf::FieldContext ctx(q, 96);
    for (double sv : {1.5, 2.0, 2.5, 3.0}) {
      BigReal s(sv, 96);
      BigReal closed = pf::mellin_closed(ctx, s);
      BigReal quad = pf::mellin_quadrature(ctx, s, 200);
      double rel = (abs(quad - closed) / abs(closed)).to_double();
      worst = std::max(worst, rel);
      if (rel >= 1e-5) {
        c.fail(fmt("q=%ld s=%.1f rel=%.2e", q, sv, rel));
        return;
      }
    }
  }
  double worst_b = 0;
  for (double sv : {1.2, 1.5, 2.0, 2.5, 3.0}) {
    BigReal s(sv, 128);
    BigReal lhs = pf::beta1_mellin_quadrature(s, 128);
    BigReal rhs = pf::beta1_mellin_closed(s, 128);
    double rel = (abs(lhs - rhs) / abs(rhs)).to_double();
    worst_b = std::max(worst_b, rel);
    if (rel >= 1e-20) {
      c.fail(fmt("beta1 identity s=%.1f rel=%.2e", sv, rel));
      return;
    }
  }
  c.detail = fmt("max rel %.2e < 1e-5; beta1 identity max rel %.2e < 1e-20",
                 worst, worst_b);
}

// 5. cycle degrees by lattice counts, closed form, and the coefficient
//    formula, exact as prime-log combinations
void c5_degree_routes(Criterion& c) {
  c.budget_s = 60;
  for (long q : {7L, 11L, 19L, 31L}) {
    pf::FieldContext ctx(q, 64);
    for (long t = 1; t <= 2000; ++t) {
      auto lattice = pf::deg_z_lattice_symbolic(ctx, t);
      if (lattice != pf::deg_z_closed_symbolic(ctx, t) ||
          lattice != pf::coeff_positive_symbolic(ctx, t)) {
        c.fail(fmt("q=%ld t=%ld", q, t));
        return;
      }
    }
  }
  c.detail = "4 fields, t <= 2000, three routes, exact";
}

// 6. singular moduli identity at the four witness pairs, 512 bits
void c6_singular_moduli(Criterion& c) {
  c.budget_s = 60;
  const std::vector<std::pair<long, long>> pairs = {
      {7, 8}, {7, 11}, {11, 8}, {19, 8}};
  std::string js;
  for (auto [q, d] : pairs) {
    pf::FieldContext ctx(q, 512);
    pf::GrossZagierReport rep = pf::gross_zagier_check(ctx, d, 512);
    double gap = rep.gap.to_double();
    double integ = rep.product.integrality_gap.to_double();
    if (gap >= 1e-12) {
      c.fail(fmt("(%ld,%ld) identity gap %.2e", q, d, gap));
      return;
    }
    if (integ >= 1e-5) {
      c.fail(fmt("(%ld,%ld) integrality gap %.2e", q, d, integ));
      return;
    }
    if (!js.empty()) js += ", ";
    js += rep.product.nearest_integer;
  }
  c.detail = "J = " + js + "; gaps < 1e-12, integral to 1e-5";
}

// 7. archimedean factor: quadrature vs closed form, and the central
//    derivative against a finite difference of the quadrature
void c7_archimedean(Criterion& c) {
  pf::HalfPlanePoint tau(BigReal(0.3, 128), BigReal(0.8, 128));
  double worst = 0;
  for (double sv : {0.5, 1.0, 2.0}) {
    BigReal s(sv, 128);
    for (long t : {-3L, -1L, 1L, 2L, 5L}) {
      double rel = crel(pf::arch_factor(tau, t, s, 128),
                        pf::arch_factor_quadrature(tau, t, s, 128));
      worst = std::max(worst, rel);
      if (rel >= 1e-10) {
        c.fail(fmt("s=%.1f t=%ld rel=%.2e", sv, t, rel));
        return;
      }
    }
  }
  double worst_d = 0;
  pf::HalfPlanePoint tau2(BigReal(0.25, 192), BigReal(0.7, 192));
  BigReal h(1e-4, 192);
  for (long t : {-1L, -4L}) {
    BigComplex d0 = pf::arch_factor_deriv0(tau2, t, 192);
    BigComplex fd = (pf::arch_factor_quadrature(tau2, t, h, 192) -
                     pf::arch_factor_quadrature(tau2, t, -h, 192)) *
                    BigComplex(BigReal(1L, 192) / ldexp2(h, 1));
    double rel = crel(d0, fd);
    worst_d = std::max(worst_d, rel);
    if (rel >= 1e-3) {
      c.fail(fmt("derivative t=%ld rel=%.2e", t, rel));
      return;
    }
  }
  c.detail = fmt("max rel %.2e < 1e-10; derivative max rel %.2e < 1e-3",
                 worst, worst_d);
}

// 8. expansion coefficients against Arakelov divisor degrees termwise
void c8_expansion_divisors(Criterion& c) {
  for (long q : {7L, 11L, 31L}) {
    pf::FieldContext ctx(q, 128);
    BigReal v(1L, 128);
    for (long t = 1; t <= 500; ++t) {
      if (pf::coeff_positive_symbolic(ctx, t) !=
          pf::arakelov_degree_symbolic(ctx, pf::arakelov_finite(ctx, t))) {
        c.fail(fmt("finite side q=%ld t=%ld", q, t));
        return;
      }
      BigReal deg =
          pf::arakelov_degree_arch(ctx, pf::arakelov_archimedean(ctx, -t, v));
      BigReal want = pf::coeff_negative(ctx, t, v);
      if (ctx.rho(t) == 0) {
        if (!(deg.is_zero() && want.is_zero())) {
          c.fail(fmt("empty archimedean side q=%ld t=-%ld", q, t));
          return;
        }
      } else if ((abs(deg - want) / want).to_double() > 1e-30) {
        c.fail(fmt("archimedean side q=%ld t=-%ld", q, t));
        return;
      }
    }
  }
  c.detail = "3 fields, |t| <= 500, finite side exact";
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    void (*run)(Criterion&);
  };
  const Entry entries[] = {
      {"ideal-count oracle", c1_ideal_counts},
      {"extraction vs product oracle", c2_extraction_vs_product},
      {"central vanishing + functional equation", c3_central_vanishing},
      {"Mellin transform identities", c4_mellin},
      {"degree route equality", c5_degree_routes},
      {"singular moduli identity", c6_singular_moduli},
      {"archimedean factor oracle", c7_archimedean},
      {"expansion/divisor identity", c8_expansion_divisors},
  };

  int failures = 0;
  int idx = 0;
  for (const Entry& e : entries) {
    ++idx;
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.fail(std::string("exception: ") + ex.what());
    }
    double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.budget_s > 0 && dt > c.budget_s) {
      c.fail(fmt("runtime %.1fs over budget %.0fs", dt, c.budget_s));
    }
    std::printf("criterion %d [%s] %s: %s (%.1fs)\n", idx,
                c.ok ? "PASS" : "FAIL", e.name, c.detail.c_str(), dt);
    std::fflush(stdout);
    failures += c.ok ? 0 : 1;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures;
}
