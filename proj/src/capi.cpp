#include "phiform.h"

#include <complex>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "core/bigreal.hpp"
#include "core/cm.hpp"
#include "core/cycles.hpp"
#include "core/eisenstein.hpp"
#include "core/phi.hpp"
#include "core/quadfield.hpp"
#include "core/selftest.hpp"
#include "core/whittaker.hpp"

using nlohmann::json;

struct pf_field {
  pf::FieldContext ctx;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Maps library exceptions onto status codes; `fn` returns the status for the
// non-throwing path (reports may finish with PF_ERR_TOLERANCE themselves).
template <typename F>
pf_status guarded(F&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const pf::domain_error& e) {
    g_last_error = e.what();
    return PF_ERR_INVALID;
  } catch (const pf::tolerance_error& e) {
    g_last_error = e.what();
    return PF_ERR_TOLERANCE;
  } catch (const pf::convergence_error& e) {
    g_last_error = e.what();
    return PF_ERR_CONVERGENCE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PF_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PF_ERR_INTERNAL;
  }
}

const pf::FieldContext& ctx_of(const pf_field* f) {
  if (f == nullptr) throw pf::domain_error("null field handle");
  return f->ctx;
}

void need_out(const void* out) {
  if (out == nullptr) throw pf::domain_error("null output pointer");
}

pf::BigReal parse_real(const char* s, long prec, const char* what) {
  if (s == nullptr || *s == '\0') {
    throw pf::domain_error(std::string(what) + " is required");
  }
  return pf::BigReal::from_string(s, prec);
}

pf::BigReal parse_height(const char* s, long prec) {
  pf::BigReal v = parse_real(s, prec, "height v");
  if (!(v > 0L)) throw pf::domain_error("height v must be positive");
  return v;
}

json combo_json(const pf::PrimeLogCombo& combo) {
  json arr = json::array();
  for (const auto& [p, c] : combo) arr.push_back({{"coeff", c}, {"prime", p}});
  return arr;
}

// contributing-prime tag of a positive-index coefficient
const char* combo_case(long q, const pf::PrimeLogCombo& combo) {
  if (combo.empty()) return "zero";
  bool ram = combo.count(q) != 0;
  bool inert = combo.size() > static_cast<std::size_t>(ram);
  return ram ? (inert ? "mixed" : "ramified") : "inert";
}

json primes_json(const pf::PrimeLogCombo& combo) {
  json arr = json::array();
  for (const auto& [p, c] : combo) arr.push_back(p);
  return arr;
}

json base_payload(const char* command, const pf::FieldContext& ctx) {
  return json{{"command", command}, {"q", ctx.q()}, {"bits", ctx.prec()}};
}

pf_status emit(const json& payload, char** out) {
  *out = dup_string(payload.dump(2) + "\n");
  return PF_OK;
}

}  // namespace

extern "C" {

const char* pf_status_name(pf_status st) {
  switch (st) {
    case PF_OK:
      return "ok";
    case PF_ERR_INVALID:
      return "invalid";
    case PF_ERR_TOLERANCE:
      return "tolerance";
    case PF_ERR_CONVERGENCE:
      return "convergence";
    case PF_ERR_NOMEM:
      return "nomem";
    case PF_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* pf_version(void) { return "1.0.0"; }

const char* pf_last_error(void) { return g_last_error.c_str(); }

void pf_string_free(char* s) { std::free(s); }

pf_status pf_field_new(long q, long prec_bits, pf_field** out) {
  return guarded([&] {
    need_out(out);
    *out = new pf_field{pf::FieldContext(q, prec_bits)};
    return PF_OK;
  });
}

void pf_field_free(pf_field* f) { delete f; }

long pf_field_q(const pf_field* f) { return f == nullptr ? 0 : f->ctx.q(); }

long pf_field_prec(const pf_field* f) {
  return f == nullptr ? 0 : f->ctx.prec();
}

long pf_field_class_number(const pf_field* f) {
  return f == nullptr ? 0 : f->ctx.class_number();
}

pf_status pf_rho(const pf_field* f, long n, long* out) {
  return guarded([&] {
    need_out(out);
    *out = ctx_of(f).rho(n);
    return PF_OK;
  });
}

pf_status pf_coeff_positive_str(const pf_field* f, long n, char** out) {
  return guarded([&] {
    need_out(out);
    *out = dup_string(pf::coeff_positive(ctx_of(f), n).to_string());
    return PF_OK;
  });
}

pf_status pf_coeffs_json(const pf_field* f, long tmax, const char* v,
                         char** out) {
  return guarded([&] {
    need_out(out);
    const pf::FieldContext& ctx = ctx_of(f);
    if (tmax < 1) throw pf::domain_error("tmax must be at least 1");

    json payload = base_payload("coeffs", ctx);
    payload["tmax"] = tmax;

    json constant = {{"t", 0},
                     {"case", "constant"},
                     {"v_dependent", true},
                     {"class_number", ctx.class_number()}};
    json rows = json::array();
    for (long t = 1; t <= tmax; ++t) {
      pf::PrimeLogCombo combo = pf::coeff_positive_symbolic(ctx, t);
      rows.push_back({{"t", t},
                      {"case", combo_case(ctx.q(), combo)},
                      {"primes", primes_json(combo)},
                      {"symbolic", combo_json(combo)},
                      {"value", pf::coeff_positive(ctx, t).to_string()}});
    }

    if (v != nullptr) {
      pf::BigReal vb = parse_height(v, ctx.prec());
      std::string vs(v);
      payload["v"] = vs;
      constant["value"] = pf::coeff_constant(ctx, vb).to_string();
      for (long t = 1; t <= tmax; ++t) {
        rows.push_back(
            {{"t", -t},
             {"case", "archimedean"},
             {"v", vs},
             {"value", pf::coeff_negative(ctx, t, vb).to_string()}});
      }
    }

    payload["constant"] = constant;
    payload["rows"] = rows;
    return emit(payload, out);
  });
}

pf_status pf_eval_json(const pf_field* f, const char* u, const char* v,
                       long nmax, char** out) {
  return guarded([&] {
    need_out(out);
    const pf::FieldContext& ctx = ctx_of(f);
    if (nmax < 1) throw pf::domain_error("nmax must be at least 1");
    pf::HalfPlanePoint tau(parse_real(u, ctx.prec(), "coordinate u"),
                           parse_height(v, ctx.prec()));
    pf::PhiValue val = pf::eval_phi(ctx, tau, nmax);

    json payload = base_payload("eval", ctx);
    payload["nmax"] = nmax;
    payload["tau"] = {{"u", std::string(u)}, {"v", std::string(v)}};
    payload["value"] = {{"re", val.value.real().to_string()},
                        {"im", val.value.imag().to_string()}};
    payload["tail_bound"] = val.tail_bound.to_string();
    return emit(payload, out);
  });
}

pf_status pf_oracle_json(const pf_field* f, const char* s, const char* v,
                         long tmax, double tolerance, int threads,
                         char** out) {
  return guarded([&] {
    need_out(out);
    const pf::FieldContext& ctx = ctx_of(f);
    if (tmax < 1) throw pf::domain_error("tmax must be at least 1");
    if (!(tolerance > 0)) throw pf::domain_error("tolerance must be positive");
    pf::BigReal sb = parse_real(s, ctx.prec(), "spectral parameter s");
    pf::BigReal vb = parse_height(v, ctx.prec());
    if (!(sb > 1L)) {
      throw pf::domain_error(
          "direct extraction needs s > 1 (convergence region)");
    }

    const double sd = sb.to_double();
    const double vd = vb.to_double();
    long cutoff = pf::direct_sum_cutoff(ctx.q(), vd, sd, tolerance);
    pf::CoefficientTable table =
        pf::fourier_extract(ctx, vd, sd, -tmax, tmax, cutoff, 0, threads);
    pf::BigReal scal = pf::extract_scalar(ctx, vb, sb);
    pf::HalfPlanePoint tau(pf::BigReal(0L, ctx.prec()), vb);

    json rows = json::array();
    double max_gap = 0;
    for (long t = -tmax; t <= tmax; ++t) {
      if (t == 0) continue;
      pf::BigComplex closed =
          pf::coefficient_product(ctx, tau, t, sb) * pf::BigComplex(scal);
      std::complex<double> want(closed.real().to_double(),
                                closed.imag().to_double());
      std::complex<double> got = table.coeff.at(t);
      double gap = std::abs(got - want);
      max_gap = std::max(max_gap, gap);
      rows.push_back({{"t", t},
                      {"extracted", {{"re", got.real()}, {"im", got.imag()}}},
                      {"product", {{"re", want.real()}, {"im", want.imag()}}},
                      {"gap", gap},
                      {"ok", gap < tolerance}});
    }

    json payload = base_payload("oracle", ctx);
    payload["s"] = std::string(s);
    payload["v"] = std::string(v);
    payload["tmax"] = tmax;
    payload["tolerance"] = tolerance;
    payload["threads"] = threads;
    payload["cutoff"] = table.cutoff;
    payload["panels"] = table.panels;
    payload["tail_bound"] = table.tail_bound;
    payload["rows"] = rows;
    payload["max_gap"] = max_gap;
    payload["all_ok"] = max_gap < tolerance;
    pf_status st = emit(payload, out);
    if (max_gap >= tolerance) {
      g_last_error = "oracle gap exceeds tolerance";
      return PF_ERR_TOLERANCE;
    }
    return st;
  });
}

pf_status pf_mellin_json(const pf_field* f, const char* s, long nmax,
                         double tolerance, char** out) {
  return guarded([&] {
    need_out(out);
    const pf::FieldContext& ctx = ctx_of(f);
    if (nmax < 1) throw pf::domain_error("nmax must be at least 1");
    pf::BigReal sb = parse_real(s, ctx.prec(), "spectral parameter s");
    pf::BigReal closed = pf::mellin_closed(ctx, sb);
    pf::BigReal quad = pf::mellin_quadrature(ctx, sb, nmax);
    double rel = (abs(quad - closed) / abs(closed)).to_double();

    json payload = base_payload("mellin", ctx);
    payload["s"] = std::string(s);
    payload["nmax"] = nmax;
    payload["closed"] = closed.to_string();
    payload["quadrature"] = quad.to_string();
    payload["rel_gap"] = rel;
    if (tolerance > 0) {
      payload["tolerance"] = tolerance;
      payload["ok"] = rel < tolerance;
    }
    pf_status st = emit(payload, out);
    if (tolerance > 0 && rel >= tolerance) {
      g_last_error = "Mellin transform gap exceeds tolerance";
      return PF_ERR_TOLERANCE;
    }
    return st;
  });
}

pf_status pf_degz_json(const pf_field* f, long tmax, char** out) {
  return guarded([&] {
    need_out(out);
    const pf::FieldContext& ctx = ctx_of(f);
    if (tmax < 1) throw pf::domain_error("tmax must be at least 1");

    json rows = json::array();
    bool all_equal = true;
    for (long t = 1; t <= tmax; ++t) {
      pf::PrimeLogCombo lattice = pf::deg_z_lattice_symbolic(ctx, t);
      pf::PrimeLogCombo closed = pf::deg_z_closed_symbolic(ctx, t);
      pf::PrimeLogCombo coeff = pf::coeff_positive_symbolic(ctx, t);
      bool equal = lattice == closed && closed == coeff;
      all_equal = all_equal && equal;
      rows.push_back(
          {{"t", t},
           {"lattice", combo_json(lattice)},
           {"closed", combo_json(closed)},
           {"coefficient", combo_json(coeff)},
           {"equal", equal},
           {"value", pf::eval_prime_log_combo(closed, ctx.prec()).to_string()}});
    }

    json payload = base_payload("degz", ctx);
    payload["tmax"] = tmax;
    payload["rows"] = rows;
    payload["all_equal"] = all_equal;
    pf_status st = emit(payload, out);
    if (!all_equal) {
      g_last_error = "degree routes disagree";
      return PF_ERR_TOLERANCE;
    }
    return st;
  });
}

pf_status pf_arakelov_json(const pf_field* f, long t, const char* v,
                           char** out) {
  return guarded([&] {
    need_out(out);
    const pf::FieldContext& ctx = ctx_of(f);
    if (t == 0) throw pf::domain_error("index t must be nonzero");

    json payload = base_payload("arakelov", ctx);
    payload["t"] = t;
    if (t > 0) {
      pf::ArakelovDivisor div = pf::arakelov_finite(ctx, t);
      json rows = json::array();
      for (const auto& [key, mult] : div.finite) {
        rows.push_back(
            {{"p", key.first}, {"class", key.second}, {"mult", mult}});
      }
      pf::PrimeLogCombo deg = pf::arakelov_degree_symbolic(ctx, div);
      payload["finite"] = rows;
      payload["degree"] = {
          {"symbolic", combo_json(deg)},
          {"value", pf::eval_prime_log_combo(deg, ctx.prec()).to_string()}};
    } else {
      pf::BigReal vb = parse_height(v, ctx.prec());
      payload["v"] = std::string(v);
      pf::ArakelovDivisor div = pf::arakelov_archimedean(ctx, t, vb);
      json rows = json::array();
      for (const auto& [cls, weight] : div.archimedean) {
        rows.push_back({{"class", cls}, {"weight", weight.to_string()}});
      }
      payload["archimedean"] = rows;
      payload["degree"] = {
          {"value", pf::arakelov_degree_arch(ctx, div).to_string()}};
    }
    return emit(payload, out);
  });
}

pf_status pf_gz_json(const pf_field* f, long d, long prec_bits,
                     double tolerance, char** out) {
  return guarded([&] {
    need_out(out);
    const pf::FieldContext& ctx = ctx_of(f);
    long prec = prec_bits == 0 ? ctx.prec() : prec_bits;
    pf::GrossZagierReport rep = pf::gross_zagier_check(ctx, d, prec);
    double gap = rep.gap.to_double();

    json payload = base_payload("gz", ctx);
    payload["bits"] = prec;
    payload["d"] = d;
    payload["j_product"] = {
        {"value", rep.product.value.to_string()},
        {"nearest_integer", rep.product.nearest_integer},
        {"integrality_gap", rep.product.integrality_gap.to_double()}};
    payload["lhs"] = rep.lhs.to_string();
    payload["rhs"] = rep.rhs.to_string();
    payload["gap"] = gap;
    payload["convention"] = "genus-product";
    payload["coefficient_sums"] = {{"nonnegative", rep.rhs_coeff_nonneg.to_string()},
                                   {"all", rep.rhs_coeff_all.to_string()}};
    if (tolerance > 0) {
      payload["tolerance"] = tolerance;
      payload["ok"] = gap < tolerance;
    }
    pf_status st = emit(payload, out);
    if (tolerance > 0 && gap >= tolerance) {
      g_last_error = "identity gap exceeds tolerance";
      return PF_ERR_TOLERANCE;
    }
    return st;
  });
}

pf_status pf_selftest_json(int quick, char** out) {
  return guarded([&] {
    need_out(out);
    std::vector<pf::SelfCheck> checks = pf::run_selftest(quick != 0);

    json rows = json::array();
    long failures = 0;
    for (const pf::SelfCheck& c : checks) {
      json row = {{"name", c.name}, {"ok", c.ok}};
      if (!c.detail.empty()) row["detail"] = c.detail;
      rows.push_back(row);
      failures += c.ok ? 0 : 1;
    }

    json payload = {{"command", "selftest"},
                    {"quick", quick != 0},
                    {"checks", rows},
                    {"failures", failures}};
    pf_status st = emit(payload, out);
    if (failures > 0) {
      g_last_error = "selftest reported failures";
      return PF_ERR_TOLERANCE;
    }
    return st;
  });
}

}  // extern "C"
