// Command-line front end over the shared-library C interface.  Every
// subcommand asks the library for a JSON report and renders it as json, csv,
// or text; identical invocations produce byte-identical output.
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "phiform.h"

using nlohmann::json;

namespace {

int status_to_exit(pf_status st) {
  switch (st) {
    case PF_OK:
      return 0;
    case PF_ERR_TOLERANCE:
      return 2;
    case PF_ERR_CONVERGENCE:
      return 3;
    default:
      return 1;
  }
}

struct FieldGuard {
  pf_field* f = nullptr;
  ~FieldGuard() { pf_field_free(f); }
};

// deterministic textual form of a JSON scalar (numbers via shortest
// round-trip representation, strings verbatim)
std::string scalar(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// [{coeff, prime}...] -> "2 log 7 + 4 log 3", or "0" for the empty sum
std::string combo_text(const json& arr) {
  if (arr.empty()) return "0";
  std::string out;
  for (const auto& term : arr) {
    if (!out.empty()) out += " + ";
    out += term["coeff"].dump() + " log " + term["prime"].dump();
  }
  return out;
}

// same sum in a comma-free spreadsheet-friendly form: "2*log(7)+4*log(3)"
std::string combo_csv(const json& arr) {
  if (arr.empty()) return "0";
  std::string out;
  for (const auto& term : arr) {
    if (!out.empty()) out += "+";
    out += term["coeff"].dump() + "*log(" + term["prime"].dump() + ")";
  }
  return out;
}

void render_text(const json& j) {
  const std::string cmd = j["command"];
  if (cmd == "coeffs") {
    std::printf("coefficients for q = %s at %s bits\n", scalar(j["q"]).c_str(),
                scalar(j["bits"]).c_str());
    const json& c = j["constant"];
    if (c.contains("value")) {
      std::printf("t=0 (constant, v = %s): %s\n", scalar(j["v"]).c_str(),
                  scalar(c["value"]).c_str());
    } else {
      std::printf("t=0 (constant): depends on the height v\n");
    }
    for (const auto& row : j["rows"]) {
      if (row["case"] == "archimedean") {
        std::printf("t=%s [archimedean] %s\n", scalar(row["t"]).c_str(),
                    scalar(row["value"]).c_str());
      } else {
        std::printf("t=%s [%s] %s = %s\n", scalar(row["t"]).c_str(),
                    scalar(row["case"]).c_str(),
                    combo_text(row["symbolic"]).c_str(),
                    scalar(row["value"]).c_str());
      }
    }
  } else if (cmd == "eval") {
    std::printf("phi(%s + %s i) with nmax = %s terms per sign\n",
                scalar(j["tau"]["u"]).c_str(), scalar(j["tau"]["v"]).c_str(),
                scalar(j["nmax"]).c_str());
    std::printf("value: %s + %s i\n", scalar(j["value"]["re"]).c_str(),
                scalar(j["value"]["im"]).c_str());
    std::printf("tail bound: %s\n", scalar(j["tail_bound"]).c_str());
  } else if (cmd == "oracle") {
    std::printf(
        "direct extraction vs local product, q = %s, s = %s, v = %s, cutoff "
        "%s\n",
        scalar(j["q"]).c_str(), scalar(j["s"]).c_str(),
        scalar(j["v"]).c_str(), scalar(j["cutoff"]).c_str());
    for (const auto& row : j["rows"]) {
      std::printf("t=%s extracted=(%s, %s) product=(%s, %s) gap=%s %s\n",
                  scalar(row["t"]).c_str(),
                  scalar(row["extracted"]["re"]).c_str(),
                  scalar(row["extracted"]["im"]).c_str(),
                  scalar(row["product"]["re"]).c_str(),
                  scalar(row["product"]["im"]).c_str(),
                  scalar(row["gap"]).c_str(),
                  row["ok"].get<bool>() ? "ok" : "FAIL");
    }
    std::printf("max gap %s (tolerance %s): %s\n",
                scalar(j["max_gap"]).c_str(), scalar(j["tolerance"]).c_str(),
                j["all_ok"].get<bool>() ? "all ok" : "FAIL");
  } else if (cmd == "mellin") {
    std::printf("completed Mellin transform at s = %s (nmax = %s)\n",
                scalar(j["s"]).c_str(), scalar(j["nmax"]).c_str());
    std::printf("closed form: %s\n", scalar(j["closed"]).c_str());
    std::printf("quadrature:  %s\n", scalar(j["quadrature"]).c_str());
    std::printf("relative gap: %s\n", scalar(j["rel_gap"]).c_str());
  } else if (cmd == "degz") {
    std::printf("cycle degrees for q = %s, t = 1..%s\n",
                scalar(j["q"]).c_str(), scalar(j["tmax"]).c_str());
    for (const auto& row : j["rows"]) {
      std::printf("t=%s deg = %s = %s [%s]\n", scalar(row["t"]).c_str(),
                  combo_text(row["closed"]).c_str(),
                  scalar(row["value"]).c_str(),
                  row["equal"].get<bool>() ? "routes agree" : "MISMATCH");
    }
    std::printf("%s\n", j["all_equal"].get<bool>()
                            ? "all routes agree"
                            : "ROUTE MISMATCH");
  } else if (cmd == "arakelov") {
    if (j.contains("finite")) {
      std::printf("finite divisor at t = %s, q = %s\n",
                  scalar(j["t"]).c_str(), scalar(j["q"]).c_str());
      for (const auto& row : j["finite"]) {
        std::printf("p=%s class=%s mult=%s\n", scalar(row["p"]).c_str(),
                    scalar(row["class"]).c_str(),
                    scalar(row["mult"]).c_str());
      }
      std::printf("degree = %s = %s\n",
                  combo_text(j["degree"]["symbolic"]).c_str(),
                  scalar(j["degree"]["value"]).c_str());
    } else {
      std::printf("archimedean divisor at t = %s, v = %s, q = %s\n",
                  scalar(j["t"]).c_str(), scalar(j["v"]).c_str(),
                  scalar(j["q"]).c_str());
      for (const auto& row : j["archimedean"]) {
        std::printf("class=%s weight=%s\n", scalar(row["class"]).c_str(),
                    scalar(row["weight"]).c_str());
      }
      std::printf("degree = %s\n", scalar(j["degree"]["value"]).c_str());
    }
  } else if (cmd == "gz") {
    std::printf("singular moduli identity, q = %s, d = %s, %s bits\n",
                scalar(j["q"]).c_str(), scalar(j["d"]).c_str(),
                scalar(j["bits"]).c_str());
    std::printf("J = %s (nearest integer %s, gap %s)\n",
                scalar(j["j_product"]["value"]).c_str(),
                scalar(j["j_product"]["nearest_integer"]).c_str(),
                scalar(j["j_product"]["integrality_gap"]).c_str());
    std::printf("lhs  2 log|J| = %s\n", scalar(j["lhs"]).c_str());
    std::printf("rhs (genus)   = %s\n", scalar(j["rhs"]).c_str());
    std::printf("gap = %s\n", scalar(j["gap"]).c_str());
    std::printf("coefficient sums: n >= 0: %s, all n: %s\n",
                scalar(j["coefficient_sums"]["nonnegative"]).c_str(),
                scalar(j["coefficient_sums"]["all"]).c_str());
  } else if (cmd == "selftest") {
    for (const auto& row : j["checks"]) {
      std::printf("[%s] %s%s%s\n", row["ok"].get<bool>() ? "ok" : "FAIL",
                  row["name"].get<std::string>().c_str(),
                  row.contains("detail") ? " - " : "",
                  row.contains("detail")
                      ? row["detail"].get<std::string>().c_str()
                      : "");
    }
    std::printf("%s failures\n", scalar(j["failures"]).c_str());
  }
}

void csv_line(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line += ",";
    line += c;
  }
  std::printf("%s\n", line.c_str());
}

void render_csv(const json& j) {
  const std::string cmd = j["command"];
  if (cmd == "coeffs") {
    csv_line({"t", "case", "value", "symbolic"});
    const json& c = j["constant"];
    csv_line({"0", "constant",
              c.contains("value") ? scalar(c["value"]) : "", ""});
    for (const auto& row : j["rows"]) {
      csv_line({scalar(row["t"]), scalar(row["case"]), scalar(row["value"]),
                row.contains("symbolic") ? combo_csv(row["symbolic"]) : ""});
    }
  } else if (cmd == "eval") {
    csv_line({"u", "v", "nmax", "re", "im", "tail_bound"});
    csv_line({scalar(j["tau"]["u"]), scalar(j["tau"]["v"]),
              scalar(j["nmax"]), scalar(j["value"]["re"]),
              scalar(j["value"]["im"]), scalar(j["tail_bound"])});
  } else if (cmd == "oracle") {
    csv_line({"t", "extracted_re", "extracted_im", "product_re", "product_im",
              "gap", "ok"});
    for (const auto& row : j["rows"]) {
      csv_line({scalar(row["t"]), scalar(row["extracted"]["re"]),
                scalar(row["extracted"]["im"]),
                scalar(row["product"]["re"]), scalar(row["product"]["im"]),
                scalar(row["gap"]), scalar(row["ok"])});
    }
  } else if (cmd == "mellin") {
    csv_line({"s", "nmax", "closed", "quadrature", "rel_gap"});
    csv_line({scalar(j["s"]), scalar(j["nmax"]), scalar(j["closed"]),
              scalar(j["quadrature"]), scalar(j["rel_gap"])});
  } else if (cmd == "degz") {
    csv_line({"t", "value", "symbolic", "equal"});
    for (const auto& row : j["rows"]) {
      csv_line({scalar(row["t"]), scalar(row["value"]),
                combo_csv(row["closed"]), scalar(row["equal"])});
    }
  } else if (cmd == "arakelov") {
    if (j.contains("finite")) {
      csv_line({"p", "class", "mult"});
      for (const auto& row : j["finite"]) {
        csv_line({scalar(row["p"]), scalar(row["class"]),
                  scalar(row["mult"])});
      }
    } else {
      csv_line({"class", "weight"});
      for (const auto& row : j["archimedean"]) {
        csv_line({scalar(row["class"]), scalar(row["weight"])});
      }
    }
  } else if (cmd == "gz") {
    csv_line({"q", "d", "j_value", "nearest_integer", "integrality_gap",
              "lhs", "rhs", "gap"});
    csv_line({scalar(j["q"]), scalar(j["d"]),
              scalar(j["j_product"]["value"]),
              scalar(j["j_product"]["nearest_integer"]),
              scalar(j["j_product"]["integrality_gap"]), scalar(j["lhs"]),
              scalar(j["rhs"]), scalar(j["gap"])});
  } else if (cmd == "selftest") {
    csv_line({"name", "ok", "detail"});
    for (const auto& row : j["checks"]) {
      std::string detail =
          row.contains("detail") ? row["detail"].get<std::string>() : "";
      for (char& ch : detail) {
        if (ch == ',') ch = ';';
      }
      csv_line({row["name"].get<std::string>(), scalar(row["ok"]), detail});
    }
  }
}

// prints the report (if any) in the requested format and maps the library
// status onto the exit code
int finish(pf_status st, char* payload, const std::string& format) {
  if (payload == nullptr) {
    std::fprintf(stderr, "error (%s): %s\n", pf_status_name(st),
                 pf_last_error());
    return status_to_exit(st);
  }
  if (format == "json") {
    std::fputs(payload, stdout);
  } else {
    json j = json::parse(payload);
    if (format == "csv") {
      render_csv(j);
    } else {
      render_text(j);
    }
  }
  pf_string_free(payload);
  if (st != PF_OK) {
    std::fprintf(stderr, "error (%s): %s\n", pf_status_name(st),
                 pf_last_error());
  }
  return status_to_exit(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phiform: arithmetic of a weight-one form attached to an "
               "imaginary quadratic field"};
  app.require_subcommand(1);

  long q = 7;
  long bits = 128;
  long nmax = 200;
  long t_index = 0;
  long d = 0;
  std::string tau_u = "0";
  std::string tau_v;
  std::string format = "text";
  int threads = 0;
  bool quick = false;
  // defaults that differ between subcommands get their own bindings
  long tmax_coeffs = 20, tmax_oracle = 6, tmax_degz = 100;
  std::string s_oracle = "3", s_mellin;
  std::string v_oracle = "1";
  double tol_oracle = 1e-6, tol_mellin = 0, tol_gz = 0;

  auto add_common = [&](CLI::App* sub, bool needs_q) {
    if (needs_q) {
      sub->add_option("--q", q, "field label: prime, q = 3 mod 4, q > 3")
          ->required();
      sub->add_option("--bits", bits, "working precision in bits")
          ->capture_default_str();
    }
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };

  CLI::App* c_coeffs =
      app.add_subcommand("coeffs", "Fourier coefficient table");
  add_common(c_coeffs, true);
  c_coeffs->add_option("--tmax", tmax_coeffs, "largest index")
      ->capture_default_str();
  c_coeffs->add_option("--tau-v,--v", tau_v,
                       "height v; adds the v-dependent rows");

  CLI::App* c_eval = app.add_subcommand("eval", "value of the form at a point");
  add_common(c_eval, true);
  c_eval->add_option("--tau-u,--u", tau_u, "real part of tau")
      ->capture_default_str();
  c_eval->add_option("--tau-v,--v", tau_v, "imaginary part of tau (v > 0)")
      ->required();
  c_eval->add_option("--nmax", nmax, "terms per coefficient sign")
      ->capture_default_str();

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "direct Fourier extraction vs the local factor product");
  add_common(c_oracle, true);
  c_oracle->add_option("--s", s_oracle, "spectral parameter, s > 1")
      ->capture_default_str();
  c_oracle->add_option("--tau-v,--v", v_oracle, "height v")
      ->capture_default_str();
  c_oracle->add_option("--tmax", tmax_oracle, "indices -tmax..tmax")
      ->capture_default_str();
  c_oracle->add_option("--tolerance", tol_oracle, "gap tolerance")
      ->capture_default_str();
  c_oracle->add_option("--threads", threads, "extraction threads (0 = auto)")
      ->capture_default_str();

  CLI::App* c_mellin =
      app.add_subcommand("mellin", "completed Mellin transform");
  add_common(c_mellin, true);
  c_mellin->add_option("--s", s_mellin, "evaluation point")->required();
  c_mellin->add_option("--nmax", nmax, "truncation of the expansion")
      ->capture_default_str();
  c_mellin->add_option("--tolerance", tol_mellin,
                       "enforce the relative gap (0 = report only)")
      ->capture_default_str();

  CLI::App* c_degz =
      app.add_subcommand("degz", "special cycle degrees by both routes");
  add_common(c_degz, true);
  c_degz->add_option("--tmax", tmax_degz, "largest index")
      ->capture_default_str();

  CLI::App* c_arakelov = app.add_subcommand(
      "arakelov", "Arakelov divisor at one index (finite for t > 0, "
                  "archimedean for t < 0)");
  add_common(c_arakelov, true);
  c_arakelov->add_option("--t", t_index, "divisor index, t != 0")->required();
  c_arakelov->add_option("--tau-v,--v", tau_v, "height v (needed for t < 0)");

  CLI::App* c_gz =
      app.add_subcommand("gz", "singular moduli identity check");
  add_common(c_gz, true);
  c_gz->add_option("--d", d, "auxiliary discriminant -d (fundamental, "
                   "coprime to q)")
      ->required();
  c_gz->add_option("--tolerance", tol_gz,
                   "enforce the identity gap (0 = report only)")
      ->capture_default_str();

  CLI::App* c_selftest =
      app.add_subcommand("selftest", "cross-module invariant suite");
  add_common(c_selftest, false);
  c_selftest->add_flag("--quick", quick, "smaller ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (app.got_subcommand(c_selftest)) {
    char* payload = nullptr;
    pf_status st = pf_selftest_json(quick ? 1 : 0, &payload);
    return finish(st, payload, format);
  }

  FieldGuard field;
  pf_status st = pf_field_new(q, bits, &field.f);
  if (st != PF_OK) {
    std::fprintf(stderr, "error (%s): %s\n", pf_status_name(st),
                 pf_last_error());
    return status_to_exit(st);
  }

  char* payload = nullptr;
  if (app.got_subcommand(c_coeffs)) {
    st = pf_coeffs_json(field.f, tmax_coeffs,
                        tau_v.empty() ? nullptr : tau_v.c_str(), &payload);
  } else if (app.got_subcommand(c_eval)) {
    st = pf_eval_json(field.f, tau_u.c_str(), tau_v.c_str(), nmax, &payload);
  } else if (app.got_subcommand(c_oracle)) {
    st = pf_oracle_json(field.f, s_oracle.c_str(), v_oracle.c_str(),
                        tmax_oracle, tol_oracle, threads, &payload);
  } else if (app.got_subcommand(c_mellin)) {
    st = pf_mellin_json(field.f, s_mellin.c_str(), nmax, tol_mellin, &payload);
  } else if (app.got_subcommand(c_degz)) {
    st = pf_degz_json(field.f, tmax_degz, &payload);
  } else if (app.got_subcommand(c_arakelov)) {
    st = pf_arakelov_json(field.f, t_index,
                          tau_v.empty() ? nullptr : tau_v.c_str(), &payload);
  } else {
    st = pf_gz_json(field.f, d, 0, tol_gz, &payload);
  }
  return finish(st, payload, format);
}
