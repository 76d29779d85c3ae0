#include "core/bigreal.hpp"

#include <cstdlib>

namespace pf {

std::string BigReal::to_string(std::size_t digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() < 0 ? "-inf" : "inf";
  if (digits == 0) {
    digits = static_cast<std::size_t>(static_cast<double>(prec()) * 0.30103) + 2;
  }
  if (is_zero()) return sign() < 0 ? "-0" : "0";

  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  if (raw == nullptr) throw convergence_error("mpfr_get_str failed");
  std::string m(raw);
  mpfr_free_str(raw);

  bool neg = !m.empty() && m[0] == '-';
  std::string d = neg ? m.substr(1) : m;
  while (d.size() > 1 && d.back() == '0') d.pop_back();
  std::string out = neg ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  long ee = static_cast<long>(e) - 1;
  if (ee != 0) out += "e" + std::to_string(ee);
  return out;
}

}  // namespace pf
