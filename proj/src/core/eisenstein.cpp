#include "core/eisenstein.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <vector>

#include "core/special.hpp"

namespace pf {

namespace {

// crude eigenvalue bound: |c tau + d|^2 >= kappa(tau) (c^2 + d^2)
BigReal lattice_floor(const BigReal& u, const BigReal& v) {
  BigReal trace = 1L + u * u + v * v;
  BigReal det = v * v;
  return ldexp2(trace - sqrt(trace * trace - ldexp2(det, 2)), -1);
}

}  // namespace

DirectSumValue eisenstein_direct(const FieldContext& ctx,
                                 const HalfPlanePoint& tau, const BigReal& s,
                                 long cutoff) {
  if (cutoff < 4) throw domain_error("eisenstein_direct: cutoff too small");
  if (!(s > 1L)) throw domain_error("eisenstein_direct: need s > 1");
  const long prec = ctx.prec();
  const long wp = prec + 24;
  const long q = ctx.q();
  BigReal u = tau.u.at_prec(wp), v = tau.v.at_prec(wp);
  BigReal sw = s.at_prec(wp);
  BigReal expo = -1L - ldexp2(sw, -1);  // exponent of |c tau + d|^2
  BigReal qinv = 1L / sqrt(BigReal(q, wp));

  // c = 0 pair (0, 1): weight chi(1) = 1, term 1
  BigReal re(1L, wp), im(wp);
  for (long c = 1; c <= cutoff; ++c) {
    const bool ramified = (c % q == 0);
    const int chi_c = ramified ? 0 : ctx.chi(c);
    BigReal y = BigReal(c, wp) * v;
    BigReal y2 = y * y;
    BigReal x0 = BigReal(c, wp) * u;
    for (long d = -cutoff; d <= cutoff; ++d) {
      if (std::gcd(c, std::labs(d)) != 1) continue;
      int chi_d = ramified ? ctx.chi(d) : 0;
      if (ramified && chi_d == 0) continue;
      BigReal x = x0 + d;
      BigReal pw = pow(x * x + y2, expo);
      BigReal fr = x * pw;   // Re of (c tau + d)^(-1) |.|^(-s)
      BigReal fi = -y * pw;  // Im
      if (ramified) {
        // weight chi(d), real
        if (chi_d > 0) {
          re += fr;
          im += fi;
        } else {
          re -= fr;
          im -= fi;
        }
      } else {
        // weight -i chi(c) / sqrt(q): (fr + i fi)(-i chi qinv)
        //   = chi qinv fi - i chi qinv fr
        if (chi_c > 0) {
          re += qinv * fi;
          im -= qinv * fr;
        } else {
          re -= qinv * fi;
          im += qinv * fr;
        }
      }
    }
  }
  BigReal vpow = pow(v, ldexp2(sw, -1));
  BigComplex value = BigComplex(vpow * re, vpow * im).at_prec(prec);

  // absolute remainder bound: ring max(|c|,|d|) = k has 8k points, each with
  // |c tau + d|^2 >= kappa k^2
  BigReal kappa = lattice_floor(u, v);
  BigReal tail = ldexp2(pow(kappa, -ldexp2(sw + 1L, -1)), 3) *
                 (pow(BigReal(cutoff, wp), 1L - sw) / (sw - 1L) +
                  pow(BigReal(cutoff, wp), -sw)) *
                 vpow;
  return {value, tail.at_prec(prec)};
}

BigComplex fourier_extract_reference(const FieldContext& ctx, const BigReal& v,
                                     const BigReal& s, long t, long cutoff,
                                     long panels) {
  if (panels < 2 * std::labs(t) + 2) {
    throw domain_error("fourier_extract_reference: not enough panels");
  }
  const long prec = ctx.prec();
  const long wp = prec + 24;
  BigComplex acc(wp);
  for (long j = 0; j < panels; ++j) {
    BigReal uj = BigReal(j, wp) / BigReal(panels, wp);
    HalfPlanePoint tau(uj, v.at_prec(wp));
    BigComplex ev = eisenstein_direct(ctx, tau, s, cutoff).value;
    acc += ev * unit_exp(-BigReal(t, wp) * uj);
  }
  return (acc * BigComplex(BigReal(1L, wp) / BigReal(panels, wp))).at_prec(prec);
}

CoefficientTable fourier_extract(const FieldContext& ctx, double v, double s,
                                 long tmin, long tmax, long cutoff,
                                 long panels, int threads) {
  if (!(v > 0) || !(s > 1) || cutoff < 8 || tmin > tmax) {
    throw domain_error("fourier_extract: bad arguments");
  }
  const long q = ctx.q();
  const long ma = std::max(std::labs(tmin), std::labs(tmax));
  long P = panels;
  if (P <= 0) {
    // coefficients decay like e^(-2 pi v t) (positive t) or faster, so the
    // alias picked up at distance P is below 2^-34 once
    // 2 pi v (P - ma) >= 34 ln 2; powers of two keep the grid division exact
    P = 16;
    while (P < tmax - tmin + 1 ||
           2.0 * M_PI * v * static_cast<double>(P - ma) < 34.0 * M_LN2) {
      P *= 2;
    }
  }
  if (P < tmax - tmin + 1) {
    throw domain_error("fourier_extract: not enough panels");
  }
  int nthreads = threads > 0
                     ? threads
                     : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::vector<int> chi_table(q);
  for (long r = 0; r < q; ++r) chi_table[r] = ctx.chi(r);
  auto chi_of = [&](long n) {
    long r = n % q;
    if (r < 0) r += q;
    return chi_table[r];
  };

  // fixed-width c-blocks keep the summation order independent of the number
  // of threads
  const long B = 64;
  const long nblocks = (cutoff + B - 1) / B;
  std::vector<std::vector<std::complex<double>>> block_sums(
      nblocks, std::vector<std::complex<double>>(P, {0.0, 0.0}));
  std::atomic<long> next_block{0};
  const double e_exp = -1.0 - s / 2.0;
  const double qinv = 1.0 / std::sqrt(static_cast<double>(q));

  // (x^2+y^2)^(-1-s/2) via quarter-integer square-root chains when 4+2s is
  // an integer (roughly 3x cheaper than pow and still correctly rounded to
  // a few ulp)
  const long npow4 = std::lround(4.0 + 2.0 * s);
  const bool fast4 = std::abs(4.0 + 2.0 * s - static_cast<double>(npow4)) <
                         1e-12 &&
                     npow4 >= 5 && npow4 <= 48;
  auto pw_of = [e_exp, fast4, npow4](double r2) {
    if (fast4) {
      double p = std::sqrt(std::sqrt(r2));
      double acc = 1.0;
      for (long n = npow4; n; n >>= 1, p *= p) {
        if (n & 1) acc *= p;
      }
      return 1.0 / acc;
    }
    return std::pow(r2, e_exp);
  };

  std::vector<long> small_primes;
  for (long p = 2; p * p <= cutoff; ++p) {
    bool ok = true;
    for (long r : small_primes) {
      if (r * r > p) break;
      if (p % r == 0) { ok = false; break; }
    }
    if (ok) small_primes.push_back(p);
  }

  auto worker = [&]() {
    std::vector<long> dlist;
    dlist.reserve(2 * cutoff + 1);
    std::vector<unsigned char> keep(2 * cutoff + 1);
    for (;;) {
      long blk = next_block.fetch_add(1);
      if (blk >= nblocks) break;
      auto& sums = block_sums[blk];
      const long c_lo = blk * B + 1;
      const long c_hi = std::min((blk + 1) * B, cutoff);
      for (long c = c_lo; c <= c_hi; ++c) {
        const bool ramified = (c % q == 0);
        // admissible d: coprime to c (sieve on the prime factors of c), and
        // coprime to q on ramified rows where the character weight sits on d
        std::fill(keep.begin(), keep.end(), 1);
        long rest = c;
        auto strike = [&](long p) {
          // index i holds d = -cutoff + i, divisible by p iff i = cutoff mod p
          for (long i = cutoff % p; i < 2 * cutoff + 1; i += p) {
            keep[i] = 0;
          }
        };
        for (long p : small_primes) {
          if (p * p > rest) break;
          if (rest % p == 0) {
            strike(p);
            while (rest % p == 0) rest /= p;
          }
        }
        if (rest > 1) strike(rest);
        if (ramified) strike(q);
        dlist.clear();
        for (long d = -cutoff; d <= cutoff; ++d) {
          if (keep[d + cutoff]) dlist.push_back(d);
        }
        const double y = c * v;
        const double y2 = y * y;
        for (long j = 0; j < P; ++j) {
          const double x0 = static_cast<double>(c) * j / P;
          double sx = 0.0, sp = 0.0;
          if (ramified) {
            for (long d : dlist) {
              const double x = x0 + d;
              const double pw = chi_of(d) * pw_of(x * x + y2);
              sx += x * pw;
              sp += pw;
            }
            sums[j] += std::complex<double>(sx, -y * sp);
          } else {
            for (long d : dlist) {
              const double x = x0 + d;
              const double pw = pw_of(x * x + y2);
              sx += x * pw;
              sp += pw;
            }
            // weight -i chi(c) / sqrt(q) applied to (sx - i y sp)
            const double w = -chi_of(c) * qinv;
            sums[j] += std::complex<double>(w * y * sp, w * sx);
          }
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<std::complex<double>> ej(P, {1.0, 0.0});  // c = 0 term
  for (long b = 0; b < nblocks; ++b) {
    for (long j = 0; j < P; ++j) ej[j] += block_sums[b][j];
  }

  // exact unit roots from an integer index grid
  std::vector<std::complex<double>> roots(P);
  for (long k = 0; k < P; ++k) {
    roots[k] = std::polar(1.0, -2.0 * M_PI * k / P);
  }
  const double vpow = std::pow(v, s / 2.0);
  CoefficientTable out;
  out.cutoff = cutoff;
  out.panels = P;
  for (long t = tmin; t <= tmax; ++t) {
    std::complex<double> acc{0.0, 0.0};
    for (long j = 0; j < P; ++j) {
      long idx = ((t % P) * j) % P;
      if (idx < 0) idx += P;
      acc += ej[j] * roots[idx];
    }
    out.coeff[t] = vpow * acc / static_cast<double>(P);
  }

  out.tail_bound = direct_sum_tail_bound(q, v, s, cutoff);
  return out;
}

double direct_sum_tail_bound(long q, double v, double s, long cutoff) {
  // the even d-pair remainder carries a fixed phase and sums to
  // ~ v M^(1-s)/(s+1); odd parts and window slop are O(M^(-s)); the c-tail
  // gains character cancellation (Abel/Polya-Vinogradov), and rows with
  // q | c gain it in d.  Factor 2 of headroom on top.
  if (!(s > 1.0)) throw domain_error("tail bound needs s > 1");
  const double M = static_cast<double>(cutoff);
  double tail = v * std::pow(M, 1.0 - s) / (s + 1.0) + 3.0 * std::pow(M, -s) +
                1.6 * std::log(static_cast<double>(q)) * std::pow(v, -s) *
                    std::pow(M, -s) +
                16.0 * std::pow(q * v, -s - 1.0) * std::pow(M / q, -s) / s;
  return 2.0 * std::pow(v, s / 2.0) * tail;
}

long direct_sum_cutoff(long q, double v, double s, double tolerance) {
  if (!(tolerance > 0)) throw domain_error("tolerance must be positive");
  long hi = 64;
  while (direct_sum_tail_bound(q, v, s, hi) >= tolerance) {
    hi *= 2;
    if (hi > (1L << 40)) throw convergence_error("cutoff out of reach");
  }
  long lo = hi / 2;
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    (direct_sum_tail_bound(q, v, s, mid) < tolerance ? hi : lo) = mid;
  }
  return hi;
}

BigComplex coefficient_product(const FieldContext& ctx,
                               const HalfPlanePoint& tau, long t,
                               const BigReal& s) {
  if (t == 0) {
    throw domain_error("coefficient_product: t = 0 is the constant term");
  }
  const long prec = ctx.prec();
  const long wp = prec + 32;
  BigReal sw = s.at_prec(wp);
  BigReal qpow = pow(BigReal(ctx.q(), wp), ldexp2(sw + 1L, -1));
  BigComplex out = BigComplex(qpow) * arch_factor(tau, t, sw, wp);
  out *= q_factor(ctx, t, sw);
  for (const auto& [p, e] : factorize(std::labs(t))) {
    if (p == ctx.q()) continue;
    out *= BigComplex(finite_factor(ctx, p, t, sw));
  }
  return out.at_prec(prec);
}

BigReal extract_scalar(const FieldContext& ctx, const BigReal& v,
                       const BigReal& s) {
  const long prec = ctx.prec();
  const long wp = prec + 32;
  BigReal sw = s.at_prec(wp);
  BigReal vw = v.at_prec(wp);
  BigReal qpow = pow(BigReal(ctx.q(), wp), ldexp2(sw + 1L, -1));
  return (1L / (sqrt(vw) * qpow * ctx.lambda_chi(sw + 1L))).at_prec(prec);
}

CentralDerivCoefficient central_deriv_coefficient(const FieldContext& ctx,
                                                  const HalfPlanePoint& tau,
                                                  long t) {
  if (t == 0) {
    throw domain_error("central_deriv_coefficient: t = 0 is the constant term");
  }
  const long prec = ctx.prec();
  const long wp = prec + 32;

  char kind = 0;
  long prime = 0;
  int vanishing = 0;
  if (t < 0) {
    kind = 'a';
    ++vanishing;
  }
  if (chi_q_local(ctx, t) == 1) {
    if (vanishing == 0) {
      kind = 'q';
      prime = ctx.q();
    }
    ++vanishing;
  }
  for (const auto& [p, e] : factorize(std::labs(t))) {
    if (p == ctx.q() || !ctx.is_inert(p) || e % 2 == 0) continue;
    if (vanishing == 0) {
      kind = 'p';
      prime = p;
    }
    ++vanishing;
  }
  if (vanishing % 2 == 0) {
    throw convergence_error("central_deriv_coefficient: vanishing parity even");
  }
  if (vanishing > 1) {
    return {BigComplex(prec), 'm', 0};
  }

  BigReal u = tau.u.at_prec(wp), v = tau.v.at_prec(wp);
  BigReal two_pi = ldexp2(const_pi(wp), 1);
  BigComplex phase = unit_exp(BigReal(t, wp) * u);
  BigReal mag(wp);
  if (kind == 'a') {
    // e(t tau) beta1(4 pi |t| v) evaluated as e(tu) times the fused pair
    mag = beta1_half_exp(ldexp2(two_pi * BigReal(-t, wp) * v, 1)) *
          BigReal(ctx.rho(-t), wp);
  } else if (kind == 'q') {
    const long k = ord_p(t, ctx.q());
    mag = exp(-two_pi * BigReal(t, wp) * v) * ctx.log_q().at_prec(wp) *
          BigReal(k + 1, wp) * BigReal(ctx.rho(t), wp);
  } else {
    const long k = ord_p(t, prime);
    mag = exp(-two_pi * BigReal(t, wp) * v) * log(BigReal(prime, wp)) *
          BigReal(k + 1, wp) * BigReal(ctx.rho(t / prime), wp);
  }
  BigComplex value =
      BigComplex(ldexp2(-sqrt(v) * mag, 1)) * phase;  // -2 sqrt(v) e(tu) mag
  CentralDerivCoefficient out;
  out.value = value.at_prec(prec);
  out.vanishing_kind = kind;
  out.vanishing_prime = prime;
  return out;
}

BigReal constant_term(const FieldContext& ctx, const BigReal& v,
                      const BigReal& s) {
  if (!(v > 0L)) throw domain_error("constant_term: need v > 0");
  const long prec = ctx.prec();
  const long wp = prec + 32;
  BigReal sw = s.at_prec(wp);
  BigReal vw = v.at_prec(wp);
  BigReal qw(ctx.q(), wp);
  BigReal a = pow(qw * vw, ldexp2(sw + 1L, -1)) * ctx.lambda_chi(sw + 1L);
  BigReal b = pow(qw * vw, ldexp2(1L - sw, -1)) * ctx.lambda_chi(1L - sw);
  return (a - b).at_prec(prec);
}

BigReal constant_term_deriv0(const FieldContext& ctx, const BigReal& v) {
  if (!(v > 0L)) throw domain_error("constant_term_deriv0: need v > 0");
  const long prec = ctx.prec();
  const long wp = prec + 32;
  BigReal vw = v.at_prec(wp);
  BigReal h(ctx.class_number(), wp);
  BigReal val = sqrt(vw) * h *
                (ctx.log_q().at_prec(wp) + log(vw) +
                 ldexp2(ctx.lambda_logderiv_one().at_prec(wp), 1));
  return val.at_prec(prec);
}

}  // namespace pf
