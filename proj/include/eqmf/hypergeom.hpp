#pragma once

// Generalized hypergeometric series pFq with exact rational parameters,
// plus the specific series entering the t = 1/j parametrization.

#include "eqmf/numeric.hpp"
#include "eqmf/qform.hpp"
#include "eqmf/series.hpp"

#include <cstddef>
#include <vector>

namespace eqmf {

struct BadLowerParameter : NumericError {
  BadLowerParameter()
      : NumericError("lower parameter hits a nonpositive integer") {}
};

struct HypergeometricSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational scale = 1;  // argument is scale * t
};

// Term ratio recurrence: c_0 = 1,
// c_{n+1} = c_n * scale * prod(a_i + n) / (prod(b_j + n) * (n + 1)).
inline Series pfq(const HypergeometricSpec& spec, std::size_t n) {
  Series f = zero_series(n);
  if (n == 0) return f;
  Rational c(1);
  f[0] = c;
  for (std::size_t m = 0; m + 1 < n; ++m) {
    Rational num = spec.scale;
    for (const auto& a : spec.upper) num *= a + Rational(long(m));
    Rational den(long(m) + 1);
    for (const auto& b : spec.lower) {
      Rational bb = b + Rational(long(m));
      if (bb == 0) {
        if (num == 0) { c = 0; f[m + 1] = 0; goto next; }
        throw BadLowerParameter();
      }
      den *= bb;
    }
    c *= num / den;
    f[m + 1] = c;
  next:;
  }
  return f;
}

inline Series hyp2f1(const Rational& a, const Rational& b, const Rational& c,
                     const Rational& scale, std::size_t n) {
  return pfq({{a, b}, {c}, scale}, n);
}

// F1 = 2F1(1/12, 5/12; 1; 1728 t), the fundamental period.
inline Series f1_series(std::size_t n) {
  return hyp2f1(frac(1, 12), frac(5, 12), 1, 1728, n);
}

// F2 = 2F1(-1/12, 7/12; 1; 1728 t), the companion quasi-period.
inline Series f2_series(std::size_t n) {
  return hyp2f1(frac(-1, 12), frac(7, 12), 1, 1728, n);
}

// u_r = (6r)! / ((3r)! r!^3) = C(2r,r) C(3r,r) C(6r,3r).
inline Int u_coeff(long r) {
  return binomial(Int(2 * r), r) * binomial(Int(3 * r), r) *
         binomial(Int(6 * r), 3 * r);
}

// U = F1^2 = sum u_r t^r.
inline Series u_series(std::size_t n) {
  Series s = zero_series(n);
  for (std::size_t r = 0; r < n; ++r) s[r] = Rational(u_coeff(long(r)));
  return s;
}

// V = (1 + 6 t d/dt) U = sum (6r+1) u_r t^r.
inline Series v_series(std::size_t n) {
  Series s = zero_series(n);
  for (std::size_t r = 0; r < n; ++r)
    s[r] = Rational((6 * Int(long(r)) + 1) * u_coeff(long(r)));
  return s;
}

// P_n = F1 * 2F1((6n+1)/12, (6n+5)/12; n+1; 1728 t).
inline Series p_series(long n, std::size_t trunc) {
  return mul(f1_series(trunc),
             hyp2f1(frac(6 * n + 1, 12), frac(6 * n + 5, 12),
                    Rational(n + 1), 1728, trunc));
}

// Q_n = F1 * 2F1((6n-1)/12, (6n+7)/12; n+1; 1728 t).
inline Series q_series(long n, std::size_t trunc) {
  return mul(f1_series(trunc),
             hyp2f1(frac(6 * n - 1, 12), frac(6 * n + 7, 12),
                    Rational(n + 1), 1728, trunc));
}

// R_n = 3F2((4n+1)/6, (4n+3)/6, (4n+5)/6; n+1, n+1; 1728 t).
inline Series r_series(long n, std::size_t trunc) {
  return pfq({{frac(4 * n + 1, 6), frac(4 * n + 3, 6),
               frac(4 * n + 5, 6)},
              {Rational(n + 1), Rational(n + 1)},
              1728},
             trunc);
}

// (1 - 1728 t)^{1/2} as a rational series.
inline Series sqrt_1m1728t(std::size_t n) {
  Series f = zero_series(n);
  if (n > 0) f[0] = 1;
  if (n > 1) f[1] = -1728;
  return sqrt_one(f);
}

// Dwork-style truncation: keep coefficients below the cutoff, zero beyond.
inline Series truncate_below(const Series& f, std::size_t cutoff) {
  Series r = f;
  for (std::size_t i = cutoff; i < r.trunc(); ++i) r[i] = 0;
  return r;
}

// The two series whose p-adic ratio behaviour drives the congruences:
// variant B: 3F2(1/6, 1/2, 5/6; 1, 1; 1728 x)  (odd p)
// variant A: 2F1(1/6, 5/6; 1; 432 z), integral coefficients C(3m,m) C(6m,3m).
enum class DworkVariant { A, B };

inline Series dwork_series(DworkVariant v, std::size_t n) {
  if (v == DworkVariant::B)
    return pfq({{frac(1, 6), frac(1, 2), frac(5, 6)},
                {1, 1},
                1728},
               n);
  Series s = zero_series(n);
  for (std::size_t m = 0; m < n; ++m)
    s[m] = Rational(binomial(Int(3 * long(m)), long(m)) *
                    binomial(Int(6 * long(m)), 3 * long(m)));
  return s;
}

// The sub-series F_s with terms of index < p^s.
inline Series dwork_truncation(DworkVariant v, std::int64_t p, int s,
                               std::size_t n) {
  std::int64_t cut = 1;
  for (int i = 0; i < s; ++i) {
    cut *= p;
    if (cut > std::int64_t(n)) { cut = std::int64_t(n); break; }
  }
  return truncate_below(dwork_series(v, n), std::size_t(cut));
}

// z/432 as a series in t = 1/j: sum_{m>=1} 432^{m-1} Catalan(m-1) t^m.
inline Series z432_of_t(std::size_t n) {
  Series s = zero_series(n);
  Int pw = 1;
  for (std::size_t m = 1; m < n; ++m) {
    Int cat = binomial(Int(2 * (long(m) - 1)), long(m) - 1) / Int(long(m));
    s[m] = Rational(pw * cat);
    pw *= 432;
  }
  return s;
}

// The same z/432 as a q-expansion: (1/864)(1 - E4^{-3/2} E6).
inline Series z432_of_q(std::size_t n) {
  Series e4inv3 = power(invert(eisenstein(4, n)), 3);
  Series s = mul(sqrt_one(e4inv3), eisenstein(6, n));
  return scale(sub(one_series(n), s), frac(1, 864));
}

}  // namespace eqmf
