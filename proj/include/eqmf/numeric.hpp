#pragma once

// Exact integer/rational layer: binomials, Bernoulli numbers, prime-power
// residues, smooth factorization. Everything is immutable and pure.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqmf {

using Int = mpz_class;
using Rational = mpq_class;

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonInvertibleDenominator : NumericError {
  NonInvertibleDenominator(const std::string& what) : NumericError(what) {}
};

struct NotSmooth : NumericError {
  Int cofactor;
  NotSmooth(const Int& c)
      : NumericError("cofactor " + c.get_str() + " exceeds smoothness bound"),
        cofactor(c) {}
};

struct NonUnitResidue : NumericError {
  using NumericError::NumericError;
};

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw NumericError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// mpq_class(num, den) does not canonicalize; this does.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// C(n, k); 0 outside the triangle.  n must be nonnegative.
inline Int binomial(const Int& n, long k) {
  if (n < 0) throw NumericError("binomial: negative n");
  if (k < 0 || Int(k) > n) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(long n) {
  if (n < 0) throw NumericError("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Bernoulli numbers by the defining recurrence, cached.
// B_0 = 1, and sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1.
inline Rational bernoulli(unsigned k) {
  static std::vector<Rational> cache{Rational(1)};
  while (cache.size() <= k) {
    unsigned m = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned i = 0; i < m; ++i)
      acc += Rational(binomial(Int(m + 1), i)) * cache[i];
    cache.push_back(-acc / Rational(m + 1));
  }
  return cache[k];
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimePowerModulus {
  std::int64_t p;
  int s;
  std::int64_t value;  // p^s

  PrimePowerModulus(std::int64_t p_, int s_) : p(p_), s(s_), value(1) {
    if (!is_prime(p)) throw NumericError("modulus base is not prime");
    if (s < 1) throw NumericError("modulus exponent must be >= 1");
    for (int i = 0; i < s; ++i) {
      if (value > (std::int64_t(1) << 62) / p)
        throw NumericError("prime power overflows");
      value *= p;
    }
  }

  bool operator==(const PrimePowerModulus& o) const {
    return p == o.p && s == o.s;
  }
  std::string str() const {
    std::string r = std::to_string(p);
    if (s > 1) r += "^" + std::to_string(s);
    return r;
  }
};

inline std::int64_t mod_norm(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * b % m);
}

inline std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a = mod_norm(a, m);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mod_mul(r, a, m);
    a = mod_mul(a, a, m);
  }
  return r;
}

// Inverse mod m via extended Euclid; throws when gcd(a, m) != 1.
inline std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod_norm(a, m), t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2; t0 = t1; t1 = t2;
  }
  if (r0 != 1)
    throw NonUnitResidue("non-unit " + std::to_string(a) + " mod " +
                         std::to_string(m));
  return mod_norm(t0, m);
}

struct Residue {
  std::int64_t value;
  PrimePowerModulus modulus;
  Residue(std::int64_t v, PrimePowerModulus m)
      : value(mod_norm(v, m.value)), modulus(m) {}
};

inline std::int64_t mod_of_int(const Int& n, std::int64_t m) {
  Int r = n % m;
  std::int64_t v = r.get_si();
  return v < 0 ? v + m : v;
}

// num * den^{-1} mod p^s; fails when p divides den (series not p-integral).
inline Residue reduce_mod(const Rational& x, const PrimePowerModulus& m) {
  Int den = x.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(),
                         static_cast<unsigned long>(m.p)))
    throw NonInvertibleDenominator("denominator " + den.get_str() +
                                   " not invertible mod " + m.str());
  std::int64_t n = mod_of_int(x.get_num(), m.value);
  std::int64_t d = mod_of_int(den, m.value);
  return Residue(mod_mul(n, mod_inv(d, m.value), m.value), m);
}

// Full factorization by trial division, provided every prime factor is
// <= bound; otherwise reports the remaining cofactor.
inline std::vector<std::pair<std::int64_t, int>> factor_smooth(
    Int n, std::int64_t bound) {
  if (n < 1) throw NumericError("factor_smooth: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d <= bound && n > 1; ++d) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d)))
      continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n != 1) throw NotSmooth(n);
  return out;
}

// Distinct prime factors of an arbitrary integer; trial division up to 10^6,
// then the (probably prime) remainder.  Large composite remainders are split
// by Pollard rho.  Used only for reporting denominator primes in scans.
inline void prime_factors_into(Int n, std::vector<Int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (std::int64_t d = 2; d <= 1000000 && Int(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
      out.push_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(),
                                static_cast<unsigned long>(d)))
        n /= d;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out.push_back(n);
    return;
  }
  // Pollard rho with Brent cycle detection.
  Int x = 2, y = 2, c = 1, d = 1;
  while (d == 1 || d == n) {
    x = 2; y = 2; d = 1;
    auto f = [&](const Int& v) { return Int((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    c += 1;
  }
  prime_factors_into(d, out);
  prime_factors_into(n / d, out);
}

inline int moebius(std::int64_t n) {
  if (n < 1) throw NumericError("moebius: argument must be positive");
  int k = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      ++k;
      if (n % d == 0) return 0;
    }
  }
  if (n > 1) ++k;
  return (k % 2 == 0) ? 1 : -1;
}

}  // namespace eqmf
