#pragma once

// q-expansions of the classical level-one generators and the differential
// operators acting on (quasi)modular forms.  Series are in the variable q,
// coefficients indexed from q^0.

#include "eqmf/numeric.hpp"
#include "eqmf/series.hpp"

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

namespace eqmf {

struct QFormError : NumericError {
  using NumericError::NumericError;
};

// sum_{d | n} d^{k-1}, sieved for all n < N at once.
inline std::vector<Int> sigma_table(unsigned k_minus_1, std::size_t n_max) {
  std::vector<Int> s(n_max, 0);
  for (std::size_t d = 1; d < n_max; ++d) {
    Int dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k_minus_1);
    for (std::size_t m = d; m < n_max; m += d) s[m] += dk;
  }
  return s;
}

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 2.
inline Series eisenstein(unsigned k, std::size_t n) {
  if (k < 2 || k % 2 != 0) throw QFormError("eisenstein: bad weight");
  static std::map<unsigned, Series> cache;
  auto it = cache.find(k);
  if (it == cache.end() || it->second.trunc() < n) {
    Rational factor = Rational(-2 * long(k)) / bernoulli(k);
    auto sig = sigma_table(k - 1, n);
    Series e = zero_series(n);
    if (n > 0) e[0] = 1;
    for (std::size_t m = 1; m < n; ++m) e[m] = factor * Rational(sig[m]);
    it = cache.insert_or_assign(k, std::move(e)).first;
  }
  return it->second.truncated(n);
}

// prod (1 - q^m) via the pentagonal number expansion.
inline Series euler_product(std::size_t n) {
  Series f = zero_series(n);
  if (n > 0) f[0] = 1;
  for (long g = 1;; ++g) {
    long e1 = g * (3 * g - 1) / 2;
    long e2 = g * (3 * g + 1) / 2;
    if (static_cast<std::size_t>(e1) >= n) break;
    Rational sign = (g % 2 == 0) ? 1 : -1;
    f[static_cast<std::size_t>(e1)] += sign;
    if (static_cast<std::size_t>(e2) < n) f[static_cast<std::size_t>(e2)] += sign;
  }
  return f;
}

// Delta = q prod (1-q^m)^24, cross-checked once per truncation against
// (E4^3 - E6^2)/1728.
inline Series delta_series(std::size_t n) {
  static std::map<std::size_t, Series> checked;
  auto it = checked.lower_bound(n);
  if (it == checked.end()) {
    Series d = shift(power(euler_product(n), 24), 1).truncated(n);
    Series alt = scale(sub(power(eisenstein(4, n), 3),
                           power(eisenstein(6, n), 2)),
                       frac(1, 1728));
    if (!eq_overlap(d, alt))
      throw QFormError("delta cross-check failed");
    it = checked.emplace(n, std::move(d)).first;
  }
  return it->second.truncated(n);
}

// 1/j = Delta / E4^3 = q - 744 q^2 + 356652 q^3 - ...
inline Series j_inverse(std::size_t n) {
  return mul(delta_series(n), invert(power(eisenstein(4, n), 3)));
}

// D = q d/dq.
inline Series d_operator(const Series& f) { return theta_euler(f); }

inline Series d_power(Series f, unsigned r) {
  for (unsigned i = 0; i < r; ++i) f = d_operator(f);
  return f;
}

// Serre derivative in weight k: D(f) - (k/12) E2 f.
inline Series serre_derivative(const Series& f, long k) {
  return sub(d_operator(f),
             scale(mul(eisenstein(2, f.trunc()), f), frac(k, 12)));
}

// Rankin-Cohen bracket [f,g]_n for weights (k,l).
inline Series rankin_cohen(const Series& f, const Series& g, unsigned n,
                           long k, long l) {
  std::size_t nn = std::min(f.trunc(), g.trunc());
  Series acc = zero_series(nn);
  for (unsigned i = 0; i <= n; ++i) {
    Rational c = Rational(binomial(Int(long(n) + k - 1), long(n - i)) *
                          binomial(Int(long(n) + l - 1), long(i)));
    if (i % 2 == 1) c = -c;
    acc = add(acc, scale(mul(d_power(f, i), d_power(g, n - i)), c));
  }
  return acc;
}

// theta_k^(r)(f) = D^{r+1}(f) - ((k+r)/12) [E2, f]_r for weights (2, k).
inline Series theta_r(const Series& f, long k, unsigned r) {
  Series bracket = rankin_cohen(eisenstein(2, f.trunc()), f, r, 2, k);
  return sub(d_power(f, r + 1), scale(bracket, frac(k + long(r), 12)));
}

// L_w = theta_{w-1}^(1) written out: d_{w+1} d_{w-1} - ((w^2-1)/144) E4.
inline Series l_operator(const Series& f, long w) {
  Series s = serre_derivative(serre_derivative(f, w - 1), w + 1);
  return sub(s, scale(mul(eisenstein(4, f.trunc()), f),
                      frac(w * w - 1, 144)));
}

// Weight-raising operator E4 d_{w-1} - ((w+1)/12) E6.
inline Series k_up(const Series& f, long w) {
  std::size_t n = f.trunc();
  return sub(mul(eisenstein(4, n), serre_derivative(f, w - 1)),
             scale(mul(eisenstein(6, n), f), frac(w + 1, 12)));
}

// Companion operator E4 d_{w+3} - ((w+9)/12) E6.
inline Series k_up_adjoint(const Series& f, long w) {
  std::size_t n = f.trunc();
  return sub(mul(eisenstein(4, n), serre_derivative(f, w + 3)),
             scale(mul(eisenstein(6, n), f), frac(w + 9, 12)));
}

// dim M_k for level one.
inline long dim_modular(long k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12;
  return k / 12 + 1;
}

// dim of quasimodular forms of weight w, depth <= r.
inline long dim_qm(long w, long r) {
  long d = 0;
  for (long l = 0; l <= r; ++l) d += dim_modular(w - 2 * l);
  return d;
}

// Exponent triple for a monomial E2^a E4^b E6^c.
struct Monomial {
  long a, b, c;
};

// All monomials of weight w with E2-exponent <= r, deterministic order.
inline std::vector<Monomial> qm_monomial_basis(long w, long r) {
  std::vector<Monomial> out;
  for (long a = std::min(r, w / 2); a >= 0; --a)
    for (long c = 0; 2 * a + 6 * c <= w; ++c) {
      long rem = w - 2 * a - 6 * c;
      if (rem % 4 == 0) out.push_back({a, rem / 4, c});
    }
  return out;
}

// q-expansion of E2^a E4^b E6^c with generator powers cached per call site.
class MonomialExpander {
 public:
  explicit MonomialExpander(std::size_t n) : n_(n) {}
  Series expand(const Monomial& m) {
    return mul(mul(pow_of(2, m.a), pow_of(4, m.b)), pow_of(6, m.c));
  }

 private:
  Series pow_of(unsigned k, long e) {
    auto& tab = powers_[k];
    while (static_cast<long>(tab.size()) <= e) {
      if (tab.empty())
        tab.push_back(one_series(n_));
      else
        tab.push_back(mul(tab.back(), eisenstein(k, n_)));
    }
    return tab[static_cast<std::size_t>(e)];
  }
  std::size_t n_;
  std::map<unsigned, std::vector<Series>> powers_;
};

}  // namespace eqmf
