#pragma once

// Extremal quasimodular forms: differential recursion, hypergeometric
// closed forms, generic linear-algebra construction, the Atkin-style
// approximation polynomials with normalizing factors, integrality scans,
// inner-product moments, and auxiliary orthogonal-series recursions.

#include "eqmf/hypergeom.hpp"
#include "eqmf/numeric.hpp"
#include "eqmf/poly.hpp"
#include "eqmf/qform.hpp"
#include "eqmf/series.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace eqmf {

struct ExtremalError : NumericError {
  using NumericError::NumericError;
};
struct WeightFour : ExtremalError {
  WeightFour() : ExtremalError("no depth-1 form of weight 4 exists") {}
};
struct OddWeight : ExtremalError {
  OddWeight() : ExtremalError("weight must be even") {}
};
struct EmptySpace : ExtremalError {
  EmptySpace() : ExtremalError("the requested space is zero") {}
};
struct NonUnique : ExtremalError {
  NonUnique() : ExtremalError("extremal element is not unique at this "
                              "truncation") {}
};
struct SingularSystem : ExtremalError {
  SingularSystem() : ExtremalError("approximation system is singular") {}
};
struct ExtractionFailed : ExtremalError {
  ExtractionFailed() : ExtremalError("polynomial extraction left a nonzero "
                                     "remainder") {}
};
struct NonIntegralExponent : ExtremalError {
  NonIntegralExponent() : ExtremalError("product exponent is not an integer") {}
};

struct ExtremalRecord {
  long w;
  int r;
  Series q_expansion;
  Series t_expansion;  // depth-1/2 closed forms only; empty otherwise
  long vanishing_order;
};

inline Series power_signed(const Series& f, long e) {
  return e >= 0 ? power(f, static_cast<unsigned long>(e))
                : invert(power(f, static_cast<unsigned long>(-e)));
}

// E4^{num/2} for odd num, as a q-expansion.
inline Series e4_half_power(long num, std::size_t n) {
  long k = (num - 1) / 2;  // num = 2k+1
  Series root = sqrt_one(eisenstein(4, n));
  return mul(power_signed(eisenstein(4, n), k), root);
}

inline long depth1_vanishing_order(long w) { return dim_qm(w, 1) - 1; }

inline void check_depth1_weight(long w) {
  if (w < 0 || w % 2 != 0) throw OddWeight();
  if (w == 4) throw WeightFour();
}

// Differential recursion: weight steps +6 (weight-raising operator),
// +2 (Serre derivative), +4 (multiplication by E4).
inline ExtremalRecord extremal_depth1_recursive(long w, std::size_t n) {
  check_depth1_weight(w);
  if (w % 6 == 4) {
    ExtremalRecord base = extremal_depth1_recursive(w - 4, n);
    return {w, 1, mul(eisenstein(4, n), base.q_expansion), zero_series(0),
            depth1_vanishing_order(w)};
  }
  Series g = one_series(n);
  for (long v = 0; v + 6 <= w - w % 6; v += 6)
    g = scale(k_up(g, v), frac(v + 6, 72 * (v + 1) * (v + 5)));
  if (w % 6 == 2) {
    long v = w - 2;
    g = scale(serre_derivative(g, v - 1), frac(12, v + 1));
  }
  return {w, 1, g, zero_series(0), depth1_vanishing_order(w)};
}

// Closed form in t = 1/j: t^n E4^{(3n-1)/2} P_n(t) for weight 6n and
// t^n E4^{3n/2} Q_n(t) for weight 6n+2, converted to q by substituting
// the expansion of 1/j.
inline ExtremalRecord extremal_depth1_hypergeometric(long w, std::size_t n) {
  check_depth1_weight(w);
  if (w % 6 == 4) {
    ExtremalRecord base = extremal_depth1_hypergeometric(w - 4, n);
    return {w, 1, mul(eisenstein(4, n), base.q_expansion), base.t_expansion,
            depth1_vanishing_order(w)};
  }
  Series t_exp = zero_series(0);
  if (w % 6 == 0) {
    long k = w / 6;
    t_exp = k == 0 ? one_series(n)
                   : shift(mul(power(f1_series(n), 6 * k - 2),
                               p_series(k, n)),
                           static_cast<std::size_t>(k)).truncated(n);
  } else {
    long k = (w - 2) / 6;
    t_exp = shift(mul(power(f1_series(n), 6 * k), q_series(k, n)),
                  static_cast<std::size_t>(k)).truncated(n);
  }
  Series q_exp = compose(t_exp, j_inverse(n));
  return {w, 1, q_exp, t_exp, depth1_vanishing_order(w)};
}

// Depth-2 closed forms: t^k E4^{(2k-1)/2} R-series for weight 4k, and
// t^k E4^{(2k-3)/2} E6 (shifted R-series) for weight 4k+2.
inline ExtremalRecord depth2_hypergeometric(long w, std::size_t n) {
  if (w < 2 || w % 2 != 0) throw OddWeight();
  long k = w / 4;
  Series t_hyp = zero_series(0);
  Series q_factor = zero_series(0);
  if (w % 4 == 0) {
    t_hyp = r_series(k, n);
    q_factor = e4_half_power(2 * k - 1, n);
  } else {
    k = (w - 2) / 4;
    t_hyp = pfq({{frac(4 * k + 3, 6), frac(4 * k + 5, 6),
                  frac(4 * k + 7, 6)},
                 {Rational(k + 1), Rational(k + 1)},
                 1728},
                n);
    q_factor = mul(e4_half_power(2 * k - 3, n), eisenstein(6, n));
  }
  Series t_exp = shift(t_hyp, static_cast<std::size_t>(k)).truncated(n);
  Series q_exp = mul(compose(t_exp, j_inverse(n)), q_factor);
  return {w, 2, q_exp, t_exp, dim_qm(w, 2) - 1};
}

// Exact echelon elimination over the monomial basis; returns the unique
// normalized element of maximal vanishing order.
inline ExtremalRecord extremal_generic(long w, int r, std::size_t n) {
  if (w < 2 || w % 2 != 0) throw OddWeight();
  auto monomials = qm_monomial_basis(w, r);
  std::size_t d = monomials.size();
  if (d == 0) throw EmptySpace();
  std::size_t trunc = d + n + 8;
  MonomialExpander expander(trunc);
  std::vector<Series> rows;
  rows.reserve(d);
  for (const auto& m : monomials) rows.push_back(expander.expand(m));

  std::size_t row = 0;
  std::vector<long> pivots;
  for (std::size_t col = 0; col < trunc && row < d; ++col) {
    std::size_t piv = row;
    while (piv < d && rows[piv][col] == 0) ++piv;
    if (piv == d) continue;
    std::swap(rows[piv], rows[row]);
    rows[row] = scale(rows[row], Rational(1) / rows[row][col]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || rows[i][col] == 0) continue;
      rows[i] = sub(rows[i], scale(rows[row], rows[i][col]));
    }
    pivots.push_back(static_cast<long>(col));
    ++row;
  }
  if (row < d) throw NonUnique();
  return {w, r, rows[d - 1], zero_series(0), pivots.back()};
}

// Closed-form normalizing factors.
inline Int normalizing_factor(long m, int a) {
  switch (a) {
    case 0:
      return m == 0 ? Int(1)
                    : Int(24 * m) * binomial(Int(6 * m), 2 * m) *
                          binomial(Int(12 * m), 6 * m);
    case 2: {
      if (m == 0) return 1;
      Rational r = frac(12 * m + 1, 12 * m - 1) *
                   Rational(normalizing_factor(m, 0));
      if (!is_integer(r)) throw ExtremalError("normalizing factor not integral");
      return r.get_num();
    }
    case 6:
      return Int(12 * (2 * m + 1)) * binomial(Int(6 * m + 3), 2 * m + 1) *
             binomial(Int(12 * m + 6), 6 * m + 3);
    case 8: {
      Rational r = frac(12 * m + 7, 12 * m + 5) *
                   Rational(normalizing_factor(m, 6));
      if (!is_integer(r)) throw ExtremalError("normalizing factor not integral");
      return r.get_num();
    }
    default:
      throw ExtremalError("family index must be one of 0, 2, 6, 8");
  }
}

struct AtkinData {
  long m;
  int a;
  RationalPoly A;
  RationalPoly B;
  Int N;
  Int clear;       // least C with C*A, C*B integral
  Series remainder;  // C * (combination of U and V)
};

namespace detail {
inline Int lcm_denominators(const RationalPoly& p, Int acc) {
  for (const auto& c : p.coeffs())
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den().get_mpz_t());
  return acc;
}
}  // namespace detail

// Exact Hermite-Pade solve: polynomial multipliers of U and V maximizing
// the vanishing order of the displayed combination; the remainder's
// leading coefficient reproduces the normalizing factor.
inline AtkinData atkin_like(long m, int a) {
  if (m < 0 || (a != 0 && a != 2 && a != 6 && a != 8))
    throw ExtremalError("bad approximation family indices");
  long deg_a = (a == 0) ? m - 1 : m;
  long deg_b = (a == 2) ? m - 1 : m;
  long v = (a == 0 || a == 2) ? 2 * m : 2 * m + 1;  // vanishing order
  std::size_t trunc = static_cast<std::size_t>(v) + 4;

  Series u = u_series(trunc), w = v_series(trunc);
  bool flip = (a == 0 || a == 8);
  Series s_a = flip ? neg(w) : w;
  if (flip)
    for (std::size_t i = trunc; i-- > 1;)
      s_a[i] = s_a[i] + Rational(1728) * w[i - 1];
  Series s_b = flip ? u : neg(u);

  // combination coefficients: at_k (k=0..deg_a, at_0 = 1 unless A = 0)
  // and bt_k; unknowns are the non-constant ones of each reciprocal.
  bool has_a = deg_a >= 0, has_b = deg_b >= 0;
  std::size_t na = has_a ? static_cast<std::size_t>(deg_a) : 0;
  std::size_t nb = has_b ? static_cast<std::size_t>(deg_b) : 0;
  std::vector<std::vector<Rational>> mat;
  std::vector<Rational> rhs;
  for (long i = 1; i < v; ++i) {
    std::vector<Rational> rowv(na + nb, Rational(0));
    Rational b0(0);
    if (has_a) b0 += s_a[static_cast<std::size_t>(i)];
    if (has_b) b0 += s_b[static_cast<std::size_t>(i)];
    for (std::size_t k = 1; k <= na; ++k)
      if (static_cast<long>(k) <= i)
        rowv[k - 1] = s_a[static_cast<std::size_t>(i - k)];
    for (std::size_t k = 1; k <= nb; ++k)
      if (static_cast<long>(k) <= i)
        rowv[na + k - 1] = s_b[static_cast<std::size_t>(i - k)];
    mat.push_back(std::move(rowv));
    rhs.push_back(-b0);
  }
  std::vector<Rational> sol;
  if (na + nb > 0) {
    auto res = solve_exact_linear(mat, rhs);
    if (res.status != SolveStatus::Unique) throw SingularSystem();
    sol = res.solution;
  }

  // reciprocal coefficient vectors at, bt (constant term 1 when present)
  std::vector<Rational> at(has_a ? na + 1 : 0), bt(has_b ? nb + 1 : 0);
  if (has_a) {
    at[0] = 1;
    for (std::size_t k = 1; k <= na; ++k) at[k] = sol[k - 1];
  }
  if (has_b) {
    bt[0] = 1;
    for (std::size_t k = 1; k <= nb; ++k) bt[k] = sol[na + k - 1];
  }

  // A(X) = sum at_k X^{deg_a - k}, likewise for B.
  auto unrecip = [](const std::vector<Rational>& c) {
    std::vector<Rational> p(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) p[c.size() - 1 - k] = c[k];
    return RationalPoly(std::move(p));
  };
  RationalPoly pa = has_a ? unrecip(at) : RationalPoly();
  RationalPoly pb = has_b ? unrecip(bt) : RationalPoly();

  Int clear = detail::lcm_denominators(pb, detail::lcm_denominators(pa, 1));

  Series rem = zero_series(trunc);
  for (std::size_t i = 0; i < trunc; ++i) {
    Rational acc(0);
    for (std::size_t k = 0; k < at.size() && k <= i; ++k)
      acc += at[k] * s_a[i - k];
    for (std::size_t k = 0; k < bt.size() && k <= i; ++k)
      acc += bt[k] * s_b[i - k];
    rem[i] = acc * Rational(clear);
  }
  for (long i = 0; i < v; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) throw SingularSystem();

  Rational lead = rem[static_cast<std::size_t>(v)] / Rational(clear);
  if (!is_integer(lead) || lead <= 0)
    throw ExtremalError("remainder leading coefficient is not a positive "
                        "integer");
  Int nf = lead.get_num();
  if (nf != normalizing_factor(m, a))
    throw ExtremalError("normalizing factor mismatch against closed form");
  return {m, a, pa, pb, nf, clear, rem};
}

// Three-term recursions for the orthogonal-series pair attached to the
// approximation problem.
inline std::pair<Series, Series> phi_psi(long n, std::size_t trunc) {
  Series phi0 = u_series(trunc);
  Series phi1 = scale(
      shift(mul(f1_series(trunc),
                hyp2f1(frac(5, 12), frac(13, 12), 2, 1728, trunc)),
            1).truncated(trunc),
      84);
  Series psi0 = mul(f1_series(trunc), f2_series(trunc));
  Series psi1 = scale(
      shift(mul(f1_series(trunc),
                hyp2f1(frac(7, 12), frac(11, 12), 2, 1728, trunc)),
            1).truncated(trunc),
      -60);
  if (n == 0) return {phi0, psi0};
  Series t = identity_series(trunc);
  auto lam = [](long k, int sign) {
    // sign -1 for the phi chain, +1 for the psi chain
    if (k == 1) return sign < 0 ? Rational(84) : Rational(-60);
    Rational e = Rational((k % 2 == 0) ? 1 : -1);
    if (sign > 0) e = -e;  // 6 -/+ (-1)^k / *
    return Rational(Rational(12) * (Rational(6) - e / Rational(k - 1)) *
                    (Rational(6) - e / Rational(k)));
  };
  for (long k = 1; k < n; ++k) {
    Series phi2 = sub(phi1, scale(mul(t, phi0), lam(k, -1)));
    Series psi2 = sub(psi1, scale(mul(t, psi0), lam(k, +1)));
    phi0 = phi1; phi1 = phi2;
    psi0 = psi1; psi1 = psi2;
  }
  return {phi1, psi1};
}

struct ScanRow {
  long w;
  bool exists;
  bool integral;
  std::vector<Int> denominator_primes;
  long first_bad_exponent;  // exponent of q; -1 when integral
};

inline ScanRow scan_one(long w, int r, std::size_t n) {
  // the extremal form has depth exactly r only when allowing depth r
  // enlarges the space; otherwise it belongs to a smaller depth
  if (dim_qm(w, r) <= dim_qm(w, r - 1)) return {w, false, false, {}, -1};
  Series g = (r == 1) ? extremal_depth1_hypergeometric(
                            w, static_cast<std::size_t>(dim_qm(w, 1)) + n)
                            .q_expansion
                      : extremal_generic(w, r, n).q_expansion;
  ScanRow row{w, true, true, {}, -1};
  Int den_all = 1;
  for (std::size_t i = 0; i < g.trunc(); ++i) {
    if (is_integer(g[i])) continue;
    if (row.integral) {
      row.integral = false;
      row.first_bad_exponent = static_cast<long>(i);
    }
    mpz_lcm(den_all.get_mpz_t(), den_all.get_mpz_t(),
            g[i].get_den().get_mpz_t());
  }
  if (den_all != 1) prime_factors_into(den_all, row.denominator_primes);
  return row;
}

inline std::vector<ScanRow> integrality_scan(long wmax, int r,
                                             std::size_t n) {
  std::vector<ScanRow> rows;
  for (long w = 2; w <= wmax; w += 2) rows.push_back(scan_one(w, r, n));
  return rows;
}

// The four integer binomial-product families obtained by rescaling the
// hypergeometric factor of G_w^(1) in the doubled local parameter.
inline Series scaled_series(long m, int a, std::size_t n) {
  Series s = zero_series(n);
  for (long k = 0; k < static_cast<long>(n); ++k) {
    Rational c;
    if (a == 0 || a == 2) {
      c = Rational(binomial(Int(2 * m + k), k) *
                   binomial(Int(6 * m + 3 * k), 2 * m + k) *
                   binomial(Int(12 * m + 6 * k), 6 * m + 3 * k));
      if (a == 2) c *= frac(12 * m + 6 * k + 1, 12 * m + 6 * k - 1);
    } else if (a == 6 || a == 8) {
      c = Rational(binomial(Int(2 * m + k + 1), k) *
                   binomial(Int(6 * m + 3 * k + 3), 2 * m + k + 1) *
                   binomial(Int(12 * m + 6 * k + 6), 6 * m + 3 * k + 3));
      if (a == 8) c *= frac(12 * m + 6 * k + 7, 12 * m + 6 * k + 5);
    } else {
      throw ExtremalError("family index must be one of 0, 2, 6, 8");
    }
    s[static_cast<std::size_t>(k)] = c;
  }
  return s;
}

// Inner-product moments of powers of j: generating function as a ratio
// of hypergeometric series.
inline Series atkin_moments(std::size_t n) {
  return mul(hyp2f1(frac(13, 12), frac(5, 12), 1, 1728, n),
             invert(f1_series(n)));
}

// Exponents c(k) with F1 = prod (1-t^k)^{-c(k)}, by Moebius inversion of
// the moment sequence; integrality is asserted.
inline std::vector<Int> c_exponents(std::size_t n) {
  Series mom = atkin_moments(n + 1);
  std::vector<Int> c;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    for (std::size_t d = 1; d <= k; ++d)
      if (k % d == 0)
        acc += Rational(moebius(static_cast<std::int64_t>(k / d))) * mom[d];
    acc /= Rational(12 * static_cast<long>(k));
    if (!is_integer(acc)) throw NonIntegralExponent();
    c.push_back(acc.get_num());
  }
  return c;
}

struct GenAtkinData {
  long w;
  int r;
  long u;
  RationalPoly poly;  // monic, degree u
  Rational N;
};

// Expresses the top E2^r layer of the generic extremal form as a monic
// polynomial in j times E4^s E6^t Delta^u over a normalizing constant.
inline GenAtkinData generalized_atkin(long w, int r) {
  long k = w - 2 * r;
  if (k < 0 || k % 2 != 0) throw OddWeight();
  long u = 0, s = 0, t = 0;
  {
    long rem = k % 12;
    switch (rem) {
      case 0: s = 0; t = 0; break;
      case 2: s = 2; t = 1; break;
      case 4: s = 1; t = 0; break;
      case 6: s = 0; t = 1; break;
      case 8: s = 2; t = 0; break;
      case 10: s = 1; t = 1; break;
      default: throw OddWeight();
    }
    u = (k - 4 * s - 6 * t) / 12;
    if (u < 0) throw ExtremalError("weight too small for this depth");
  }
  std::size_t trunc = static_cast<std::size_t>(dim_qm(w, r)) + 2 *
                          static_cast<std::size_t>(u) + 16;

  auto monomials = qm_monomial_basis(w, r);
  // re-run the generic elimination but track basis coordinates
  std::size_t d = monomials.size();
  if (d == 0) throw EmptySpace();
  MonomialExpander expander(trunc);
  std::vector<Series> rows;
  std::vector<std::vector<Rational>> coords(d,
                                            std::vector<Rational>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    rows.push_back(expander.expand(monomials[i]));
    coords[i][i] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < trunc && row < d; ++col) {
    std::size_t piv = row;
    while (piv < d && rows[piv][col] == 0) ++piv;
    if (piv == d) continue;
    std::swap(rows[piv], rows[row]);
    std::swap(coords[piv], coords[row]);
    Rational inv = Rational(1) / rows[row][col];
    rows[row] = scale(rows[row], inv);
    for (auto& c : coords[row]) c *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      rows[i] = sub(rows[i], scale(rows[row], f));
      for (std::size_t j2 = 0; j2 < d; ++j2)
        coords[i][j2] -= f * coords[row][j2];
    }
    ++row;
  }
  if (row < d) throw NonUnique();

  // top E2^r layer of the last (extremal) row, as a modular q-expansion
  MonomialExpander ex2(trunc);
  Series top = zero_series(trunc);
  for (std::size_t i = 0; i < d; ++i) {
    if (monomials[i].a != r || coords[d - 1][i] == 0) continue;
    top = add(top, scale(ex2.expand({0, monomials[i].b, monomials[i].c}),
                         coords[d - 1][i]));
  }

  // top = N^{-1} E4^s E6^t Delta^u A(j); dividing by E4^{s+3u} E6^t turns
  // Delta^u A(j) into the ordinary power series (1/j)^u A(j).
  Series efac = mul(power(eisenstein(4, trunc),
                          static_cast<unsigned long>(s + 3 * u)),
                    power(eisenstein(6, trunc),
                          static_cast<unsigned long>(t)));
  Series rho = mul(top, invert(efac));
  std::vector<Rational> alpha(static_cast<std::size_t>(u) + 1, Rational(0));
  Series jp = one_series(trunc);
  Series remsr = rho;
  for (long i = 0; i <= u; ++i) {
    Rational c = remsr[static_cast<std::size_t>(i)];
    alpha[static_cast<std::size_t>(u - i)] = c;
    remsr = sub(remsr, scale(jp, c));
    jp = mul(jp, j_inverse(trunc));
  }
  for (std::size_t i = 0; i < remsr.trunc(); ++i)
    if (remsr[i] != 0) throw ExtractionFailed();
  Rational lead = alpha[static_cast<std::size_t>(u)];
  if (lead == 0) throw ExtractionFailed();
  RationalPoly p(std::move(alpha));
  p = (Rational(1) / lead) * p;
  return {w, r, u, p, Rational(1) / lead};
}

// Pairs (E4 exponent, companion weight) spanning the depth-1 space of
// weight k with leading q-powers 1, q, ..., q^{m-1}.
inline std::vector<std::pair<long, long>> depth1_basis(long k) {
  if (k < 2 || k % 2 != 0) throw OddWeight();
  long m = k / 12, rem = k % 12;
  std::vector<std::pair<long, long>> out;
  auto base0 = [](long mm) {
    std::vector<std::pair<long, long>> v{{3 * mm, 0}};
    for (long l = 0; l < mm; ++l) {
      v.emplace_back(3 * mm - 3 * l - 2, 12 * l + 8);
      v.emplace_back(3 * mm - 3 * l - 3, 12 * l + 12);
    }
    return v;
  };
  auto base2 = [](long mm) {
    std::vector<std::pair<long, long>> v{{3 * mm, 2}};
    for (long l = 0; l < mm; ++l) {
      v.emplace_back(3 * mm - 3 * l - 2, 12 * l + 10);
      v.emplace_back(3 * mm - 3 * l - 3, 12 * l + 14);
    }
    return v;
  };
  auto lift = [](std::vector<std::pair<long, long>> v, long e) {
    for (auto& p : v) p.first += e;
    return v;
  };
  switch (rem) {
    case 0: out = base0(m); break;
    case 2: out = base2(m); break;
    case 4: out = lift(base0(m), 1); break;
    case 6:
      out = lift(base2(m), 1);
      out.emplace_back(0, 12 * m + 6);
      break;
    case 8:
      out = lift(base0(m), 2);
      out.emplace_back(0, 12 * m + 8);
      break;
    case 10:
      out = lift(base2(m), 1);
      out.emplace_back(0, 12 * m + 6);
      for (auto& p : out) p.first += 1;
      break;
    default: throw OddWeight();
  }
  return out;
}

}  // namespace eqmf
