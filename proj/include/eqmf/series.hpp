#pragma once

// Truncated formal power series over an explicit coefficient domain.
// A series carries exactly trunc() coefficients c_0..c_{trunc-1} and is
// understood as c_0 + c_1 x + ... + O(x^trunc).  Binary operations return
// the minimum truncation of their operands; nothing is ever zero-padded.

#include "eqmf/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace eqmf {

struct SeriesError : NumericError {
  using NumericError::NumericError;
};
struct DomainMismatch : SeriesError {
  DomainMismatch() : SeriesError("operands live in different domains") {}
};
struct NonUnitConstantTerm : SeriesError {
  NonUnitConstantTerm() : SeriesError("constant term is not a unit") {}
};
struct NonzeroConstantInner : SeriesError {
  NonzeroConstantInner()
      : SeriesError("inner series of a composition must vanish at 0") {}
};
struct NotReversible : SeriesError {
  NotReversible() : SeriesError("series has no compositional inverse") {}
};
struct ConstantTermNotOne : SeriesError {
  ConstantTermNotOne() : SeriesError("constant term must be 1") {}
};
struct BadConstantTerm : SeriesError {
  using SeriesError::SeriesError;
};
struct EmptyTruncation : SeriesError {
  EmptyTruncation() : SeriesError("operation needs at least one coefficient") {}
};

// Coefficient domain: exact rationals.
struct RationalDomain {
  using value = Rational;
  static value zero() { return Rational(0); }
  static value one() { return Rational(1); }
  static value from_int(long n) { return Rational(n); }
  static value add(const value& a, const value& b) { return a + b; }
  static value sub(const value& a, const value& b) { return a - b; }
  static value neg(const value& a) { return -a; }
  static value mul(const value& a, const value& b) { return a * b; }
  static bool is_zero(const value& a) { return a == 0; }
  static bool is_unit(const value& a) { return a != 0; }
  static value inv(const value& a) {
    if (a == 0) throw NonUnitConstantTerm();
    return Rational(1) / a;
  }
  static bool eq(const value& a, const value& b) { return a == b; }
  bool same(const RationalDomain&) const { return true; }
  std::string name() const { return "Q"; }
};

// Coefficient domain: integers modulo p^s.
struct ResidueDomain {
  PrimePowerModulus m;
  explicit ResidueDomain(PrimePowerModulus mm) : m(mm) {}
  using value = std::int64_t;
  value zero() const { return 0; }
  value one() const { return 1 % m.value; }
  value from_int(long n) const { return mod_norm(n, m.value); }
  value add(value a, value b) const { return mod_norm(a + b, m.value); }
  value sub(value a, value b) const { return mod_norm(a - b, m.value); }
  value neg(value a) const { return mod_norm(-a, m.value); }
  value mul(value a, value b) const { return mod_mul(a, b, m.value); }
  bool is_zero(value a) const { return mod_norm(a, m.value) == 0; }
  bool is_unit(value a) const { return mod_norm(a, m.p) != 0; }
  value inv(value a) const {
    if (!is_unit(a)) throw NonUnitConstantTerm();
    return mod_inv(a, m.value);
  }
  static bool eq(value a, value b) { return a == b; }
  bool same(const ResidueDomain& o) const { return m == o.m; }
  std::string name() const { return "Z/" + std::to_string(m.value); }
};

template <class D>
class TruncSeries {
 public:
  using value = typename D::value;

  TruncSeries(D dom, std::vector<value> coeffs)
      : dom_(std::move(dom)), c_(std::move(coeffs)) {}
  TruncSeries(D dom, std::size_t trunc, const value& fill)
      : dom_(std::move(dom)), c_(trunc, fill) {}

  const D& domain() const { return dom_; }
  std::size_t trunc() const { return c_.size(); }
  const std::vector<value>& coeffs() const { return c_; }
  std::vector<value>& coeffs() { return c_; }
  const value& operator[](std::size_t i) const { return c_[i]; }
  value& operator[](std::size_t i) { return c_[i]; }

  TruncSeries truncated(std::size_t n) const {
    if (n > trunc()) n = trunc();
    return TruncSeries(dom_, std::vector<value>(c_.begin(), c_.begin() + n));
  }

 private:
  D dom_;
  std::vector<value> c_;
};

using Series = TruncSeries<RationalDomain>;
using ModSeries = TruncSeries<ResidueDomain>;

inline Series make_series(std::vector<Rational> c) {
  return Series(RationalDomain{}, std::move(c));
}
inline Series zero_series(std::size_t n) {
  return Series(RationalDomain{}, n, Rational(0));
}
inline Series one_series(std::size_t n) {
  auto s = zero_series(n);
  if (n > 0) s[0] = 1;
  return s;
}
inline Series identity_series(std::size_t n) {
  auto s = zero_series(n);
  if (n > 1) s[1] = 1;
  return s;
}

template <class D>
void require_same_domain(const TruncSeries<D>& f, const TruncSeries<D>& g) {
  if (!f.domain().same(g.domain())) throw DomainMismatch();
}

template <class D>
TruncSeries<D> add(const TruncSeries<D>& f, const TruncSeries<D>& g) {
  require_same_domain(f, g);
  std::size_t n = std::min(f.trunc(), g.trunc());
  TruncSeries<D> r(f.domain(), n, f.domain().zero());
  for (std::size_t i = 0; i < n; ++i) r[i] = f.domain().add(f[i], g[i]);
  return r;
}

template <class D>
TruncSeries<D> sub(const TruncSeries<D>& f, const TruncSeries<D>& g) {
  require_same_domain(f, g);
  std::size_t n = std::min(f.trunc(), g.trunc());
  TruncSeries<D> r(f.domain(), n, f.domain().zero());
  for (std::size_t i = 0; i < n; ++i) r[i] = f.domain().sub(f[i], g[i]);
  return r;
}

template <class D>
TruncSeries<D> neg(const TruncSeries<D>& f) {
  TruncSeries<D> r = f;
  for (std::size_t i = 0; i < r.trunc(); ++i) r[i] = f.domain().neg(r[i]);
  return r;
}

template <class D>
TruncSeries<D> scale(const TruncSeries<D>& f, const typename D::value& a) {
  TruncSeries<D> r = f;
  for (std::size_t i = 0; i < r.trunc(); ++i) r[i] = f.domain().mul(r[i], a);
  return r;
}

template <class D>
TruncSeries<D> mul(const TruncSeries<D>& f, const TruncSeries<D>& g) {
  require_same_domain(f, g);
  std::size_t n = std::min(f.trunc(), g.trunc());
  TruncSeries<D> r(f.domain(), n, f.domain().zero());
  for (std::size_t i = 0; i < n && i < f.trunc(); ++i) {
    if (f.domain().is_zero(f[i])) continue;
    for (std::size_t j = 0; i + j < n && j < g.trunc(); ++j)
      r[i + j] = f.domain().add(r[i + j], f.domain().mul(f[i], g[j]));
  }
  return r;
}

// f * x^k; the truncation grows with the shift.
template <class D>
TruncSeries<D> shift(const TruncSeries<D>& f, std::size_t k) {
  TruncSeries<D> r(f.domain(), f.trunc() + k, f.domain().zero());
  for (std::size_t i = 0; i < f.trunc(); ++i) r[i + k] = f[i];
  return r;
}

template <class D>
TruncSeries<D> invert(const TruncSeries<D>& f) {
  if (f.trunc() == 0) throw EmptyTruncation();
  if (!f.domain().is_unit(f[0])) throw NonUnitConstantTerm();
  const auto& dom = f.domain();
  auto c0inv = dom.inv(f[0]);
  TruncSeries<D> r(dom, f.trunc(), dom.zero());
  r[0] = c0inv;
  for (std::size_t n = 1; n < f.trunc(); ++n) {
    auto acc = dom.zero();
    for (std::size_t k = 1; k <= n; ++k)
      acc = dom.add(acc, dom.mul(f[k], r[n - k]));
    r[n] = dom.neg(dom.mul(c0inv, acc));
  }
  return r;
}

template <class D>
TruncSeries<D> power(const TruncSeries<D>& f, unsigned long e) {
  TruncSeries<D> r(f.domain(), f.trunc(), f.domain().zero());
  if (r.trunc() > 0) r[0] = f.domain().one();
  TruncSeries<D> base = f;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    if ((e >>= 1) != 0) base = mul(base, base);
  }
  return r;
}

namespace detail {
// Horner composition over integer vectors, used as the fast path for
// rational composition when both operands clear to integers.
inline std::vector<Int> int_mul(const std::vector<Int>& a,
                                const std::vector<Int>& b, std::size_t n) {
  std::vector<Int> r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}
}  // namespace detail

template <class D>
TruncSeries<D> compose(const TruncSeries<D>& f, const TruncSeries<D>& g);

// Fast path: scale f to integer coefficients when g is already integral.
inline Series compose(const Series& f, const Series& g) {
  require_same_domain(f, g);
  std::size_t n = std::min(f.trunc(), g.trunc());
  if (n == 0) return zero_series(0);
  if (!(g[0] == 0)) throw NonzeroConstantInner();

  bool g_integral = true;
  for (std::size_t i = 0; i < n; ++i)
    if (g[i].get_den() != 1) { g_integral = false; break; }

  if (g_integral) {
    Int den = 1;
    for (std::size_t i = 0; i < f.trunc(); ++i)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
              f[i].get_den().get_mpz_t());
    std::vector<Int> fi(f.trunc());
    for (std::size_t i = 0; i < f.trunc(); ++i)
      fi[i] = Int(f[i] * Rational(den));
    std::vector<Int> gi(n);
    for (std::size_t i = 0; i < n; ++i) gi[i] = g[i].get_num();
    std::vector<Int> acc(1, fi.empty() ? Int(0) : fi.back());
    for (std::size_t k = f.trunc(); k-- > 1;) {
      acc = detail::int_mul(acc, gi, n);
      if (acc.empty()) acc.resize(1);
      acc[0] += fi[k - 1];
    }
    acc.resize(n);
    Series r = zero_series(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = make_rational(acc[i], den);
    return r;
  }

  Series acc = zero_series(n);
  acc[0] = f[f.trunc() - 1];
  for (std::size_t k = f.trunc(); k-- > 1;) {
    acc = mul(acc, g.truncated(n));
    acc[0] += f[k - 1];
  }
  return acc;
}

template <class D>
TruncSeries<D> compose(const TruncSeries<D>& f, const TruncSeries<D>& g) {
  require_same_domain(f, g);
  std::size_t n = std::min(f.trunc(), g.trunc());
  const auto& dom = f.domain();
  if (n == 0) return TruncSeries<D>(dom, 0, dom.zero());
  if (!dom.is_zero(g[0])) throw NonzeroConstantInner();
  TruncSeries<D> acc(dom, n, dom.zero());
  acc[0] = f[f.trunc() - 1];
  for (std::size_t k = f.trunc(); k-- > 1;) {
    acc = mul(acc, g.truncated(n));
    acc[0] = dom.add(acc[0], f[k - 1]);
  }
  return acc;
}

template <class D>
TruncSeries<D> derive(const TruncSeries<D>& f) {
  if (f.trunc() == 0) return f;
  TruncSeries<D> r(f.domain(), f.trunc() - 1, f.domain().zero());
  for (std::size_t i = 0; i + 1 < f.trunc(); ++i)
    r[i] = f.domain().mul(f[i + 1], f.domain().from_int(long(i) + 1));
  return r;
}

template <class D>
TruncSeries<D> theta_euler(const TruncSeries<D>& f) {
  TruncSeries<D> r = f;
  for (std::size_t i = 0; i < f.trunc(); ++i)
    r[i] = f.domain().mul(f[i], f.domain().from_int(long(i)));
  return r;
}

// Equality on the overlap of truncations; reports the compared length.
template <class D>
bool eq_overlap(const TruncSeries<D>& f, const TruncSeries<D>& g,
                std::size_t* compared = nullptr) {
  require_same_domain(f, g);
  std::size_t n = std::min(f.trunc(), g.trunc());
  if (compared) *compared = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!D::eq(f[i], g[i])) return false;
  return true;
}

// --- rational-only transcendental operations ---

// g with g^2 = f, g(0) = 1.
inline Series sqrt_one(const Series& f) {
  if (f.trunc() == 0) throw EmptyTruncation();
  if (f[0] != 1) throw ConstantTermNotOne();
  Series g = zero_series(f.trunc());
  g[0] = 1;
  for (std::size_t n = 1; n < f.trunc(); ++n) {
    Rational acc = f[n];
    for (std::size_t k = 1; k < n; ++k) acc -= g[k] * g[n - k];
    g[n] = acc / 2;
  }
  return g;
}

inline Series log_series(const Series& f) {
  if (f.trunc() == 0) throw EmptyTruncation();
  if (f[0] != 1) throw BadConstantTerm("log needs constant term 1");
  Series q = mul(derive(f), invert(f.truncated(f.trunc() - 1 > 0
                                                   ? f.trunc() - 1
                                                   : 1)));
  Series r = zero_series(f.trunc());
  for (std::size_t n = 1; n < f.trunc(); ++n) r[n] = q[n - 1] / Rational(n);
  return r;
}

inline Series exp_series(const Series& f) {
  if (f.trunc() == 0) throw EmptyTruncation();
  if (f[0] != 0) throw BadConstantTerm("exp needs constant term 0");
  Series g = zero_series(f.trunc());
  g[0] = 1;
  for (std::size_t n = 1; n < f.trunc(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += Rational(k) * f[k] * g[n - k];
    g[n] = acc / Rational(n);
  }
  return g;
}

// Compositional inverse by Lagrange inversion:
//   [x^n] revert(f) = (1/n) [x^{n-1}] (x/f)^n.
inline Series revert(const Series& f) {
  if (f.trunc() < 2) throw NotReversible();
  if (f[0] != 0 || f[1] == 0) throw NotReversible();
  std::size_t n = f.trunc();
  Series u = zero_series(n);  // f/x
  for (std::size_t i = 0; i + 1 < f.trunc(); ++i) u[i] = f[i + 1];
  u[n - 1] = 0;
  Series w = invert(u);  // x/f
  Series pw = one_series(n);
  Series g = zero_series(n);
  for (std::size_t k = 1; k < n; ++k) {
    pw = mul(pw, w);
    g[k] = pw[k - 1] / Rational(k);
  }
  return g;
}

// --- serialization: header "domain trunc", then one coefficient per line
// as num or num/den.

inline std::string serialize(const Series& f) {
  std::ostringstream os;
  os << f.domain().name() << " " << f.trunc() << "\n";
  for (std::size_t i = 0; i < f.trunc(); ++i) {
    os << f[i].get_num().get_str();
    if (f[i].get_den() != 1) os << "/" << f[i].get_den().get_str();
    os << "\n";
  }
  return os.str();
}

inline Series deserialize(std::istream& is) {
  std::string dom;
  std::size_t n = 0;
  if (!(is >> dom >> n) || dom != "Q")
    throw SeriesError("bad series header");
  Series r = zero_series(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string tok;
    if (!(is >> tok)) throw SeriesError("truncated series payload");
    r[i] = Rational(tok);
    r[i].canonicalize();
  }
  return r;
}

}  // namespace eqmf
