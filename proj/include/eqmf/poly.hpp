#pragma once

// Dense univariate polynomials over Q and exact linear algebra.

#include "eqmf/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace eqmf {

struct PolyError : NumericError {
  using NumericError::NumericError;
};
struct DegreeExceeded : PolyError {
  DegreeExceeded() : PolyError("polynomial degree exceeds the stated bound") {}
};

// Coefficients low-to-high, trailing zeros trimmed.  Zero poly is {}.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static RationalPoly constant(const Rational& a) {
    return RationalPoly({a});
  }
  static RationalPoly monomial(std::size_t d, const Rational& a) {
    std::vector<Rational> c(d + 1, Rational(0));
    c[d] = a;
    return RationalPoly(std::move(c));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }
  Rational leading() const {
    return c_.empty() ? Rational(0) : c_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(i) + b.coeff(i);
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(i) - b.coeff(i);
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a) {
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v *= s;
    return RationalPoly(std::move(c));
  }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.c_ == b.c_;
  }

  // Human-readable, highest degree first: X^2 - 2115X + 870630.
  std::string str(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      Rational a = c_[i];
      if (a == 0) continue;
      bool negative = a < 0;
      Rational mag = negative ? Rational(-a) : a;
      if (first) {
        if (negative) os << "-";
        first = false;
      } else {
        os << (negative ? " - " : " + ");
      }
      bool unit = (mag == 1) && i > 0;
      if (!unit) {
        os << mag.get_num().get_str();
        if (mag.get_den() != 1) os << "/" << mag.get_den().get_str();
      }
      if (i > 0) {
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// x^m a(1/x) for deg a <= m.
inline RationalPoly reciprocal_poly(const RationalPoly& a, std::size_t m) {
  if (a.degree() > static_cast<long>(m)) throw DegreeExceeded();
  std::vector<Rational> c(m + 1, Rational(0));
  for (std::size_t i = 0; i <= m; ++i) c[m - i] = a.coeff(i);
  return RationalPoly(std::move(c));
}

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct LinearSolution {
  SolveStatus status;
  std::vector<Rational> solution;  // valid when Unique
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> kernel;  // basis, when Underdetermined
};

// Exact Gaussian elimination on the rows-by-cols system A x = b.
inline LinearSolution solve_exact_linear(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<long> pivot_col_of_row(rows, -1);
  std::vector<long> pivot_row_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::swap(b[piv], b[rank]);
    Rational inv = Rational(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col_of_row[rank] = static_cast<long>(col);
    pivot_row_of_col[col] = static_cast<long>(rank);
    ++rank;
  }

  LinearSolution out;
  out.rank = rank;
  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] != 0) {
      out.status = SolveStatus::Inconsistent;
      return out;
    }
  if (rank == cols) {
    out.status = SolveStatus::Unique;
    out.solution.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rank; ++i)
      out.solution[static_cast<std::size_t>(pivot_col_of_row[i])] = b[i];
    return out;
  }
  out.status = SolveStatus::Underdetermined;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_row_of_col[free_col] >= 0) continue;
    std::vector<Rational> k(cols, Rational(0));
    k[free_col] = 1;
    for (std::size_t c2 = 0; c2 < cols; ++c2) {
      long r = pivot_row_of_col[c2];
      if (r >= 0) k[c2] = -a[static_cast<std::size_t>(r)][free_col];
    }
    out.kernel.push_back(std::move(k));
  }
  return out;
}

}  // namespace eqmf
