#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gralg/rational.hpp"

namespace gralg {

/// Power series in t with exact rational coefficients, kept for t^0 .. t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  /// order = coefficients.size() - 1; an empty list is rejected.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries one(int order);
  static TruncatedSeries monomial(int order, const Rational& coefficient, int degree);
  /// Polynomial with the given low-to-high coefficients, truncated or zero-padded to order.
  static TruncatedSeries polynomial(int order, const std::vector<Rational>& coefficients);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Degrees above the order read as zero.
  Rational coefficient(int degree) const;
  Rational& operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }
  const Rational& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }

  TruncatedSeries truncated(int order) const;
  /// s(t) -> s(-t).
  TruncatedSeries negated_argument() const;
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the smaller order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Multiplicative inverse; throws gralg::Error when the constant term is zero.
TruncatedSeries reciprocal(const TruncatedSeries& a);
/// a / b = a * reciprocal(b).
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// Gaussian binomial [n choose m]_q at an integer q >= 1, by the q-Pascal recurrence.
BigInt q_binomial(int n, int m, long q);

struct ClosedFormSpec {
  enum class Family { qn, subspace, complete, dual_qn, dual_subspace, dual_complete, free };

  Family family = Family::qn;
  int n = 0;
  long q = 0;
  std::vector<int> levels;  // m_n, ..., m_1, m_0 (top level first), last entry 1
  int generators = 0;       // free

  static ClosedFormSpec make_qn(int n) { return {Family::qn, n, 0, {}, 0}; }
  static ClosedFormSpec make_subspace(int n, long q) { return {Family::subspace, n, q, {}, 0}; }
  static ClosedFormSpec make_complete(std::vector<int> m) { return {Family::complete, 0, 0, std::move(m), 0}; }
  static ClosedFormSpec make_dual_qn(int n) { return {Family::dual_qn, n, 0, {}, 0}; }
  static ClosedFormSpec make_dual_subspace(int n, long q) { return {Family::dual_subspace, n, q, {}, 0}; }
  static ClosedFormSpec make_dual_complete(std::vector<int> m) {
    return {Family::dual_complete, 0, 0, std::move(m), 0};
  }
  static ClosedFormSpec make_free(int g) { return {Family::free, 0, 0, {}, g}; }
};

/// Closed-form Hilbert series. Algebra families are (1 - t) / denominator; dual
/// families are the printed polynomial formulas (see dual_form_check for their
/// comparison against the Koszul identity).
TruncatedSeries closed_form(const ClosedFormSpec& spec, int order);

/// Polynomial D with H = (1 - t) / D for qn, subspace and complete; throws for others.
TruncatedSeries closed_form_denominator(const ClosedFormSpec& spec, int order);

/// 1 / H(-t): the dual series forced by H(A,t) H(A!,-t) = 1.
TruncatedSeries koszul_dual_series(const TruncatedSeries& h);

struct DualFormCheck {
  TruncatedSeries printed;
  TruncatedSeries koszul;
  /// Printed subspace formula with the sum multiplied by t; equals printed otherwise.
  TruncatedSeries t_corrected;
  bool printed_matches = false;
  bool corrected_matches = false;
};

/// Compares a dual closed form against 1 / H(-t) of its algebra family.
DualFormCheck dual_form_check(const ClosedFormSpec& dual_spec, int order);

/// JSON array of "p/q" strings, index = degree.
std::string to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(std::string_view text);
/// "1 + 3*t + 8*t^2 + O(t^4)"-style rendering without the O-term: "1 + 3*t + 8*t^2".
std::string to_human(const TruncatedSeries& s);

}  // namespace gralg
