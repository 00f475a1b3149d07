#include "gralg/series.hpp"

#include <algorithm>

#include <json.hpp>

#include "gralg/error.hpp"

namespace gralg {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw Error("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, const Rational& coefficient, int degree) {
  TruncatedSeries s(order);
  if (degree >= 0 && degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = coefficient;
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(int order, const std::vector<Rational>& coefficients) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < coefficients.size() && i <= static_cast<std::size_t>(order); ++i) {
    s.coeffs_[i] = coefficients[i];
  }
  return s;
}

Rational TruncatedSeries::coefficient(int degree) const {
  if (degree < 0 || degree > order()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(degree)];
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  TruncatedSeries s(new_order);
  for (int i = 0; i <= std::min(new_order, order()); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::negated_argument() const {
  TruncatedSeries s = *this;
  for (std::size_t i = 1; i < s.coeffs_.size(); i += 2) s.coeffs_[i] = -s.coeffs_[i];
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries s = a;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries s(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j] != 0) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (a[0] == 0) throw Error("reciprocal of a series with zero constant term");
  const int order = a.order();
  TruncatedSeries b(order);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += a[k] * b[n - k];
    }
    b[n] = -acc * inv0;
  }
  return b;
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) { return a * reciprocal(b); }

BigInt q_binomial(int n, int m, long q) {
  if (n < 0 || m < 0 || m > n) {
    throw Error("q-binomial needs 0 <= m <= n, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  }
  if (q < 1) throw Error("q-binomial needs q >= 1");
  // Row-by-row q-Pascal: [a, b] = [a-1, b-1] + q^b [a-1, b].
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int a = 1; a <= n; ++a) {
    for (int b = std::min(a, m); b >= 1; --b) {
      BigInt qb;
      mpz_ui_pow_ui(qb.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(b));
      row[b] = row[b - 1] + qb * row[b];
    }
  }
  return row[m];
}

namespace {

void check_levels(const std::vector<int>& m) {
  if (m.empty()) throw Error("complete closed form needs at least one level size");
  for (int x : m) {
    if (x < 1) throw Error("complete closed form needs level sizes >= 1");
  }
  if (m.back() != 1) throw Error("complete closed form needs last entry 1");
}

// Product prod_{j=first}^{last} (1 + sign * t * q^j) as a series.
TruncatedSeries linear_product(int order, long q, int first, int last, int sign) {
  TruncatedSeries p = TruncatedSeries::one(order);
  for (int j = first; j <= last; ++j) {
    BigInt qj;
    mpz_ui_pow_ui(qj.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(j));
    p = p * TruncatedSeries::polynomial(order, {Rational(1), Rational(sign * qj)});
  }
  return p;
}

// m_a where a counts levels from the bottom; levels are stored top level first.
long level_size(const std::vector<int>& m, int a) {
  return m[m.size() - 1 - static_cast<std::size_t>(a)];
}

TruncatedSeries complete_denominator(const std::vector<int>& m, int order) {
  check_levels(m);
  const int n = static_cast<int>(m.size()) - 1;
  TruncatedSeries d = TruncatedSeries::one(order);
  for (int k = 0; k <= n; ++k) {
    BigInt total = 0;
    for (int a = k; a <= n; ++a) {
      // k = 0: the summand is m_a alone; otherwise m_a (m_{a-1}-1)...(m_{a-k+1}-1) m_{a-k}.
      BigInt term = level_size(m, a);
      if (k > 0) {
        for (int j = 1; j <= k - 1; ++j) term *= level_size(m, a - j) - 1;
        term *= level_size(m, a - k);
      }
      total += term;
    }
    if (k % 2 == 1) total = -total;
    d -= TruncatedSeries::monomial(order, Rational(total), k + 1);
  }
  return d;
}

TruncatedSeries subspace_denominator(int n, long q, int order) {
  if (n < 1) throw Error("subspace closed form needs n >= 1");
  if (q < 1) throw Error("subspace closed form needs q >= 1");
  TruncatedSeries sum(order);
  for (int m = 0; m <= n; ++m) {
    TruncatedSeries term = linear_product(order, q, 0, n - m - 1, -1);
    term *= Rational(q_binomial(n, m, q));
    sum += term;
  }
  return TruncatedSeries::one(order) - TruncatedSeries::monomial(order, 1, 1) * sum;
}

TruncatedSeries qn_denominator(int n, int order) {
  if (n < 1) throw Error("qn closed form needs n >= 1");
  // 1 - t (2 - t)^n
  TruncatedSeries base = TruncatedSeries::polynomial(order, {Rational(2), Rational(-1)});
  TruncatedSeries power = TruncatedSeries::one(order);
  for (int i = 0; i < n; ++i) power = power * base;
  return TruncatedSeries::one(order) - TruncatedSeries::monomial(order, 1, 1) * power;
}

// 1 + sum_{m=0}^{n-1} [n,m]_q (1 + t q)...(1 + t q^{n-m-1}), optionally with the sum times t.
TruncatedSeries dual_subspace_form(int n, long q, int order, bool with_t) {
  if (n < 1) throw Error("dual subspace closed form needs n >= 1");
  if (q < 1) throw Error("dual subspace closed form needs q >= 1");
  TruncatedSeries sum(order);
  for (int m = 0; m <= n - 1; ++m) {
    TruncatedSeries term = linear_product(order, q, 1, n - m - 1, +1);
    term *= Rational(q_binomial(n, m, q));
    sum += term;
  }
  if (with_t) sum = TruncatedSeries::monomial(order, 1, 1) * sum;
  return TruncatedSeries::one(order) + sum;
}

TruncatedSeries dual_complete_form(const std::vector<int>& m, int order) {
  check_levels(m);
  const int n = static_cast<int>(m.size()) - 1;
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int k = 1; k <= n; ++k) {
    BigInt total = 0;
    for (int a = k; a <= n; ++a) {
      BigInt term = level_size(m, a);
      for (int j = 1; j <= k - 1; ++j) term *= level_size(m, a - j) - 1;
      total += term;
    }
    s += TruncatedSeries::monomial(order, Rational(total), k);
  }
  return s;
}

ClosedFormSpec algebra_family_of(const ClosedFormSpec& dual) {
  switch (dual.family) {
    case ClosedFormSpec::Family::dual_qn:
      return ClosedFormSpec::make_qn(dual.n);
    case ClosedFormSpec::Family::dual_subspace:
      return ClosedFormSpec::make_subspace(dual.n, dual.q);
    case ClosedFormSpec::Family::dual_complete:
      return ClosedFormSpec::make_complete(dual.levels);
    default:
      throw Error("dual_form_check needs a dual family");
  }
}

}  // namespace

TruncatedSeries closed_form_denominator(const ClosedFormSpec& spec, int order) {
  switch (spec.family) {
    case ClosedFormSpec::Family::qn:
      return qn_denominator(spec.n, order);
    case ClosedFormSpec::Family::subspace:
      return subspace_denominator(spec.n, spec.q, order);
    case ClosedFormSpec::Family::complete:
      return complete_denominator(spec.levels, order);
    default:
      throw Error("closed-form denominator is only defined for qn, subspace and complete");
  }
}

TruncatedSeries closed_form(const ClosedFormSpec& spec, int order) {
  const TruncatedSeries one_minus_t = TruncatedSeries::polynomial(order, {Rational(1), Rational(-1)});
  switch (spec.family) {
    case ClosedFormSpec::Family::qn:
    case ClosedFormSpec::Family::subspace:
    case ClosedFormSpec::Family::complete:
      return divide(one_minus_t, closed_form_denominator(spec, order));
    case ClosedFormSpec::Family::dual_qn:
      // The subspace dual formula at q = 1.
      return dual_subspace_form(spec.n, 1, order, false);
    case ClosedFormSpec::Family::dual_subspace:
      return dual_subspace_form(spec.n, spec.q, order, false);
    case ClosedFormSpec::Family::dual_complete:
      return dual_complete_form(spec.levels, order);
    case ClosedFormSpec::Family::free:
      if (spec.generators < 0) throw Error("free algebra needs a nonnegative generator count");
      return reciprocal(TruncatedSeries::polynomial(order, {Rational(1), Rational(-spec.generators)}));
  }
  throw Error("unknown closed-form family");
}

TruncatedSeries koszul_dual_series(const TruncatedSeries& h) { return reciprocal(h.negated_argument()); }

DualFormCheck dual_form_check(const ClosedFormSpec& dual_spec, int order) {
  const ClosedFormSpec algebra = algebra_family_of(dual_spec);
  DualFormCheck check{closed_form(dual_spec, order), koszul_dual_series(closed_form(algebra, order)),
                      closed_form(dual_spec, order), false, false};
  if (dual_spec.family == ClosedFormSpec::Family::dual_subspace) {
    check.t_corrected = dual_subspace_form(dual_spec.n, dual_spec.q, order, true);
  } else if (dual_spec.family == ClosedFormSpec::Family::dual_qn) {
    check.t_corrected = dual_subspace_form(dual_spec.n, 1, order, true);
  }
  check.printed_matches = check.printed == check.koszul;
  check.corrected_matches = check.t_corrected == check.koszul;
  return check;
}

std::string to_json(const TruncatedSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.coefficients()) arr.push_back(to_fraction_string(c));
  return arr.dump();
}

TruncatedSeries series_from_json(std::string_view text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("series JSON: ") + e.what());
  }
  if (!arr.is_array() || arr.empty()) throw Error("series JSON must be a nonempty array");
  std::vector<Rational> coeffs;
  for (const auto& item : arr) {
    if (!item.is_string()) throw Error("series JSON entries must be \"p/q\" strings");
    coeffs.push_back(parse_fraction(item.get<std::string>()));
  }
  return TruncatedSeries(std::move(coeffs));
}

std::string to_human(const TruncatedSeries& s) {
  std::string out;
  for (int d = 0; d <= s.order(); ++d) {
    const Rational& c = s[d];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string body;
    if (d == 0) {
      body = to_plain_string(mag);
    } else {
      std::string var = d == 1 ? "t" : "t^" + std::to_string(d);
      body = mag == 1 ? var : to_plain_string(mag) + "*" + var;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gralg
