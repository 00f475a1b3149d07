#include "gralg/sparse_echelon.hpp"

#include <algorithm>
#include <map>

#include "gralg/error.hpp"

namespace gralg {

struct SparseEchelon::Accumulator {
  std::map<Column, BigInt> entries;
  BigInt denominator = 1;

  explicit Accumulator(const SparseVector& v) {
    for (const auto& [c, x] : v) denominator = lcm(denominator, BigInt(x.get_den()));
    for (const auto& [c, x] : v) {
      if (x == 0) continue;
      entries.emplace(c, x.get_num() * (denominator / x.get_den()));
    }
  }
};

SparseEchelon::SparseEchelon(std::size_t columns) : pivot_row_(columns, -1) {}

void SparseEchelon::eliminate(Accumulator& acc) const {
  auto& entries = acc.entries;
  auto it = entries.begin();
  while (it != entries.end()) {
    const Column c = it->first;
    const std::int32_t r = pivot_row_[c];
    if (r < 0) {
      ++it;
      continue;
    }
    const IntRow& row = rows_[static_cast<std::size_t>(r)];
    BigInt a = row.vals.front();
    BigInt b = it->second;
    const BigInt g = gcd(a, b);
    a /= g;
    b /= g;
    // acc <- a * acc - b * row, which cancels column c.
    if (a != 1) {
      for (auto& [col, val] : entries) val *= a;
      acc.denominator *= a;
    }
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      auto slot = entries.try_emplace(row.cols[k], 0).first;
      slot->second -= b * row.vals[k];
      if (slot->second == 0) entries.erase(slot);
    }
    it = entries.upper_bound(c);
  }
}

bool SparseEchelon::insert(const SparseVector& v) {
  for (const auto& [c, x] : v) {
    if (c >= pivot_row_.size()) throw Error("sparse vector column out of range");
  }
  Accumulator acc(v);
  eliminate(acc);
  if (acc.entries.empty()) return false;

  IntRow row;
  BigInt content = 0;
  for (const auto& [c, x] : acc.entries) content = gcd(content, x);
  if (acc.entries.begin()->second < 0) content = -content;
  for (auto& [c, x] : acc.entries) {
    row.cols.push_back(c);
    row.vals.push_back(x / content);
  }
  pivot_row_[row.cols.front()] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

SparseVector SparseEchelon::reduce(const SparseVector& v) const {
  Accumulator acc(v);
  eliminate(acc);
  SparseVector out;
  out.reserve(acc.entries.size());
  for (const auto& [c, x] : acc.entries) {
    Rational r(x, acc.denominator);
    r.canonicalize();
    out.emplace_back(c, std::move(r));
  }
  return out;
}

std::vector<SparseVector> SparseEchelon::reduced_basis() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].cols.front() > rows_[b].cols.front(); });

  std::map<Column, SparseVector> reduced;  // pivot -> fully reduced row
  for (std::size_t idx : order) {
    const IntRow& row = rows_[idx];
    std::map<Column, Rational> x;
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      Rational val(row.vals[k], row.vals.front());
      val.canonicalize();
      x.emplace(row.cols[k], val);
    }
    const Column pivot = row.cols.front();
    for (auto it = x.upper_bound(pivot); it != x.end();) {
      auto found = reduced.find(it->first);
      if (found == reduced.end()) {
        ++it;
        continue;
      }
      const Column c = it->first;
      const Rational factor = it->second;
      for (const auto& [col, val] : found->second) {
        auto slot = x.try_emplace(col, 0).first;
        slot->second -= factor * val;
        if (slot->second == 0) x.erase(slot);
      }
      it = x.upper_bound(c);
    }
    reduced.emplace(pivot, SparseVector(x.begin(), x.end()));
  }
  std::vector<SparseVector> out;
  out.reserve(reduced.size());
  for (auto& [p, row] : reduced) out.push_back(std::move(row));
  return out;
}

}  // namespace gralg
