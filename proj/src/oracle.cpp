#include "newton/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

#include "newton/errors.hpp"

namespace newton {

namespace {

// Monomials of total degree < n in (degree, lex) order.
std::vector<Exponent> monomials_below(int dim, int n) {
  std::vector<Exponent> out;
  Exponent e(dim, 0);
  auto rec = [&](auto&& self, int pos, long remaining) -> void {
    if (pos == dim) {
      out.push_back(e);
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
      e[pos] = 0;
    }
  };
  for (int deg = 0; deg < n; ++deg) rec(rec, 0, deg);
  // group by degree: regenerate sorted by (degree, lex)
  std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

// row -= factor * pivot  (pivot has leading coefficient 1)
SparseRow axpy(const SparseRow& row, const SparseRow& pivot,
               const Rational& factor) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational c = row[i].second - factor * pivot[j].second;
      if (c != 0) out.emplace_back(row[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

TruncatedQuotient truncated_quotient(const IdealPresentation& ideal, int n) {
  if (n < 1) throw DomainError("truncation degree must be positive");
  int d = ideal.dim;
  std::vector<Exponent> basis = monomials_below(d, n);
  std::map<Exponent, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;

  std::unordered_map<int, SparseRow> pivots;
  long rank = 0;

  auto reduce = [&](SparseRow row) {
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Rational inv = row.front().second;
        for (auto& [c, v] : row) v /= inv;
        pivots.emplace(lead, std::move(row));
        ++rank;
        return;
      }
      row = axpy(row, it->second, row.front().second);
    }
  };

  for (const LocalElement& g : ideal.generators) {
    if (g.is_zero()) continue;
    long mindeg = -1;
    for (const auto& [e, c] : g.terms()) {
      long td = total_degree(e);
      if (mindeg < 0 || td < mindeg) mindeg = td;
    }
    for (const Exponent& m : basis) {
      if (total_degree(m) + mindeg >= n) continue;
      SparseRow row;
      for (const auto& [e, c] : g.terms()) {
        Exponent em = e + m;
        if (total_degree(em) >= n) continue;  // truncate modulo m^n
        row.emplace_back(index[em], c);
      }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end());
      reduce(std::move(row));
    }
  }

  TruncatedQuotient tq;
  tq.dim = d;
  tq.truncation = n;
  tq.basis_size = (long)basis.size();
  tq.span_dim = rank;
  return tq;
}

long colength_truncated(const IdealPresentation& ideal, int n) {
  return truncated_quotient(ideal, n).colength();
}

long colength_stable(const IdealPresentation& ideal, const OracleConfig& config) {
  std::deque<long> window;
  for (int n = 1; n <= config.truncation_limit; ++n) {
    window.push_back(colength_truncated(ideal, n));
    if ((int)window.size() > config.stabilization_window) window.pop_front();
    if ((int)window.size() == config.stabilization_window &&
        std::all_of(window.begin(), window.end(),
                    [&](long v) { return v == window.front(); }))
      return window.front();
  }
  throw NotPrimaryOrBudgetError(
      "truncated colength did not stabilize; ideal is not m-primary or the "
      "truncation limit is too small");
}

long multiplicity(const IdealPresentation& ideal, const OracleConfig& config) {
  int d = ideal.dim;
  long nonzero = 0;
  for (const LocalElement& g : ideal.generators)
    if (!g.is_zero()) ++nonzero;
  if (nonzero == d) return colength_stable(ideal, config);

  // d-th finite difference of n -> colength(I^n), constant once the
  // colength function reaches its polynomial regime.
  std::vector<long> lengths;
  std::deque<long> window;
  for (int n = 1; n <= config.power_budget; ++n) {
    lengths.push_back(colength_stable(power_ideal(ideal, n), config));
    if ((int)lengths.size() >= d + 1) {
      std::vector<long> diff = lengths;
      for (int k = 0; k < d; ++k)
        for (size_t i = diff.size() - 1; i >= 1; --i) diff[i] -= diff[i - 1];
      window.push_back(diff.back());
      if ((int)window.size() > config.stabilization_window) window.pop_front();
      if ((int)window.size() == config.stabilization_window &&
          std::all_of(window.begin(), window.end(),
                      [&](long v) { return v == window.front(); }))
        return window.front();
    }
  }
  throw BudgetExceededError(
      "finite differences of power colengths did not settle within budget");
}

}  // namespace newton
