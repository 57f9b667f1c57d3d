#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qweyl/coefficients.hpp"

namespace qweyl {

/// Sparse row: (column, value) pairs sorted by column, no zeros.
template <class F>
using SparseRow = std::vector<std::pair<std::size_t, F>>;

namespace detail {

template <class F>
SparseRow<F> axpy(const SparseRow<F>& a, const F& f, const SparseRow<F>& b) {
  // a - f*b
  SparseRow<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      F v = a[i].second - f * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Rank of a sparse matrix by Gaussian elimination, pivoting on the
/// shortest available row for each column.
template <class F>
std::size_t sparse_rank(std::vector<SparseRow<F>> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow<F>& r) { return r.empty(); }), rows.end());
  std::size_t rank = 0;
  // rows keyed by leading column
  std::map<std::size_t, std::vector<SparseRow<F>>> by_lead;
  for (auto& r : rows) by_lead[r.front().first].push_back(std::move(r));
  while (!by_lead.empty()) {
    auto it = by_lead.begin();
    auto bucket = std::move(it->second);
    by_lead.erase(it);
    auto piv = std::min_element(bucket.begin(), bucket.end(),
                                [](const SparseRow<F>& a, const SparseRow<F>& b) { return a.size() < b.size(); });
    SparseRow<F> p = std::move(*piv);
    bucket.erase(piv);
    ++rank;
    F inv = inverse(p.front().second);
    for (auto& r : bucket) {
      F f = r.front().second * inv;
      SparseRow<F> s = detail::axpy(r, f, p);
      if (!s.empty()) by_lead[s.front().first].push_back(std::move(s));
    }
  }
  return rank;
}

}  // namespace qweyl
