#include "osa/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace osa {

namespace {

void make_primitive(SparseIntRow& row) {
  mpz_class g = 0;
  for (const auto& kv : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), kv.second.get_mpz_t());
  if (g > 1)
    for (auto& kv : row) mpz_divexact(kv.second.get_mpz_t(), kv.second.get_mpz_t(), g.get_mpz_t());
}

// Groups indices connected through nonzero entries of a symmetric pattern.
std::vector<std::vector<std::size_t>> components(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      out.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] >= 0) continue;
        if (m[i][j] != 0 || m[j][i] != 0) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(idx.size(), std::vector<Q>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) out[a][b] = m[idx[a]][idx[b]];
  return out;
}

void dense_signature(Matrix a, Inertia& acc) {
  const std::size_t n = a.size();
  std::vector<bool> live(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (live[i] && a[i][i] != 0) piv = i;
    if (piv != n) {
      (a[piv][piv] > 0 ? acc.positive : acc.negative) += 1;
      live[piv] = false;
      --remaining;
      for (std::size_t j = 0; j < n; ++j) {
        if (!live[j] || a[j][piv] == 0) continue;
        Q f = a[j][piv] / a[piv][piv];
        for (std::size_t k = 0; k < n; ++k)
          if (live[k] && a[piv][k] != 0) a[j][k] -= f * a[piv][k];
      }
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (live[i] && live[j] && a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) {
      acc.zero += static_cast<int>(remaining);
      return;
    }
    acc.positive += 1;
    acc.negative += 1;
    Q b = a[pi][pj];
    live[pi] = live[pj] = false;
    remaining -= 2;
    for (std::size_t k = 0; k < n; ++k) {
      if (!live[k]) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (!live[l]) continue;
        Q corr = a[k][pi] * a[pj][l] + a[k][pj] * a[pi][l];
        if (corr != 0) a[k][l] -= corr / b;
      }
    }
  }
}

Matrix dense_nullspace(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Q inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Q f = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (a[r][k] != 0) a[i][k] -= f * a[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  Matrix basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t fcol = 0; fcol < cols; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<Q> v(cols, Q(0));
    v[fcol] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][fcol];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

std::size_t rank_fraction_free(std::vector<SparseIntRow> rows) {
  std::map<long, SparseIntRow> pivots;
  for (auto& row : rows) {
    make_primitive(row);
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        long col = lead->first;
        pivots.emplace(col, std::move(row));
        break;
      }
      const SparseIntRow& piv = it->second;
      mpz_class pc = piv.begin()->second;
      mpz_class rc = lead->second;
      SparseIntRow next;
      for (const auto& [c, v] : row) next[c] = v * pc;
      for (const auto& [c, v] : piv) {
        mpz_class& slot = next[c];
        slot -= v * rc;
      }
      for (auto e = next.begin(); e != next.end();) e = e->second == 0 ? next.erase(e) : std::next(e);
      make_primitive(next);
      row = std::move(next);
    }
  }
  return pivots.size();
}

Inertia inertia(const Matrix& m) {
  Inertia out;
  const std::size_t n = m.size();
  for (const auto& comp : components(m)) {
    Matrix sub = submatrix(m, comp);
    dense_signature(sub, out);
    for (const auto& v : dense_nullspace(sub)) {
      std::vector<Q> full(n, Q(0));
      for (std::size_t a = 0; a < comp.size(); ++a) full[comp[a]] = v[a];
      out.radical.push_back(std::move(full));
    }
  }
  return out;
}

Matrix nullspace(const Matrix& m) { return dense_nullspace(m); }

}  // namespace osa
