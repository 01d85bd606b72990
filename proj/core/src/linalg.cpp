#include "qaff/linalg.hpp"

namespace qaff {

namespace {

using Matrix = std::vector<std::vector<Laurent>>;  // row-major

std::vector<Laurent> clear_denominators(const std::vector<Rat>& v) {
  Laurent den = common_denominator(v);
  std::vector<Laurent> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.is_zero() ? Laurent() : (x.num() * den).exact_div(x.den()));
  return out;
}

struct Echelon {
  Matrix m;
  std::vector<std::size_t> pivot_cols;
};

Echelon bareiss(Matrix m, std::size_t cols) {
  Echelon e;
  const std::size_t rows = m.size();
  std::size_t p = 0;
  Laurent prev(1);
  for (std::size_t c = 0; c < cols && p < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = p; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        // prefer short pivots to keep entries small
        if (piv == rows || m[i][c].terms().size() < m[piv][c].terms().size()) piv = i;
      }
    if (piv == rows) continue;
    std::swap(m[p], m[piv]);
    for (std::size_t i = p + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Laurent x = m[p][c] * m[i][j] - m[i][c] * m[p][j];
        m[i][j] = x.exact_div(prev);
      }
      m[i][c] = Laurent();
    }
    prev = m[p][c];
    e.pivot_cols.push_back(c);
    ++p;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

Laurent common_denominator(const std::vector<Rat>& v) {
  Laurent den(1);
  for (const auto& x : v) {
    if (x.is_zero() || x.den().is_one()) continue;
    Laurent g = laurent_gcd(den, x.den());
    den = den * x.den().exact_div(g);
  }
  return den;
}

SpanResult solve_in_span(const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& target) {
  const std::size_t k = columns.size();
  const std::size_t rows = target.size();
  std::vector<Laurent> col_scale(k);
  std::vector<std::vector<Laurent>> cleared;
  cleared.reserve(k + 1);
  for (std::size_t c = 0; c < k; ++c) {
    if (columns[c].size() != rows) throw ScalarError("solve_in_span: dimension mismatch");
    col_scale[c] = common_denominator(columns[c]);
    cleared.push_back(clear_denominators(columns[c]));
  }
  Laurent target_scale = common_denominator(target);
  cleared.push_back(clear_denominators(target));

  Matrix m(rows, std::vector<Laurent>(k + 1));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c <= k; ++c) m[r][c] = cleared[c][r];
  Echelon e = bareiss(std::move(m), k + 1);

  SpanResult out;
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == k) return out;
  out.member = true;
  // Back substitution in Q(q) for the scaled system, then undo column scales.
  std::vector<Rat> y(k, Rat());
  for (std::size_t t = e.pivot_cols.size(); t-- > 0;) {
    std::size_t c = e.pivot_cols[t];
    Rat acc(e.m[t][k]);
    for (std::size_t j = c + 1; j < k; ++j)
      if (!e.m[t][j].is_zero() && !y[j].is_zero()) acc -= Rat(e.m[t][j]) * y[j];
    y[c] = acc / Rat(e.m[t][c]);
  }
  out.coefficients.resize(k);
  for (std::size_t c = 0; c < k; ++c)
    out.coefficients[c] = y[c].is_zero() ? Rat() : y[c] * Rat(col_scale[c]) / Rat(target_scale);
  return out;
}

std::size_t matrix_rank(const std::vector<std::vector<Rat>>& columns) {
  if (columns.empty()) return 0;
  const std::size_t k = columns.size();
  const std::size_t rows = columns[0].size();
  Matrix m(rows, std::vector<Laurent>(k));
  for (std::size_t c = 0; c < k; ++c) {
    auto cl = clear_denominators(columns[c]);
    for (std::size_t r = 0; r < rows; ++r) m[r][c] = cl[r];
  }
  return bareiss(std::move(m), k).pivot_cols.size();
}

}  // namespace qaff
