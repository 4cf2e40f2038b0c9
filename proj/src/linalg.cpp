#include "parabolica/linalg.hpp"

#include <numeric>

namespace parabolica {

long rank_integer(std::vector<std::vector<mpz_class>> a) {
  // fraction-free Gaussian elimination (Bareiss); divisions are exact
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return long(r);
}

long rank(const Matrix &rows) {
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows.size());
  for (const auto &row : rows) {
    mpz_class l = 1;
    for (const auto &x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(row.size());
    for (const auto &x : row) v.push_back(x.get_num() * (l / x.get_den()));
    a.push_back(std::move(v));
  }
  return rank_integer(std::move(a));
}

SparseVec linear_coords(const Poly &f) {
  SparseVec v;
  for (const auto &t : f.terms()) {
    if (t.mono.degree() != 1) throw Error("expected a linear polynomial: " + f.str());
    v[t.mono.factors()[0].gen] = t.coeff;
  }
  return v;
}

namespace {

// v -= c*w
void axpy(SparseVec &v, const Rational &c, const SparseVec &w) {
  for (const auto &[k, x] : w) {
    auto it = v.find(k);
    if (it == v.end())
      v.emplace(k, -c * x);
    else {
      it->second -= c * x;
      if (it->second == 0) v.erase(it);
    }
  }
}

}  // namespace

SparseVec RowSpace::reduce(SparseVec v) const {
  for (const auto &[p, row] : rows_) {
    auto it = v.find(p);
    if (it == v.end()) continue;
    Rational c = it->second;
    axpy(v, c, row);
  }
  return v;
}

bool RowSpace::add(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Gen p = v.begin()->first;
  Rational inv = 1 / v.begin()->second;
  for (auto &[k, x] : v) x *= inv;
  // keep the form reduced: clear the new pivot from existing rows
  for (auto &[q, row] : rows_) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Rational c = it->second;
    axpy(row, c, v);
  }
  rows_.emplace(p, std::move(v));
  return true;
}

}  // namespace parabolica
