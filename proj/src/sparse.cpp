#include "framed/sparse.hpp"

#include <algorithm>
#include <unordered_map>

namespace framed {

namespace {

void normalize(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  v = std::move(out);
}

// v - s * w, both sorted.
SparseVector axpy(const SparseVector& v, const Rational& s, const SparseVector& w) {
  SparseVector out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -s * w[j].second);
      ++j;
    } else {
      Rational value = v[i].second - s * w[j].second;
      if (value != 0) out.emplace_back(v[i].first, std::move(value));
      ++i;
      ++j;
    }
  }
  return out;
}

// Combines two matrices of equal shape entrywise: x + sign * y.
SparseMatrixQ combine(const SparseMatrixQ& x, const SparseMatrixQ& y, int sign) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DomainError("matrix shapes differ");
  SparseMatrixQ out(x.rows(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (const auto& [r, v] : x.column(j)) out.add(r, j, v);
    for (const auto& [r, v] : y.column(j)) out.add(r, j, sign > 0 ? v : Rational(-v));
  }
  out.finalize();
  return out;
}

}  // namespace

SparseMatrixQ::SparseMatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrixQ SparseMatrixQ::identity(std::size_t n) {
  SparseMatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(static_cast<std::uint32_t>(i), Rational(1));
  return m;
}

std::size_t SparseMatrixQ::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrixQ::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw DomainError("sparse matrix index out of range");
  if (value != 0) columns_[col].emplace_back(static_cast<std::uint32_t>(row), value);
}

void SparseMatrixQ::finalize() {
  for (auto& c : columns_) normalize(c);
}

Rational SparseMatrixQ::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  const auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, std::size_t r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? it->second : Rational(0);
}

bool SparseMatrixQ::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

SparseMatrixQ SparseMatrixQ::transpose() const {
  SparseMatrixQ t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [r, v] : columns_[j]) t.columns_[r].emplace_back(static_cast<std::uint32_t>(j), v);
  }
  return t;  // columns are already sorted: j increases monotonically
}

std::size_t SparseMatrixQ::rank() const {
  if (rows_ < cols_) {
    const SparseMatrixQ t = transpose();
    return sparse_rank(t.columns_);
  }
  return sparse_rank(columns_);
}

bool operator==(const SparseMatrixQ& x, const SparseMatrixQ& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.columns_ == y.columns_;
}

SparseMatrixQ operator*(const SparseMatrixQ& x, const SparseMatrixQ& y) {
  if (x.cols_ != y.rows_) throw DomainError("matrix product shape mismatch");
  SparseMatrixQ out(x.rows_, y.cols_);
  std::vector<Rational> acc(x.rows_);
  std::vector<char> used(x.rows_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < y.cols_; ++j) {
    touched.clear();
    for (const auto& [k, ykj] : y.columns_[j]) {
      for (const auto& [i, xik] : x.columns_[k]) {
        if (!used[i]) {
          used[i] = 1;
          touched.push_back(i);
          acc[i] = 0;
        }
        acc[i] += xik * ykj;
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& col = out.columns_[j];
    for (auto i : touched) {
      if (acc[i] != 0) col.emplace_back(i, acc[i]);
      used[i] = 0;
    }
  }
  return out;
}

SparseMatrixQ operator+(const SparseMatrixQ& x, const SparseMatrixQ& y) { return combine(x, y, 1); }
SparseMatrixQ operator-(const SparseMatrixQ& x, const SparseMatrixQ& y) { return combine(x, y, -1); }

SparseMatrixQ operator*(const Rational& s, const SparseMatrixQ& x) {
  SparseMatrixQ out(x.rows_, x.cols_);
  if (s == 0) return out;
  for (std::size_t j = 0; j < x.cols_; ++j) {
    out.columns_[j].reserve(x.columns_[j].size());
    for (const auto& [r, v] : x.columns_[j]) out.columns_[j].emplace_back(r, s * v);
  }
  return out;
}

std::size_t sparse_rank(std::vector<SparseVector> vectors) {
  // Semi-echelon basis keyed by leading index; each pivot has leading coefficient 1.
  std::sort(vectors.begin(), vectors.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::unordered_map<std::uint32_t, SparseVector> pivots;
  for (auto& v : vectors) {
    while (!v.empty()) {
      const auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      const Rational s = v.front().second;
      v = axpy(v, s, it->second);
    }
    if (v.empty()) continue;
    const Rational lead = v.front().second;
    for (auto& e : v) e.second /= lead;
    const auto key = v.front().first;
    pivots.emplace(key, std::move(v));
  }
  return pivots.size();
}

}  // namespace framed
