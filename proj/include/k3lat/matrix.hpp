#pragma once

#include "k3lat/error.hpp"
#include "k3lat/num.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace k3lat {

// Dense row-major matrix. Every lattice in scope has rank <= 26, so no
// attempt at sparsity or anything clever.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}

  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error("BadShape", "ragged initializer");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw Error("BadShape", "dimension mismatch in matrix product");
    Mat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
      }
    return out;
  }

  std::vector<T> operator*(const std::vector<T>& x) const {
    if (cols_ != x.size()) throw Error("BadShape", "dimension mismatch in matrix-vector product");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * x[j];
    return out;
  }

  void scale(const T& s) {
    for (auto& x : data_) x *= s;
  }

  Mat column(std::size_t j) const {
    Mat c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Lexicographic order on (rows, cols, entries); used to sort outputs
  // deterministically.
  friend bool operator<(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  const std::vector<T>& flat() const { return data_; }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
  return out;
}

// Exact conversion; throws if any entry has a nontrivial denominator.
inline IntMat to_int_exact(const RatMat& m) {
  IntMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(m.at(i, j)) != 1)
        throw Error("NotIntegral", "matrix entry is not an integer");
      out.at(i, j) = numerator(m.at(i, j));
    }
  return out;
}

inline IntMat block_diag(const IntMat& a, const IntMat& b) {
  IntMat out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

}  // namespace k3lat
