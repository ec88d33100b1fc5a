#pragma once

// Exact linear algebra over Q: rationals are GMP mpq_class values kept in
// canonical form, matrices are dense and row-major.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lz2 {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// "p/q" or "p"; sign only on the numerator, q > 0. Result is canonical.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return a_; }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  bool is_zero() const;
  bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Mat operator*(const Mat& x, const Mat& y);
Vec operator*(const Mat& m, const Vec& v);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator-(const Mat& x);
Mat operator*(const Scalar& s, const Mat& m);
Mat transpose(const Mat& m);
Mat hcat(const Mat& x, const Mat& y);
Mat vcat(const Mat& x, const Mat& y);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
Vec operator+(Vec x, const Vec& y);
Vec operator-(Vec x, const Vec& y);
Vec operator-(Vec x);
Vec operator*(const Scalar& s, Vec v);
Vec& operator+=(Vec& x, const Vec& y);
Vec& operator-=(Vec& x, const Vec& y);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;  // ascending
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);

// One column per free variable: that variable set to 1, the other free
// variables 0, pivot variables solved from the RREF.
std::vector<Vec> kernel_basis(const Mat& m);

// Particular solution with every free variable 0, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Coefficients c with sum c_i basis_i = v (canonical solve), or nullopt.
std::optional<Vec> in_span(const std::vector<Vec>& basis, const Vec& v);

std::optional<Mat> inverse(const Mat& m);

// Columns of m that are pivots, i.e. a basis of the column space taken from m.
std::vector<Vec> column_space_basis(const Mat& m);

}  // namespace lz2
