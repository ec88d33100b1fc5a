#include "lz2/exactla.hpp"

#include <utility>

#include "lz2/error.hpp"

namespace lz2 {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    fail("bad_scalar", "not a rational literal: \"" + std::string(text) + "\"");
  Scalar s;
  s.get_num() = mpz_class(std::string(num));
  s.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (s.get_den() == 0) fail("bad_scalar", "zero denominator: \"" + std::string(text) + "\"");
  if (text.front() == '-') s.get_num() = -s.get_num();
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "shape_mismatch", "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "shape_mismatch", "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Mat operator*(const Mat& x, const Mat& y) {
  require(x.cols() == y.rows(), "shape_mismatch", "matrix product of incompatible shapes");
  Mat r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j)
        if (sgn(y(k, j)) != 0) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

Vec operator*(const Mat& m, const Vec& v) {
  require(m.cols() == v.size(), "shape_mismatch", "matrix-vector product of incompatible shapes");
  Vec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(v[j]) != 0) r[i] += m(i, j) * v[j];
  return r;
}

Mat operator+(const Mat& x, const Mat& y) {
  require(x.same_shape(y), "shape_mismatch", "matrix sum of different shapes");
  Mat r = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (sgn(y(i, j)) != 0) r(i, j) += y(i, j);
  return r;
}

Mat operator-(const Mat& x, const Mat& y) { return x + (-y); }

Mat operator-(const Mat& x) { return Scalar(-1) * x; }

Mat operator*(const Scalar& s, const Mat& m) {
  Mat r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) *= s;
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

Mat hcat(const Mat& x, const Mat& y) {
  require(x.rows() == y.rows(), "shape_mismatch", "hcat of different row counts");
  Mat r(x.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols(); ++j) r(i, x.cols() + j) = y(i, j);
  }
  return r;
}

Mat vcat(const Mat& x, const Mat& y) {
  require(x.cols() == y.cols(), "shape_mismatch", "vcat of different column counts");
  Mat r(x.rows() + y.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) r(x.rows() + i, j) = y(i, j);
  return r;
}

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v.at(k) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec operator+(Vec x, const Vec& y) { return std::move(x += y); }

Vec operator-(Vec x, const Vec& y) { return std::move(x -= y); }

Vec operator-(Vec x) {
  for (auto& e : x) mpq_neg(e.get_mpq_t(), e.get_mpq_t());
  return x;
}

Vec operator*(const Scalar& s, Vec v) {
  for (auto& e : v) e *= s;
  return v;
}

Vec& operator+=(Vec& x, const Vec& y) {
  require(x.size() == y.size(), "shape_mismatch", "vector sum of different lengths");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0) x[i] += y[i];
  return x;
}

Vec& operator-=(Vec& x, const Vec& y) {
  require(x.size() == y.size(), "shape_mismatch", "vector difference of different lengths");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0) x[i] -= y[i];
  return x;
}

Rref rref(const Mat& m) {
  Rref out{m, {}};
  Mat& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  require(b.size() == m.rows(), "shape_mismatch", "right-hand side length differs from row count");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, m.cols());
  return x;
}

std::optional<Vec> in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(Mat::from_cols(basis, v.size()), v);
}

std::optional<Mat> inverse(const Mat& m) {
  require(m.rows() == m.cols(), "shape_mismatch", "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Rref r = rref(hcat(m, Mat::identity(n)));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::vector<Vec> column_space_basis(const Mat& m) {
  std::vector<Vec> out;
  for (auto p : rref(m).pivots) out.push_back(m.col(p));
  return out;
}

}  // namespace lz2
