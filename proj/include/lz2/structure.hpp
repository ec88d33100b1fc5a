#pragma once

#include <cstddef>
#include <vector>

#include "lz2/exactla.hpp"

namespace lz2 {

// V1 --d--> V0. d has shape dim0 x dim1; zero dimensions are allowed.
struct Complex {
  std::size_t dim1 = 0;
  std::size_t dim0 = 0;
  Mat d;

  Complex() = default;
  Complex(std::size_t d1, std::size_t d0) : dim1(d1), dim0(d0), d(d0, d1) {}
  Complex(std::size_t d1, std::size_t d0, Mat dm) : dim1(d1), dim0(d0), d(std::move(dm)) {}

  std::size_t dim(int grade) const { return grade == 0 ? dim0 : dim1; }
  friend bool operator==(const Complex&, const Complex&) = default;
};

void validate_complex(const Complex& c);

// Multilinear map V_{i1} x ... x V_{ik} -> W stored by structure constants.
// Flat index: output index major, then the inputs row-major in slot order.
struct MultiMap {
  std::size_t out = 0;
  std::vector<std::size_t> in;
  std::vector<Scalar> c;

  MultiMap() = default;
  MultiMap(std::size_t out_dim, std::vector<std::size_t> in_dims);

  std::size_t arity() const { return in.size(); }
  std::size_t in_size() const;  // product of input dimensions
  std::size_t size() const { return c.size(); }

  Scalar& at(std::size_t o, std::initializer_list<std::size_t> idx);
  const Scalar& at(std::size_t o, std::initializer_list<std::size_t> idx) const;
  std::size_t offset(std::size_t o, const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool same_shape(const MultiMap& o) const { return out == o.out && in == o.in; }
  friend bool operator==(const MultiMap&, const MultiMap&) = default;
};

Vec mm_eval(const MultiMap& f, const std::vector<Vec>& args);
// Same, without copying the arguments.
Vec mm_eval(const MultiMap& f, std::initializer_list<const Vec*> args);

// Fix the first args.size() slots; the result is the linear map on the
// remaining single slot (requires arity == args.size() + 1).
Mat mm_partial(const MultiMap& f, const std::vector<Vec>& args);

Vec flatten(const MultiMap& f);
MultiMap unflatten(std::size_t out, std::vector<std::size_t> in, const Vec& flat);

MultiMap mm_from_mat(const Mat& m);  // one-input map
Mat mm_to_mat(const MultiMap& f);

MultiMap operator+(const MultiMap& x, const MultiMap& y);
MultiMap operator-(const MultiMap& x, const MultiMap& y);
MultiMap operator*(const Scalar& s, const MultiMap& f);

// Precompose slot k with a linear map, postcompose with another.
MultiMap mm_compose_slot(const MultiMap& f, std::size_t k, const Mat& m);
MultiMap mm_compose_out(const Mat& m, const MultiMap& f);

// Pair of maps between the degree-0 and degree-1 pieces of two complexes.
struct GradedMap {
  Mat m0;
  Mat m1;
  friend bool operator==(const GradedMap&, const GradedMap&) = default;
};

}  // namespace lz2
