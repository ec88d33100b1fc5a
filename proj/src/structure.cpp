#include "lz2/structure.hpp"

#include <array>
#include <optional>
#include <string>

#include "lz2/error.hpp"

namespace lz2 {

void validate_complex(const Complex& c) {
  require(c.d.rows() == c.dim0 && c.d.cols() == c.dim1, "shape_mismatch",
          "differential must be " + std::to_string(c.dim0) + "x" + std::to_string(c.dim1) + ", got " +
              std::to_string(c.d.rows()) + "x" + std::to_string(c.d.cols()));
}

MultiMap::MultiMap(std::size_t out_dim, std::vector<std::size_t> in_dims)
    : out(out_dim), in(std::move(in_dims)) {
  c.resize(out * in_size());
}

std::size_t MultiMap::in_size() const {
  std::size_t n = 1;
  for (auto d : in) n *= d;
  return n;
}

std::size_t MultiMap::offset(std::size_t o, const std::vector<std::size_t>& idx) const {
  require(idx.size() == in.size(), "arity_mismatch", "wrong number of indices");
  std::size_t k = o;
  for (std::size_t s = 0; s < in.size(); ++s) {
    require(idx[s] < in[s], "dim_mismatch", "index out of range");
    k = k * in[s] + idx[s];
  }
  require(o < out, "dim_mismatch", "output index out of range");
  return k;
}

Scalar& MultiMap::at(std::size_t o, std::initializer_list<std::size_t> idx) {
  return c[offset(o, std::vector<std::size_t>(idx))];
}

const Scalar& MultiMap::at(std::size_t o, std::initializer_list<std::size_t> idx) const {
  return c[offset(o, std::vector<std::size_t>(idx))];
}

bool MultiMap::is_zero() const {
  for (const auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

namespace {

void check_args(const MultiMap& f, const Vec* const* args, std::size_t nargs, std::size_t n) {
  if (nargs != n)
    fail("arity_mismatch", "expected " + std::to_string(n) + " arguments, got " + std::to_string(nargs));
  for (std::size_t s = 0; s < n; ++s)
    if (args[s]->size() != f.in[s])
      fail("dim_mismatch", "argument " + std::to_string(s) + " has length " + std::to_string(args[s]->size()) +
                               ", slot dimension is " + std::to_string(f.in[s]));
}

// Calls fn(flat input offset of the fixed slots, weight) for every nonzero
// product of coordinates of args. Weights live in per-thread scratch so that
// the hot loops do not allocate.
template <class Fn>
void for_support(const Vec* const* args, std::size_t nargs, std::size_t slot, std::size_t base,
                 const std::vector<std::size_t>& dims, const Scalar& w, Fn&& fn) {
  if (slot == nargs) {
    fn(base, w);
    return;
  }
  thread_local std::array<Scalar, 8> scratch;
  std::optional<Scalar> local;
  Scalar& next = slot < scratch.size() ? scratch[slot] : local.emplace();
  const Vec& a = *args[slot];
  for (std::size_t i = 0; i < dims[slot]; ++i) {
    if (sgn(a[i]) == 0) continue;
    if (a[i] == 1) {
      for_support(args, nargs, slot + 1, base * dims[slot] + i, dims, w, fn);
    } else {
      mpq_mul(next.get_mpq_t(), w.get_mpq_t(), a[i].get_mpq_t());
      for_support(args, nargs, slot + 1, base * dims[slot] + i, dims, next, fn);
    }
  }
}

const Scalar& one() {
  static const Scalar v(1);
  return v;
}

Vec eval(const MultiMap& f, const Vec* const* args, std::size_t nargs) {
  check_args(f, args, nargs, f.arity());
  Vec r(f.out);
  const std::size_t n = f.in_size();
  thread_local Scalar t;
  for_support(args, nargs, 0, 0, f.in, one(), [&](std::size_t k, const Scalar& w) {
    for (std::size_t o = 0; o < f.out; ++o) {
      const Scalar& c = f.c[o * n + k];
      if (sgn(c) == 0) continue;
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), w.get_mpq_t());
      r[o] += t;
    }
  });
  return r;
}

std::vector<const Vec*> ptrs(const std::vector<Vec>& args) {
  std::vector<const Vec*> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(&a);
  return out;
}

}  // namespace

Vec mm_eval(const MultiMap& f, const std::vector<Vec>& args) {
  auto p = ptrs(args);
  return eval(f, p.data(), p.size());
}

Vec mm_eval(const MultiMap& f, std::initializer_list<const Vec*> args) { return eval(f, args.begin(), args.size()); }

Mat mm_partial(const MultiMap& f, const std::vector<Vec>& args) {
  require(f.arity() == args.size() + 1, "arity_mismatch", "partial evaluation must leave one slot");
  auto p = ptrs(args);
  check_args(f, p.data(), p.size(), args.size());
  const std::size_t last = f.in.back();
  const std::size_t n = f.in_size();
  Mat m(f.out, last);
  for_support(p.data(), p.size(), 0, 0, f.in, one(), [&](std::size_t k, const Scalar& w) {
    for (std::size_t o = 0; o < f.out; ++o)
      for (std::size_t j = 0; j < last; ++j) {
        const Scalar& c = f.c[o * n + k * last + j];
        if (sgn(c) != 0) m(o, j) += c * w;
      }
  });
  return m;
}

Vec flatten(const MultiMap& f) { return f.c; }

MultiMap unflatten(std::size_t out, std::vector<std::size_t> in, const Vec& flat) {
  MultiMap f(out, std::move(in));
  require(flat.size() == f.c.size(), "length_mismatch",
          "flat length " + std::to_string(flat.size()) + " differs from tensor size " + std::to_string(f.c.size()));
  f.c = flat;
  return f;
}

MultiMap mm_from_mat(const Mat& m) {
  MultiMap f(m.rows(), {m.cols()});
  f.c = m.entries();
  return f;
}

Mat mm_to_mat(const MultiMap& f) {
  require(f.arity() == 1, "arity_mismatch", "only one-input maps are matrices");
  Mat m(f.out, f.in[0]);
  for (std::size_t i = 0; i < f.out; ++i)
    for (std::size_t j = 0; j < f.in[0]; ++j) m(i, j) = f.c[i * f.in[0] + j];
  return m;
}

MultiMap operator+(const MultiMap& x, const MultiMap& y) {
  require(x.same_shape(y), "shape_mismatch", "sum of differently shaped multilinear maps");
  MultiMap r = x;
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] += y.c[k];
  return r;
}

MultiMap operator-(const MultiMap& x, const MultiMap& y) { return x + Scalar(-1) * y; }

MultiMap operator*(const Scalar& s, const MultiMap& f) {
  MultiMap r = f;
  for (auto& v : r.c) v *= s;
  return r;
}

MultiMap mm_compose_slot(const MultiMap& f, std::size_t k, const Mat& m) {
  require(k < f.arity() && m.rows() == f.in[k], "shape_mismatch", "slot precomposition of wrong shape");
  auto dims = f.in;
  dims[k] = m.cols();
  MultiMap r(f.out, dims);
  std::size_t inner = 1;
  for (std::size_t s = k + 1; s < f.arity(); ++s) inner *= f.in[s];
  std::size_t outer = f.out;
  for (std::size_t s = 0; s < k; ++s) outer *= f.in[s];
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t i = 0; i < f.in[k]; ++i)
      for (std::size_t b = 0; b < inner; ++b) {
        const Scalar& c = f.c[(a * f.in[k] + i) * inner + b];
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (sgn(m(i, j)) != 0) r.c[(a * m.cols() + j) * inner + b] += c * m(i, j);
      }
  return r;
}

MultiMap mm_compose_out(const Mat& m, const MultiMap& f) {
  require(m.cols() == f.out, "shape_mismatch", "output postcomposition of wrong shape");
  MultiMap r(m.rows(), f.in);
  const std::size_t n = f.in_size();
  for (std::size_t o = 0; o < m.rows(); ++o)
    for (std::size_t i = 0; i < f.out; ++i) {
      if (sgn(m(o, i)) == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(f.c[i * n + k]) != 0) r.c[o * n + k] += m(o, i) * f.c[i * n + k];
    }
  return r;
}

}  // namespace lz2
