#include "lz2/cochain.hpp"

#include <deque>
#include <memory>
#include <mutex>

#include "detail.hpp"
#include "lz2/error.hpp"

namespace lz2 {

using detail::e;
using detail::for_tuples;
using detail::note;
using detail::fill;

namespace {

void append(Vec& v, const MultiMap& f) { v.insert(v.end(), f.c.begin(), f.c.end()); }

std::size_t take(MultiMap& f, const Vec& v, std::size_t pos) {
  for (auto& x : f.c) x = v.at(pos++);
  return pos;
}

// Gradewise actions of the representation on vectors. The vector argument
// is usually a cochain value, and zero for most unit cochains.
struct Act {
  const Algebra& g;
  const Rep& r;
  static Vec act(const MultiMap& f, std::initializer_list<const Vec*> args) {
    if (is_zero(*std::data(args)[args.size() - 1])) return Vec(f.out);
    return mm_eval(f, args);
  }
  Vec l0v(const Vec& x, const Vec& v) const { return act(r.l0_0, {&x, &v}); }
  Vec l0m(const Vec& x, const Vec& m) const { return act(r.l0_1, {&x, &m}); }
  Vec r0v(const Vec& x, const Vec& v) const { return act(r.r0_0, {&x, &v}); }
  Vec r0m(const Vec& x, const Vec& m) const { return act(r.r0_1, {&x, &m}); }
  Vec l1(const Vec& a, const Vec& v) const { return act(r.l1, {&a, &v}); }
  Vec r1(const Vec& a, const Vec& v) const { return act(r.r1, {&a, &v}); }
  Vec l2(const Vec& x, const Vec& y, const Vec& v) const { return act(r.l2, {&x, &y, &v}); }
  Vec m2(const Vec& x, const Vec& y, const Vec& v) const { return act(r.m2, {&x, &y, &v}); }
  Vec r2(const Vec& x, const Vec& y, const Vec& v) const { return act(r.r2, {&x, &y, &v}); }
  Vec dv(const Vec& m) const { return is_zero(m) ? Vec(r.V.d.rows()) : r.V.d * m; }
};

// Base brackets of basis vectors, computed once per cochain.
struct BasisValues {
  std::vector<Vec> X, B, br_, xa_, ax_, l3_, d_;
  std::size_t n0, n1;
  explicit BasisValues(const Algebra& g) : n0(g.n0()), n1(g.n1()) {
    for (std::size_t i = 0; i < n0; ++i) X.push_back(e(n0, i));
    for (std::size_t a = 0; a < n1; ++a) B.push_back(e(n1, a));
    for (const auto& x : X)
      for (const auto& y : X) br_.push_back(g.br(x, y));
    for (const auto& x : X)
      for (const auto& a : B) xa_.push_back(g.br_xa(x, a));
    for (const auto& a : B)
      for (const auto& x : X) ax_.push_back(g.br_ax(a, x));
    for (const auto& x : X)
      for (const auto& y : X)
        for (const auto& z : X) l3_.push_back(g.L3(x, y, z));
    for (const auto& a : B) d_.push_back(g.d(a));
  }
  const Vec& br(std::size_t i, std::size_t j) const { return br_[i * n0 + j]; }
  const Vec& xa(std::size_t i, std::size_t a) const { return xa_[i * n1 + a]; }
  const Vec& ax(std::size_t a, std::size_t i) const { return ax_[a * n0 + i]; }
  const Vec& L3(std::size_t i, std::size_t j, std::size_t k) const { return l3_[(i * n0 + j) * n0 + k]; }
  const Vec& d(std::size_t a) const { return d_[a]; }
};

}  // namespace

Cochain1 zero_cochain1(const Algebra& g, const Complex& V) {
  const auto n0 = g.n0(), n1 = g.n1();
  return {MultiMap(V.dim0, {n0}), MultiMap(V.dim1, {n1}), MultiMap(V.dim1, {n0, n0})};
}

Cochain2 zero_cochain2(const Algebra& g, const Complex& V) {
  const auto n0 = g.n0(), n1 = g.n1();
  return {MultiMap(V.dim0, {n1}), MultiMap(V.dim0, {n0, n0}), MultiMap(V.dim1, {n0, n1}),
          MultiMap(V.dim1, {n1, n0}), MultiMap(V.dim1, {n0, n0, n0})};
}

Cochain3 zero_cochain3(const Algebra& g, const Complex& V) {
  const auto n0 = g.n0(), n1 = g.n1(), v0 = V.dim0, v1 = V.dim1;
  return {{MultiMap(v0, {n0, n1}), MultiMap(v0, {n1, n0}), MultiMap(v1, {n1, n1}), MultiMap(v0, {n0, n0, n0}),
           MultiMap(v1, {n0, n0, n1}), MultiMap(v1, {n0, n1, n0}), MultiMap(v1, {n1, n0, n0}),
           MultiMap(v1, {n0, n0, n0, n0})}};
}

Vec flatten(const Cochain1& c) {
  Vec v;
  append(v, c.l0);
  append(v, c.l1);
  append(v, c.l2);
  return v;
}

Vec flatten(const Cochain2& c) {
  Vec v;
  for (const MultiMap* f : {&c.psi, &c.omega, &c.mu, &c.nu, &c.theta}) append(v, *f);
  return v;
}

Vec flatten(const Cochain3& c) {
  Vec v;
  for (const auto& f : c.c) append(v, f);
  return v;
}

std::size_t dim_c1(const Algebra& g, const Complex& V) { return flatten(zero_cochain1(g, V)).size(); }
std::size_t dim_c2(const Algebra& g, const Complex& V) { return flatten(zero_cochain2(g, V)).size(); }
std::size_t dim_c3(const Algebra& g, const Complex& V) { return flatten(zero_cochain3(g, V)).size(); }

Cochain1 unflatten1(const Algebra& g, const Complex& V, const Vec& v) {
  require(v.size() == dim_c1(g, V), "length_mismatch", "wrong length for a 1-cochain");
  Cochain1 c = zero_cochain1(g, V);
  std::size_t p = take(c.l0, v, 0);
  p = take(c.l1, v, p);
  take(c.l2, v, p);
  return c;
}

Cochain2 unflatten2(const Algebra& g, const Complex& V, const Vec& v) {
  require(v.size() == dim_c2(g, V), "length_mismatch", "wrong length for a 2-cochain");
  Cochain2 c = zero_cochain2(g, V);
  std::size_t p = 0;
  for (MultiMap* f : {&c.psi, &c.omega, &c.mu, &c.nu, &c.theta}) p = take(*f, v, p);
  return c;
}

Cochain3 unflatten3(const Algebra& g, const Complex& V, const Vec& v) {
  require(v.size() == dim_c3(g, V), "length_mismatch", "wrong length for a 3-cochain");
  Cochain3 c = zero_cochain3(g, V);
  std::size_t p = 0;
  for (auto& f : c.c) p = take(f, v, p);
  return c;
}

Cochain1 operator+(const Cochain1& x, const Cochain1& y) { return {x.l0 + y.l0, x.l1 + y.l1, x.l2 + y.l2}; }

Cochain2 operator+(const Cochain2& x, const Cochain2& y) {
  return {x.psi + y.psi, x.omega + y.omega, x.mu + y.mu, x.nu + y.nu, x.theta + y.theta};
}

Cochain2 operator-(const Cochain2& x, const Cochain2& y) { return x + Scalar(-1) * y; }

Cochain2 operator*(const Scalar& s, const Cochain2& c) {
  return {s * c.psi, s * c.omega, s * c.mu, s * c.nu, s * c.theta};
}

Cochain2 d1_apply(const Algebra& g, const Rep& rho, const Cochain1& l) {
  Act A{g, rho};
  const auto n0 = g.n0(), n1 = g.n1();
  auto X = [&](std::size_t i) { return e(n0, i); };
  auto B = [&](std::size_t i) { return e(n1, i); };
  auto L0 = [&](const Vec& x) { return mm_eval(l.l0, {&x}); };
  auto L1 = [&](const Vec& a) { return mm_eval(l.l1, {&a}); };
  auto L2 = [&](const Vec& x, const Vec& y) { return mm_eval(l.l2, {&x, &y}); };

  Cochain2 c = zero_cochain2(g, rho.V);
  fill(c.psi, [&](const auto& t) {
    Vec a = B(t[0]);
    return A.dv(L1(a)) - L0(g.d(a));
  });
  fill(c.omega, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]);
    return A.l0v(x, L0(y)) + A.r0v(y, L0(x)) - L0(g.br(x, y)) + A.dv(L2(x, y));
  });
  fill(c.mu, [&](const auto& t) {
    Vec x = X(t[0]), a = B(t[1]);
    return A.l0m(x, L1(a)) + A.r1(a, L0(x)) - L1(g.br_xa(x, a)) + L2(x, g.d(a));
  });
  fill(c.nu, [&](const auto& t) {
    Vec a = B(t[0]), x = X(t[1]);
    return A.l1(a, L0(x)) + A.r0m(x, L1(a)) - L1(g.br_ax(a, x)) + L2(g.d(a), x);
  });
  fill(c.theta, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]), z = X(t[2]);
    return A.l0m(x, L2(y, z)) - A.r0m(z, L2(x, y)) - A.l0m(y, L2(x, z)) - L1(g.L3(x, y, z)) -
           A.l2(x, y, L0(z)) - A.m2(x, z, L0(y)) - A.r2(y, z, L0(x)) + L2(x, g.br(y, z)) - L2(g.br(x, y), z) -
           L2(y, g.br(x, z));
  });
  return c;
}

Cochain3 d2_apply(const Algebra& g, const Rep& rho, const Cochain2& c) {
  Act A{g, rho};
  const BasisValues T(g);
  // d2_matrix feeds unit cochains: skip the components that vanish.
  const bool hp = !c.psi.is_zero(), ho = !c.omega.is_zero(), hm = !c.mu.is_zero(), hn = !c.nu.is_zero(),
             ht = !c.theta.is_zero();
  auto psi = [&](const Vec& a) { return hp ? mm_eval(c.psi, {&a}) : Vec(c.psi.out); };
  auto om = [&](const Vec& x, const Vec& y) { return ho ? mm_eval(c.omega, {&x, &y}) : Vec(c.omega.out); };
  auto mu = [&](const Vec& x, const Vec& a) { return hm ? mm_eval(c.mu, {&x, &a}) : Vec(c.mu.out); };
  auto nu = [&](const Vec& a, const Vec& x) { return hn ? mm_eval(c.nu, {&a, &x}) : Vec(c.nu.out); };
  auto th = [&](const Vec& x, const Vec& y, const Vec& z) {
    return ht ? mm_eval(c.theta, {&x, &y, &z}) : Vec(c.theta.out);
  };

  Cochain3 r = zero_cochain3(g, rho.V);
  fill(r.c[0], [&](const auto& t) {
    const Vec &x = T.X[t[0]], &a = T.B[t[1]];
    return A.l0v(x, psi(a)) - psi(T.xa(t[0], t[1])) + om(x, T.d(t[1])) - A.dv(mu(x, a));
  });
  fill(r.c[1], [&](const auto& t) {
    const Vec &a = T.B[t[0]], &x = T.X[t[1]];
    return A.r0v(x, psi(a)) - psi(T.ax(t[0], t[1])) + om(T.d(t[0]), x) - A.dv(nu(a, x));
  });
  // Valued in V1: every term (l1(a)psi(b), nu, mu) lands there.
  fill(r.c[2], [&](const auto& t) {
    const Vec &a = T.B[t[0]], &b = T.B[t[1]];
    return A.l1(a, psi(b)) + nu(a, T.d(t[1])) - A.r1(b, psi(a)) - mu(T.d(t[0]), b);
  });
  fill(r.c[3], [&](const auto& t) {
    const Vec &x = T.X[t[0]], &y = T.X[t[1]], &z = T.X[t[2]];
    return A.l0v(x, om(y, z)) - A.r0v(z, om(x, y)) - A.l0v(y, om(x, z)) + om(x, T.br(t[1], t[2])) -
           om(T.br(t[0], t[1]), z) - om(y, T.br(t[0], t[2])) - A.dv(th(x, y, z)) - psi(T.L3(t[0], t[1], t[2]));
  });
  // a lies in g1, so the second term uses r1(a).
  fill(r.c[4], [&](const auto& t) {
    const Vec &x = T.X[t[0]], &y = T.X[t[1]], &a = T.B[t[2]];
    return A.l0m(x, mu(y, a)) - A.r1(a, om(x, y)) - A.l0m(y, mu(x, a)) + mu(x, T.xa(t[1], t[2])) -
           mu(T.br(t[0], t[1]), a) - mu(y, T.xa(t[0], t[2])) - th(x, y, T.d(t[2])) + A.l2(x, y, psi(a));
  });
  // r0(y) acts on mu(x,a): the only well-typed choice.
  fill(r.c[5], [&](const auto& t) {
    const Vec &x = T.X[t[0]], &a = T.B[t[1]], &y = T.X[t[2]];
    return A.l0m(x, nu(a, y)) - A.r0m(y, mu(x, a)) - A.l1(a, om(x, y)) + mu(x, T.ax(t[1], t[2])) -
           nu(T.xa(t[0], t[1]), y) - nu(a, T.br(t[0], t[2])) - th(x, T.d(t[1]), y) + A.m2(x, y, psi(a));
  });
  // Likewise r0(y) on nu(a,x).
  fill(r.c[6], [&](const auto& t) {
    const Vec &a = T.B[t[0]], &x = T.X[t[1]], &y = T.X[t[2]];
    return A.l1(a, om(x, y)) - A.r0m(y, nu(a, x)) - A.l0m(x, nu(a, y)) + nu(a, T.br(t[1], t[2])) -
           nu(T.ax(t[0], t[1]), y) - mu(x, T.ax(t[0], t[2])) - th(T.d(t[0]), x, y) + A.r2(x, y, psi(a));
  });
  // The mu/nu(l3) group enters with a plus sign; with a minus sign D2 D1 = 0
  // fails as soon as l3 != 0.
  fill(r.c[7], [&](const auto& t) {
    const Vec &x = T.X[t[0]], &y = T.X[t[1]], &z = T.X[t[2]], &w = T.X[t[3]];
    return A.l0m(x, th(y, z, w)) - A.l0m(y, th(x, z, w)) + A.l0m(z, th(x, y, w)) + A.r0m(w, th(x, y, z)) -
           th(T.br(t[0], t[1]), z, w) - th(y, T.br(t[0], t[2]), w) - th(y, z, T.br(t[0], t[3])) +
           th(x, T.br(t[1], t[2]), w) + th(x, z, T.br(t[1], t[3])) - th(x, y, T.br(t[2], t[3])) +
           mu(x, T.L3(t[1], t[2], t[3])) - mu(y, T.L3(t[0], t[2], t[3])) + mu(z, T.L3(t[0], t[1], t[3])) +
           nu(T.L3(t[0], t[1], t[2]), w) + A.r2(z, w, om(x, y)) + A.m2(y, w, om(x, z)) +
           A.l2(y, z, om(x, w)) - A.m2(x, w, om(y, z)) - A.l2(x, z, om(y, w)) + A.l2(x, y, om(z, w));
  });
  return r;
}

namespace {

Mat build_d1(const Algebra& g, const Rep& rho) {
  check_shapes(rho, g);
  const std::size_t n1 = dim_c1(g, rho.V), n2 = dim_c2(g, rho.V);
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < n1; ++k) cols.push_back(flatten(d1_apply(g, rho, unflatten1(g, rho.V, unit(n1, k)))));
  return Mat::from_cols(cols, n2);
}

Mat build_d2(const Algebra& g, const Rep& rho) {
  check_shapes(rho, g);
  const std::size_t n2 = dim_c2(g, rho.V), n3 = dim_c3(g, rho.V);
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < n2; ++k) cols.push_back(flatten(d2_apply(g, rho, unflatten2(g, rho.V, unit(n2, k)))));
  return Mat::from_cols(cols, n3);
}

// The wells and xmod solvers ask for the same complex many times; keep the
// last few (g, rho) pairs.
template <class T>
class Memo {
public:
  template <class Make>
  std::shared_ptr<const T> get(const Algebra& g, const Rep& rho, Make&& make) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      for (const auto& e : entries_)
        if (e.g == g && e.rho == rho) return e.value;
    }
    auto value = std::make_shared<const T>(make());
    std::lock_guard<std::mutex> lock(mu_);
    entries_.push_front({g, rho, value});
    if (entries_.size() > 8) entries_.pop_back();
    return value;
  }

private:
  struct Entry {
    Algebra g;
    Rep rho;
    std::shared_ptr<const T> value;
  };
  std::mutex mu_;
  std::deque<Entry> entries_;
};

struct Differentials {
  Mat d1, d2;
  std::vector<Vec> z2;
};

std::shared_ptr<const Differentials> differentials(const Algebra& g, const Rep& rho) {
  static Memo<Differentials> memo;
  return memo.get(g, rho, [&] {
    Differentials d{build_d1(g, rho), build_d2(g, rho), {}};
    d.z2 = kernel_basis(d.d2);
    return d;
  });
}

}  // namespace

Mat d1_matrix(const Algebra& g, const Rep& rho) { return differentials(g, rho)->d1; }

Mat d2_matrix(const Algebra& g, const Rep& rho) { return differentials(g, rho)->d2; }

Quotient::Quotient(const std::vector<Vec>& b_span, const std::vector<Vec>& z_basis, std::size_t ambient)
    : n_(ambient) {
  if (!b_span.empty()) b_ = column_space_basis(Mat::from_cols(b_span, n_));
  std::vector<Vec> all = b_;
  all.insert(all.end(), z_basis.begin(), z_basis.end());
  if (all.empty()) return;
  for (auto p : rref(Mat::from_cols(all, n_)).pivots)
    if (p >= b_.size()) h_.push_back(all[p]);
  require(h_.size() + b_.size() == rank(Mat::from_cols(all, n_)), "internal", "quotient basis inconsistent");
}

std::optional<Vec> Quotient::coords(const Vec& v) const {
  require(v.size() == n_, "length_mismatch", "vector of the wrong length for this quotient");
  std::vector<Vec> all = b_;
  all.insert(all.end(), h_.begin(), h_.end());
  auto y = in_span(all, v);
  if (!y) return std::nullopt;
  return Vec(y->begin() + static_cast<std::ptrdiff_t>(b_.size()), y->end());
}

std::optional<Vec> Quotient::representative(const Vec& v) const {
  auto c = coords(v);
  if (!c) return std::nullopt;
  Vec r = zeros(n_);
  for (std::size_t k = 0; k < h_.size(); ++k) r += (*c)[k] * h_[k];
  return r;
}

namespace {

std::vector<Vec> columns(const Mat& m) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

}  // namespace

CohomologySummary cohomology(const Algebra& g, const Rep& rho) {
  auto d = differentials(g, rho);
  CohomologySummary s;
  s.dimC1 = d->d1.cols();
  s.dimC2 = d->d1.rows();
  s.dimC3 = d->d2.rows();
  s.z1_basis = kernel_basis(d->d1);
  s.z2_basis = d->z2;
  Quotient q = h2_quotient(g, rho);
  s.b2_basis = q.b_basis();
  s.h2_representatives = q.reps();
  s.dimZ1 = s.z1_basis.size();
  s.dimZ2 = s.z2_basis.size();
  s.dimB2 = s.b2_basis.size();
  s.dimH2 = s.h2_representatives.size();
  return s;
}

Quotient h2_quotient(const Algebra& g, const Rep& rho) {
  static Memo<Quotient> memo;
  return *memo.get(g, rho, [&] {
    auto d = differentials(g, rho);
    return Quotient(columns(d->d1), d->z2, d->d1.rows());
  });
}

Quotient h2_quotient_strict(const Algebra& g, const Rep& rho) {
  static Memo<Quotient> memo;
  return *memo.get(g, rho, [&] {
    auto d = differentials(g, rho);
    const Cochain1 z1 = zero_cochain1(g, rho.V);
    const Cochain2 z2 = zero_cochain2(g, rho.V);
    const std::size_t keep = z1.l0.size() + z1.l1.size();
    std::vector<Vec> b;
    for (std::size_t j = 0; j < keep; ++j) b.push_back(d->d1.col(j));
    const std::size_t th0 = d->d2.cols() - z2.theta.size();
    Mat sel(z2.theta.size(), d->d2.cols());
    for (std::size_t k = 0; k < z2.theta.size(); ++k) sel(k, th0 + k) = 1;
    return Quotient(b, kernel_basis(vcat(d->d2, sel)), d->d2.cols());
  });
}

CocycleCheck is_cocycle2(const Cochain2& c, const Algebra& g, const Rep& rho) {
  check_shapes(rho, g);
  CocycleCheck out;
  out.residual = d2_apply(g, rho, c);
  for (std::size_t k = 0; k < 8; ++k) {
    const MultiMap& f = out.residual.c[k];
    std::string id = "coc0" + std::to_string(k + 1);
    for_tuples(f.in, [&](const std::vector<std::size_t>& idx) {
      Vec r(f.out);
      for (std::size_t o = 0; o < f.out; ++o) r[o] = f.c[f.offset(o, idx)];
      note(out.violations, id, idx, r);
    });
  }
  out.ok = out.violations.empty();
  return out;
}

std::optional<Cochain1> class_difference_is_coboundary(const Cochain2& c1, const Cochain2& c2, const Algebra& g,
                                                       const Rep& rho) {
  require(is_cocycle2(c1, g, rho).ok && is_cocycle2(c2, g, rho).ok, "not_cocycle",
          "class comparison needs two 2-cocycles");
  auto lam = solve(d1_matrix(g, rho), flatten(c1 - c2));
  if (!lam) return std::nullopt;
  return unflatten1(g, rho.V, *lam);
}

Bimodule trivial_bimodule(const Algebra& g, std::size_t dim) {
  return {dim, MultiMap(dim, {g.n0(), dim}), MultiMap(dim, {dim, g.n0()})};
}

Bimodule adjoint_bimodule(const Algebra& g) {
  Bimodule M{g.n0(), g.b00, g.b00};
  return M;
}

Violations verify_bimodule(const Algebra& g, const Bimodule& M) {
  const auto n = g.n0();
  require(M.left.out == M.dim && M.left.in == std::vector<std::size_t>{n, M.dim} && M.right.out == M.dim &&
              M.right.in == std::vector<std::size_t>{M.dim, n},
          "shape_mismatch", "bimodule actions have the wrong shape");
  Violations out;
  auto L = [&](const Vec& x, const Vec& m) { return mm_eval(M.left, {&x, &m}); };
  auto R = [&](const Vec& m, const Vec& x) { return mm_eval(M.right, {&m, &x}); };
  for_tuples({n, n, M.dim}, [&](const auto& t) {
    Vec x = e(n, t[0]), y = e(n, t[1]), m = e(M.dim, t[2]), xy = g.br(x, y);
    note(out, "LLM", t, L(xy, m) - L(x, L(y, m)) + L(y, L(x, m)));
    note(out, "LML", t, R(m, xy) - R(R(m, x), y) - L(x, R(m, y)));
    note(out, "MLL", t, R(m, xy) - L(x, R(m, y)) + R(L(x, m), y));
  });
  return out;
}

Mat dl_matrix(const Algebra& g, const Bimodule& M, std::size_t n) {
  require(g.n1() == 0, "not_plain", "d_L needs a plain Leibniz algebra (g1 = 0)");
  check_shapes(g);
  require(verify_bimodule(g, M).empty(), "invalid_bimodule", "actions violate LLM/LML/MLL");
  const auto n0 = g.n0();
  MultiMap shape_in(M.dim, std::vector<std::size_t>(n, n0));
  MultiMap shape_out(M.dim, std::vector<std::size_t>(n + 1, n0));
  auto L = [&](const Vec& x, const Vec& m) { return mm_eval(M.left, {&x, &m}); };
  auto R = [&](const Vec& m, const Vec& x) { return mm_eval(M.right, {&m, &x}); };

  std::vector<Vec> cols;
  for (std::size_t k = 0; k < shape_in.size(); ++k) {
    MultiMap f = shape_in;
    f.c[k] = 1;
    MultiMap df = shape_out;
    fill(df, [&](const std::vector<std::size_t>& t) {
      std::vector<Vec> xs;
      for (auto i : t) xs.push_back(e(n0, i));
      Vec r(M.dim);
      // sum_{i=1}^{n} (-1)^{i+1} x_i . f(..., x_i omitted, ...)
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vec> args;
        for (std::size_t s = 0; s <= n; ++s)
          if (s != i) args.push_back(xs[s]);
        Vec term = L(xs[i], mm_eval(f, args));
        if (i % 2 == 0) r += term; else r -= term;
      }
      // (-1)^{n+1} f(x_1..x_n) . x_{n+1}
      {
        std::vector<Vec> args(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(n));
        Vec term = R(mm_eval(f, args), xs[n]);
        if (n % 2 == 1) r += term; else r -= term;
      }
      // sum_{i<j} (-1)^i f(..., x_i omitted, ..., [x_i,x_j] in slot j, ...)
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          std::vector<Vec> args;
          for (std::size_t s = 0; s <= n; ++s) {
            if (s == i) continue;
            args.push_back(s == j ? g.br(xs[i], xs[j]) : xs[s]);
          }
          Vec term = mm_eval(f, args);
          if (i % 2 == 0) r -= term; else r += term;
        }
      return r;
    });
    cols.push_back(df.c);
  }
  return Mat::from_cols(cols, shape_out.size());
}

}  // namespace lz2
