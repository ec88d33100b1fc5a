#pragma once

// Helpers shared by the test programs: seeded random data, and linear
// systems read off directly from the verifiers (an oracle independent of the
// hand-assembled systems in the library).

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "lz2/wells.hpp"

namespace lz2::testing {

using Sparse = std::map<std::string, Scalar>;

inline Sparse sparse(const Violations& vs) {
  Sparse out;
  for (const auto& v : vs) {
    std::string key = v.id + "@";
    for (auto a : v.at) key += std::to_string(a) + ",";
    for (std::size_t k = 0; k < v.residual.size(); ++k)
      if (v.residual[k] != 0) out[key + "#" + std::to_string(k)] = v.residual[k];
  }
  return out;
}

// For an affine residual map p -> Violations, the system A p = b whose
// solutions are exactly the parameters with no violations.
struct Affine {
  Mat A;
  Vec b;
};

inline Affine affine_fit(std::size_t nparams, const std::function<Violations(const Vec&)>& fn) {
  const Sparse r0 = sparse(fn(zeros(nparams)));
  std::vector<Sparse> cols;
  std::map<std::string, std::size_t> rows;
  for (const auto& [k, _] : r0) rows.emplace(k, 0);
  for (std::size_t j = 0; j < nparams; ++j) {
    cols.push_back(sparse(fn(unit(nparams, j))));
    for (const auto& [k, _] : cols.back()) rows.emplace(k, 0);
  }
  std::size_t i = 0;
  for (auto& [_, idx] : rows) idx = i++;
  Affine out{Mat(rows.size(), nparams), zeros(rows.size())};
  for (const auto& [k, v] : r0) out.b[rows[k]] = -v;
  for (std::size_t j = 0; j < nparams; ++j) {
    for (const auto& [k, v] : cols[j]) out.A(rows[k], j) += v;
    for (const auto& [k, v] : r0) out.A(rows[k], j) -= v;
  }
  return out;
}

class Rng {
public:
  explicit Rng(unsigned seed) : gen_(seed) {}
  int small(int lo = -2, int hi = 2) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Vec vec(std::size_t n, int lo = -2, int hi = 2) {
    Vec v(n);
    for (auto& x : v) x = small(lo, hi);
    return v;
  }
  Mat mat(std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = small(lo, hi);
    return m;
  }
  MultiMap mm(std::size_t out, std::vector<std::size_t> in, int lo = -2, int hi = 2) {
    MultiMap f(out, std::move(in));
    for (auto& x : f.c) x = small(lo, hi);
    return f;
  }
  // Random combination of basis vectors.
  Vec combo(const std::vector<Vec>& basis, std::size_t n) {
    Vec v = zeros(n);
    for (const auto& b : basis) v += Scalar(small()) * b;
    return v;
  }
  Mat invertible(std::size_t n) {
    while (true) {
      Mat m = mat(n, n, -1, 2);
      if (inverse(m)) return m;
    }
  }

private:
  std::mt19937 gen_;
};

inline Vec mat_flat(const Mat& m) { return m.entries(); }

inline Mat mat_unflat(std::size_t r, std::size_t c, const Vec& v, std::size_t off) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v[off + i * c + j];
  return m;
}

// Derivation <-> parameter vector (D0, D1, D2 concatenated).
inline Derivation der_from(const Algebra& g, const Vec& p) {
  const auto n0 = g.n0(), n1 = g.n1();
  Derivation D = zero_derivation(g);
  D.D0 = mat_unflat(n0, n0, p, 0);
  D.D1 = mat_unflat(n1, n1, p, n0 * n0);
  for (std::size_t k = 0; k < D.D2.c.size(); ++k) D.D2.c[k] = p[n0 * n0 + n1 * n1 + k];
  return D;
}

inline std::size_t der_params(const Algebra& g) {
  return g.n0() * g.n0() + g.n1() * g.n1() + g.n1() * g.n0() * g.n0();
}

// Basis of Der(g), read off verify_derivation.
inline std::vector<Derivation> derivation_basis(const Algebra& g) {
  auto fit = affine_fit(der_params(g), [&](const Vec& p) { return verify_derivation(der_from(g, p), g); });
  std::vector<Derivation> out;
  for (const auto& k : kernel_basis(fit.A)) out.push_back(der_from(g, k));
  return out;
}

// Beta making (beta, alpha) compatible, solved from the compatibility checker
// itself; nullopt if there is none.
template <class Pair, class Check>
std::vector<std::pair<Mat, Mat>> compatible_betas(Pair pair, const Complex& V, Check&& check, Rng& rng,
                                                   std::size_t count) {
  const auto v0 = V.dim0, v1 = V.dim1;
  auto with = [&](const Vec& p) {
    Pair q = pair;
    q.beta0 = mat_unflat(v0, v0, p, 0);
    q.beta1 = mat_unflat(v1, v1, p, v0 * v0);
    return q;
  };
  auto fit = affine_fit(v0 * v0 + v1 * v1, [&](const Vec& p) {
    Pair q = with(p);
    Violations v = check(q);
    // beta0 d = d beta1
    Mat r = q.beta0 * V.d - V.d * q.beta1;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        if (r(i, j) != 0) v.push_back({"chain", {i, j}, {r(i, j)}});
    return v;
  });
  std::vector<std::pair<Mat, Mat>> out;
  auto part = solve(fit.A, fit.b);
  if (!part) return out;
  auto ker = kernel_basis(fit.A);
  for (std::size_t t = 0; t < 4 * count && out.size() < count; ++t) {
    Vec p = *part + rng.combo(ker, part->size());
    Pair q = with(p);
    out.emplace_back(q.beta0, q.beta1);
  }
  return out;
}

// Identity plus a few sparse random perturbations of F0, F1 that admit an F2
// making them automorphisms of g (F2 solved from verify_hom).
inline std::vector<Hom> automorphisms(const Algebra& g, Rng& rng, std::size_t count, int tries = 200) {
  std::vector<Hom> out{identity_hom(g)};
  for (int t = 0; t < tries && out.size() < count; ++t) {
    Hom a = identity_hom(g);
    for (std::size_t i = 0; i < g.n0(); ++i)
      for (std::size_t j = 0; j < g.n0(); ++j)
        if (rng.small(0, 3) == 0) a.F0(i, j) += rng.small(-1, 1);
    for (std::size_t i = 0; i < g.n1(); ++i)
      for (std::size_t j = 0; j < g.n1(); ++j)
        if (rng.small(0, 3) == 0) a.F1(i, j) += rng.small(-1, 1);
    if (!inverse(a.F0) || !inverse(a.F1)) continue;
    auto fit = affine_fit(a.F2.c.size(), [&](const Vec& p) {
      Hom b = a;
      b.F2.c = p;
      return verify_hom(b, g, g);
    });
    auto part = solve(fit.A, fit.b);
    if (!part) continue;
    a.F2.c = *part + rng.combo(kernel_basis(fit.A), part->size());
    if (verify_hom(a, g, g).empty()) out.push_back(a);
  }
  return out;
}

inline Derivation random_derivation(const Algebra& g, const std::vector<Derivation>& basis, Rng& rng) {
  Derivation d = zero_derivation(g);
  for (const auto& b : basis) {
    Scalar c = rng.small();
    d.D0 = d.D0 + c * b.D0;
    d.D1 = d.D1 + c * b.D1;
    d.D2 = d.D2 + c * b.D2;
  }
  return d;
}

// Every residual of verify_hom(F) on the tuples of base elements, fiber
// components only, in the order the COC system lists them. E must be a
// block extension (base coordinates first).
inline Vec dense_hom_fiber_residual(const Hom& F, const Extension& E) {
  const Sparse sp = sparse(verify_hom(F, E.hat, E.hat));
  const auto n0 = E.base.n0(), n1 = E.base.n1(), v0 = E.fiber.dim0, v1 = E.fiber.dim1;
  Vec out;
  auto emit = [&](const std::string& id, const std::vector<std::size_t>& at, std::size_t base, std::size_t fib) {
    std::string key = id + "@";
    for (auto a : at) key += std::to_string(a) + ",";
    for (std::size_t k = base; k < base + fib; ++k) {
      auto it = sp.find(key + "#" + std::to_string(k));
      out.push_back(it == sp.end() ? Scalar(0) : it->second);
    }
  };
  auto loop = [&](const std::vector<std::size_t>& dims, const std::function<void(std::vector<std::size_t>)>& fn) {
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::vector<std::size_t> idx(dims.size());
      std::size_t r = flat;
      for (std::size_t s = dims.size(); s-- > 0;) {
        idx[s] = r % dims[s];
        r /= dims[s];
      }
      fn(idx);
    }
  };
  loop({n1}, [&](auto t) { emit("i", t, n0, v0); });
  loop({n0, n0}, [&](auto t) { emit("j", t, n0, v0); });
  loop({n0, n1}, [&](auto t) { emit("k", t, n1, v1); });
  loop({n1, n0}, [&](auto t) { emit("l", t, n1, v1); });
  if (v1 > 0) loop({n0, n0, n0}, [&](auto t) { emit("m", t, n1, v1); });
  return out;
}

inline Vec dense_der_fiber_residual(const Derivation& D, const Extension& E) {
  const Sparse sp = sparse(verify_derivation(D, E.hat));
  const auto n0 = E.base.n0(), n1 = E.base.n1(), v0 = E.fiber.dim0, v1 = E.fiber.dim1;
  Vec out;
  auto emit = [&](const std::string& id, const std::vector<std::size_t>& at, std::size_t base, std::size_t fib) {
    std::string key = id + "@";
    for (auto a : at) key += std::to_string(a) + ",";
    for (std::size_t k = base; k < base + fib; ++k) {
      auto it = sp.find(key + "#" + std::to_string(k));
      out.push_back(it == sp.end() ? Scalar(0) : it->second);
    }
  };
  auto loop = [&](const std::vector<std::size_t>& dims, const std::function<void(std::vector<std::size_t>)>& fn) {
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::vector<std::size_t> idx(dims.size());
      std::size_t r = flat;
      for (std::size_t s = dims.size(); s-- > 0;) {
        idx[s] = r % dims[s];
        r /= dims[s];
      }
      fn(idx);
    }
  };
  loop({n1}, [&](auto t) { emit("chain", t, n0, v0); });
  loop({n0, n0}, [&](auto t) { emit("n", t, n0, v0); });
  loop({n0, n1}, [&](auto t) { emit("o", t, n1, v1); });
  loop({n1, n0}, [&](auto t) { emit("p", t, n1, v1); });
  if (v1 > 0) loop({n0, n0, n0}, [&](auto t) { emit("q", t, n1, v1); });
  return out;
}

}  // namespace lz2::testing
