#pragma once

// Internal helpers shared by the verifiers: basis-tuple loops and violation
// collection.

#include <functional>
#include <string>
#include <vector>

#include "lz2/leib2.hpp"

namespace lz2::detail {

// Calls fn(idx) for every multi-index with idx[s] < dims[s], row-major.
inline void for_tuples(const std::vector<std::size_t>& dims,
                       const std::function<void(const std::vector<std::size_t>&)>& fn) {
  for (auto d : dims)
    if (d == 0) return;
  std::vector<std::size_t> idx(dims.size(), 0);
  while (true) {
    fn(idx);
    std::size_t s = dims.size();
    while (s > 0) {
      --s;
      if (++idx[s] < dims[s]) break;
      idx[s] = 0;
      if (s == 0) return;
    }
    if (dims.empty()) return;
  }
}

inline void note(Violations& out, const std::string& id, const std::vector<std::size_t>& at, const Vec& r) {
  if (!is_zero(r)) out.push_back({id, at, r});
}

inline Vec e(std::size_t n, std::size_t k) { return unit(n, k); }

// Sets f on every basis tuple of its inputs to fn(idx).
template <class Fn>
void fill(MultiMap& f, Fn&& fn) {
  const std::size_t n = f.in_size();
  std::size_t k = 0;
  for_tuples(f.in, [&](const std::vector<std::size_t>& idx) {
    Vec v = fn(idx);
    for (std::size_t o = 0; o < f.out; ++o) f.c[o * n + k] = v[o];
    ++k;
  });
}

}  // namespace lz2::detail
