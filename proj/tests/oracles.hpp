#pragma once

// Brute-force reference routines. They share nothing with the library code
// beyond the kernel storage layout.

#include <cmath>
#include <complex>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "fpchaos/kernels.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Labels = std::vector<int>;
using Tuple = std::vector<int>;

inline std::size_t flat(const Tuple& idx, int bins) {
  std::size_t f = 0;
  for (int i : idx) f = f * static_cast<std::size_t>(bins) + static_cast<std::size_t>(i);
  return f;
}

inline Complex get(const fpchaos::GridKernel& f, const Tuple& idx) {
  return f.values()[flat(idx, f.bins())];
}

// Calls visit on every tuple in {0..bins-1}^len.
inline void for_each_tuple(int len, int bins, const std::function<void(const Tuple&)>& visit) {
  Tuple t(static_cast<std::size_t>(len), 0);
  while (true) {
    visit(t);
    int p = len - 1;
    while (p >= 0 && t[static_cast<std::size_t>(p)] == bins - 1) t[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) return;
    ++t[static_cast<std::size_t>(p)];
  }
}

inline Tuple concat(std::initializer_list<Tuple> parts) {
  Tuple out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Tuple reversed(Tuple t) { return Tuple(t.rbegin(), t.rend()); }

// (f ⌢_k g)(t, u) = ∫ f(t, s_1..s_k) g(s_k..s_1, u) ds.
inline fpchaos::GridKernel arc(const fpchaos::GridKernel& f, const fpchaos::GridKernel& g, int k) {
  const int p = f.arity();
  const int r = g.arity();
  const int B = f.bins();
  const double h = f.cell_width();
  fpchaos::GridKernel out(p + r - 2 * k, f.grid());
  for_each_tuple(p - k, B, [&](const Tuple& t) {
    for_each_tuple(r - k, B, [&](const Tuple& u) {
      Complex sum = 0.0;
      for_each_tuple(k, B, [&](const Tuple& s) { sum += get(f, concat({t, s})) * get(g, concat({reversed(s), u})); });
      out.values()[flat(concat({t, u}), B)] = std::pow(h, k) * sum;
    });
  });
  return out;
}

// (f ⋆_k^{k-1} g)(t, x, u) = ∫ f(t, x, s_1..s_{k-1}) g(s_{k-1}..s_1, x, u) ds.
inline fpchaos::GridKernel star(const fpchaos::GridKernel& f, const fpchaos::GridKernel& g, int k) {
  const int p = f.arity();
  const int r = g.arity();
  const int B = f.bins();
  const double h = f.cell_width();
  fpchaos::GridKernel out(p + r - 2 * k + 1, f.grid());
  for_each_tuple(p - k, B, [&](const Tuple& t) {
    for (int x = 0; x < B; ++x) {
      for_each_tuple(r - k, B, [&](const Tuple& u) {
        Complex sum = 0.0;
        for_each_tuple(k - 1, B, [&](const Tuple& s) {
          sum += get(f, concat({t, {x}, s})) * get(g, concat({reversed(s), {x}, u}));
        });
        out.values()[flat(concat({t, {x}, u}), B)] = std::pow(h, k - 1) * sum;
      });
    }
  });
  return out;
}

// All set partitions of [n] as restricted-growth label vectors, built by
// inserting element n into every block of each partition of [n-1].
inline std::vector<Labels> all_partitions(int n) {
  std::vector<Labels> parts{Labels{}};
  for (int e = 0; e < n; ++e) {
    std::vector<Labels> next;
    for (const auto& p : parts) {
      const int blocks = p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
      for (int b = 0; b <= blocks; ++b) {
        Labels q = p;
        q.push_back(b);
        next.push_back(q);
      }
    }
    parts = std::move(next);
  }
  return parts;
}

inline bool crossing(const Labels& l) {
  const int n = static_cast<int>(l.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (l[a] == l[c] && l[b] == l[d] && l[a] != l[b]) return true;
  return false;
}

inline std::vector<int> block_sizes(const Labels& l) {
  std::vector<int> sizes;
  for (int v : l) {
    if (static_cast<int>(sizes.size()) <= v) sizes.resize(static_cast<std::size_t>(v) + 1, 0);
    ++sizes[static_cast<std::size_t>(v)];
  }
  return sizes;
}

// No block holds two variables of the same kernel copy.
inline bool meet_zero(const Labels& l, int q) {
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (l[i] == l[j] && static_cast<int>(i) / q == static_cast<int>(j) / q) return false;
  return true;
}

// Diagram class membership: non-crossing, meet zero, block sizes in [lo, hi]
// (hi = 0 for no upper bound).
inline bool in_class(const Labels& l, int q, int lo, int hi) {
  if (crossing(l) || !meet_zero(l, q)) return false;
  for (int s : block_sizes(l))
    if (s < lo || (hi > 0 && s > hi)) return false;
  return true;
}

// ∫ f_σ: one cell per block of σ, variable i takes the cell of its block.
inline Complex f_sigma(const fpchaos::GridKernel& f, int m, const Labels& l) {
  const int q = f.arity();
  const int blocks = static_cast<int>(block_sizes(l).size());
  Complex sum = 0.0;
  for_each_tuple(blocks, f.bins(), [&](const Tuple& cells) {
    Complex prod = 1.0;
    for (int c = 0; c < m && prod != 0.0; ++c) {
      Tuple idx;
      for (int i = 0; i < q; ++i) idx.push_back(cells[static_cast<std::size_t>(l[static_cast<std::size_t>(c * q + i)])]);
      prod *= get(f, idx);
    }
    sum += prod;
  });
  return std::pow(f.cell_width(), blocks) * sum;
}

// φ(I_q(f)^m) by exhaustive filtering of all set partitions of [mq].
inline Complex diagram_moment(const fpchaos::GridKernel& f, int m, bool wigner) {
  Complex sum = 0.0;
  for (const auto& l : all_partitions(m * f.arity()))
    if (in_class(l, f.arity(), 2, wigner ? 2 : 0)) sum += f_sigma(f, m, l);
  return sum;
}

inline std::uint64_t factorial_binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(std::llround(r));
}

inline std::uint64_t catalan(int n) { return factorial_binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

// Riordan numbers by the recurrence (n+1) R_n = (n-1)(2 R_{n-1} + 3 R_{n-2}).
inline std::vector<std::uint64_t> riordan_sequence(int up_to) {
  std::vector<std::uint64_t> r{1, 0};
  for (int n = 2; n <= up_to; ++n)
    r.push_back(static_cast<std::uint64_t>(n - 1) * (2 * r[static_cast<std::size_t>(n - 1)] + 3 * r[static_cast<std::size_t>(n - 2)]) /
                static_cast<std::uint64_t>(n + 1));
  return r;
}

// R_{m,j} = C(m, j) C(m-j-1, j-1) / (m-j+1): no-singleton NC partitions of
// [m] with j blocks.
inline std::uint64_t riordan_entry(int m, int j) {
  if (j < 1 || m - j - 1 < j - 1) return 0;
  return factorial_binomial(m, j) * factorial_binomial(m - j - 1, j - 1) / static_cast<std::uint64_t>(m - j + 1);
}

}  // namespace oracle
