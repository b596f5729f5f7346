#include "fpchaos/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fpchaos/error.hpp"

namespace fpchaos {

const char* measure_name(Measure m) noexcept { return m == Measure::poisson ? "poisson" : "wigner"; }

Measure parse_measure(const std::string& name) {
  if (name == "poisson") return Measure::poisson;
  if (name == "wigner") return Measure::wigner;
  fail(ErrorCode::invalid_argument, "unknown measure '" + name + "'");
}

const char* method_name(MomentMethod m) noexcept {
  switch (m) {
    case MomentMethod::product: return "product";
    case MomentMethod::diagram: return "diagram";
    case MomentMethod::trace: return "trace";
  }
  return "unknown";
}

MomentMethod parse_method(const std::string& name) {
  if (name == "product") return MomentMethod::product;
  if (name == "diagram") return MomentMethod::diagram;
  if (name == "trace") return MomentMethod::trace;
  fail(ErrorCode::invalid_argument, "unknown moment method '" + name + "'");
}

ChaosElement ChaosElement::integral(GridKernel f) {
  ChaosElement x(f.grid());
  x.accumulate(f);
  return x;
}

ChaosElement ChaosElement::scalar(Complex c, Grid grid) {
  ChaosElement x(grid);
  x.accumulate(GridKernel::scalar(c, grid));
  return x;
}

int ChaosElement::max_order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

GridKernel ChaosElement::kernel(int order) const {
  auto it = terms_.find(order);
  return it == terms_.end() ? GridKernel(order, grid_) : it->second;
}

void ChaosElement::accumulate(const GridKernel& f) {
  require(f.grid() == grid_, ErrorCode::grid_mismatch, "chaos element: kernel on a different grid");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(f.arity(), f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

ChaosElement multiply(const ChaosElement& a, const ChaosElement& b, Measure measure,
                      std::optional<int> max_order) {
  require(a.grid() == b.grid(), ErrorCode::grid_mismatch, "chaos product: elements on different grids");
  ChaosElement out(a.grid());
  const auto keep = [&](int order) { return !max_order || order <= *max_order; };
  for (const auto& [p, f] : a.terms()) {
    for (const auto& [r, g] : b.terms()) {
      const int top = std::min(p, r);
      for (int k = 0; k <= top; ++k)
        if (keep(p + r - 2 * k)) out.accumulate(arc_contraction(f, g, k));
      if (measure == Measure::wigner) continue;
      for (int k = 1; k <= top; ++k)
        if (keep(p + r - 2 * k + 1)) out.accumulate(star_contraction(f, g, k));
    }
  }
  return out;
}

ChaosElement poisson_multiply(const ChaosElement& a, const ChaosElement& b, std::optional<int> max_order) {
  return multiply(a, b, Measure::poisson, max_order);
}

ChaosElement wigner_multiply(const ChaosElement& a, const ChaosElement& b, std::optional<int> max_order) {
  return multiply(a, b, Measure::wigner, max_order);
}

ChaosElement adjoint(const ChaosElement& a) {
  ChaosElement out(a.grid());
  for (const auto& [order, f] : a.terms()) out.accumulate(adjoint(f));
  return out;
}

Complex trace(const ChaosElement& a) {
  auto it = a.terms().find(0);
  return it == a.terms().end() ? Complex{0.0} : it->second[0];
}

Complex moment_product(const GridKernel& f, int m, Measure measure) {
  require(m >= 1, ErrorCode::invalid_argument, "moment order must be >= 1");
  require_mirror_symmetric(f, "product-formula moment");
  const int q = f.arity();
  const auto base = ChaosElement::integral(f);
  ChaosElement power = base;
  // Every further factor lowers the order by at most q, so terms of order
  // above (m - p) q after p factors cannot reach the scalar part.
  for (int p = 2; p <= m; ++p) power = multiply(power, base, measure, (m - p) * q);
  return trace(power);
}

Complex moment_diagram(const GridKernel& f, int m, Measure measure) {
  require(m >= 1, ErrorCode::invalid_argument, "moment order must be >= 1");
  require(f.arity() >= 1, ErrorCode::invalid_argument, "diagram formula needs q >= 1");
  require_mirror_symmetric(f, "diagram-formula moment");
  const auto filter = nc0_filter(m, f.arity(), 2, measure == Measure::wigner ? 2 : 0);
  Complex sum{0.0};
  for_each_nc(m * f.arity(), filter, [&](const std::vector<int>& labels) {
    sum += f_sigma_integral(f, m, std::span<const int>(labels));
  });
  return sum;
}

int MultisetWord::ones() const { return std::accumulate(bits.begin(), bits.end(), 0); }

std::vector<MultisetWord> multiset_words(int length, int ones) {
  require(length >= 0, ErrorCode::invalid_argument, "word length must be >= 0");
  std::vector<MultisetWord> out;
  if (ones < 0 || ones > length) return out;
  MultisetWord w;
  w.bits.assign(static_cast<std::size_t>(length - ones), 0);
  w.bits.insert(w.bits.end(), static_cast<std::size_t>(ones), 1);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.bits.begin(), w.bits.end()));
  return out;
}

IndexSets index_sets(int m, int q, const MultisetWord& sigma) {
  require(m >= 1 && q >= 1, ErrorCode::invalid_argument, "index sets need m >= 1, q >= 1");
  require(sigma.length() == static_cast<std::size_t>(m - 1), ErrorCode::invalid_argument,
          "index sets: word length " + std::to_string(sigma.length()) + ", expected m-1=" +
              std::to_string(m - 1));
  for (int b : sigma.bits)
    require(b == 0 || b == 1, ErrorCode::invalid_argument, "index sets: word must be 0/1 valued");

  IndexSets s;
  s.m = m;
  s.q = q;
  s.sigma = sigma;
  s.d_defined = (q % 2 == 1);
  const int len = m - 1;
  const int weight = sigma.ones();
  const int half = (q + 1) / 2;

  IndexTuple r(static_cast<std::size_t>(len), 0);
  // Odometer over {0..q}^len in lexicographic order.
  while (true) {
    bool in_a = true;
    int running = 0;  // Σ_{k<p} (σ(k) - 2 r_k)
    for (int p = 1; p <= len && in_a; ++p) {
      const int rp = r[static_cast<std::size_t>(p - 1)];
      const int sp = sigma.bits[static_cast<std::size_t>(p - 1)];
      if (rp < sp || rp > p * q + running) in_a = false;
      running += sp - 2 * rp;
    }
    if (in_a) {
      s.A.push_back(r);
      const int total = std::accumulate(r.begin(), r.end(), 0);
      if (2 * total == m * q + weight) {
        s.B.push_back(r);
        bool in_d = s.d_defined;
        for (int j = 0; j < len && in_d; ++j) {
          const int rj = r[static_cast<std::size_t>(j)];
          const bool zero_word = sigma.bits[static_cast<std::size_t>(j)] == 0;
          const bool end_value = (rj == 0 || rj == q);
          if (!end_value && rj != half) in_d = false;
          if (end_value != zero_word) in_d = false;
          if ((rj == half) != !zero_word) in_d = false;
        }
        (in_d ? s.D : s.E).push_back(r);
      }
    }
    int pos = len - 1;
    while (pos >= 0 && r[static_cast<std::size_t>(pos)] == q) r[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++r[static_cast<std::size_t>(pos)];
  }
  return s;
}

GridKernel nested_contraction(const GridKernel& f, const IndexTuple& r, const MultisetWord& sigma) {
  require(r.size() == sigma.length(), ErrorCode::invalid_argument,
          "nested contraction: tuple and word lengths differ");
  GridKernel g = f;
  for (std::size_t p = 0; p < r.size(); ++p)
    g = sigma.bits[p] ? star_contraction(g, f, r[p]) : arc_contraction(g, f, r[p]);
  return g;
}

ChaosElement power_expansion(const GridKernel& f, int m) {
  require(m >= 2, ErrorCode::invalid_argument, "power expansion needs m >= 2");
  require_mirror_symmetric(f, "power expansion");
  ChaosElement out(f.grid());
  for (int i = 0; i <= m - 1; ++i)
    for (const auto& sigma : multiset_words(m - 1, i))
      for (const auto& r : index_sets(m, f.arity(), sigma).A) out.accumulate(nested_contraction(f, r, sigma));
  return out;
}

namespace {

// Contribution of one word of length m-2: tuples admissible for m-1 factors
// whose nested kernel has order exactly q, each closed by ⌢_q f.
Complex trace_formula_word(const GridKernel& f, int m, const MultisetWord& sigma) {
  const int q = f.arity();
  Complex sum{0.0};
  for (const auto& r : index_sets(m - 1, q, sigma).A) {
    const int total = std::accumulate(r.begin(), r.end(), 0);
    if ((m - 1) * q + sigma.ones() - 2 * total != q) continue;
    sum += arc_contraction(nested_contraction(f, r, sigma), f, q)[0];
  }
  return sum;
}

void check_trace_formula_args(const GridKernel& f, int m) {
  require(m >= 2, ErrorCode::invalid_argument, "trace formula needs m >= 2");
  require(f.arity() >= 1, ErrorCode::invalid_argument, "trace formula needs q >= 1");
  require_mirror_symmetric(f, "trace-formula moment");
}

}  // namespace

Complex trace_formula_sum(const GridKernel& f, int m, int parity, Measure measure) {
  check_trace_formula_args(f, m);
  Complex sum{0.0};
  const int top = measure == Measure::wigner ? 0 : m - 2;
  for (int w = parity % 2; w <= top; w += 2)
    for (const auto& sigma : multiset_words(m - 2, w)) sum += trace_formula_word(f, m, sigma);
  return sum;
}

Complex moment_trace_formula(const GridKernel& f, int m, Measure measure) {
  check_trace_formula_args(f, m);
  const int parity = (f.arity() * m) % 2;
  if (measure == Measure::wigner) {
    if (parity == 1) return Complex{0.0};
    return trace_formula_word(f, m, multiset_words(m - 2, 0).front());
  }
  Complex sum{0.0};
  for (int i = 0; i <= (m - 2) / 2; ++i)
    for (const auto& sigma : multiset_words(m - 2, 2 * i + parity)) sum += trace_formula_word(f, m, sigma);
  return sum;
}

Complex moment(const GridKernel& f, int m, MomentMethod method, Measure measure) {
  switch (method) {
    case MomentMethod::product: return moment_product(f, m, measure);
    case MomentMethod::diagram: return moment_diagram(f, m, measure);
    case MomentMethod::trace:
      if (m == 1) {
        require_mirror_symmetric(f, "trace-formula moment");
        return Complex{0.0};
      }
      return moment_trace_formula(f, m, measure);
  }
  fail(ErrorCode::invalid_argument, "unknown moment method");
}

double free_poisson_moment(double lambda, int m) {
  require(lambda > 0.0, ErrorCode::invalid_argument, "free Poisson rate must be positive");
  const auto table = riordan(m);
  double sum = 0.0;
  for (const auto& [j, count] : table.counts) sum += static_cast<double>(count) * std::pow(lambda, j);
  return sum;
}

double semicircular_moment(double lambda, int m) {
  require(lambda > 0.0, ErrorCode::invalid_argument, "semicircle variance must be positive");
  require(m >= 1, ErrorCode::invalid_argument, "moment order must be >= 1");
  require(m <= 60, ErrorCode::size_limit, "semicircular moment: m exceeds 60");
  if (m % 2 == 1) return 0.0;
  return static_cast<double>(catalan(m / 2)) * std::pow(lambda, m / 2);
}

}  // namespace fpchaos
