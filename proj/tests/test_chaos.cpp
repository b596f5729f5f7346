#include "doctest.h"

#include <set>

#include "fpchaos/chaos.hpp"
#include "fpchaos/error.hpp"
#include "fpchaos/kernel_io.hpp"
#include "fpchaos/partitions.hpp"
#include "oracles.hpp"

using namespace fpchaos;

namespace {

bool rel_close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

ChaosElement iterated_power(const GridKernel& f, int m) {
  const auto base = ChaosElement::integral(f);
  ChaosElement p = base;
  for (int i = 2; i <= m; ++i) p = poisson_multiply(p, base);
  return p;
}

}  // namespace

TEST_CASE("chaos element bookkeeping") {
  const Grid g{2, 1.0};
  auto x = ChaosElement::integral(GridKernel::indicator(1, g));
  CHECK(x.max_order() == 1);
  CHECK(x.has(1));
  CHECK_FALSE(x.has(0));
  x.accumulate(-1.0 * GridKernel::indicator(1, g));
  CHECK(x.empty());
  CHECK(x.kernel(2).arity() == 2);
  CHECK(trace(ChaosElement::scalar(Complex{3.0}, g)) == Complex{3.0});
  CHECK_THROWS_AS(x.accumulate(GridKernel::indicator(1, Grid{3, 1.0})), Error);
}

TEST_CASE("product of first-order integrals") {
  const Grid g{3, 0.5};
  const auto f = random_mirror_symmetric(1, g, 3);
  const auto h = random_mirror_symmetric(1, g, 4);
  const auto p = poisson_multiply(ChaosElement::integral(f), ChaosElement::integral(h));
  CHECK(p.max_order() == 2);
  CHECK(std::abs(trace(p) - arc_contraction(f, h, 1)[0]) < 1e-15);
  // Order 1: the pointwise product f h.
  const auto one = p.kernel(1);
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(std::abs(one[i] - f[i] * h[i]) < 1e-15);
  const auto w = wigner_multiply(ChaosElement::integral(f), ChaosElement::integral(h));
  CHECK_FALSE(w.has(1));
  CHECK(w.max_order() == 2);
}

TEST_CASE("truncated product keeps the low orders exactly") {
  const Grid g{2, 0.5};
  const auto a = ChaosElement::integral(random_mirror_symmetric(2, g, 1));
  const auto full = poisson_multiply(a, a);
  const auto cut = poisson_multiply(a, a, 1);
  CHECK(cut.max_order() <= 1);
  for (int order = 0; order <= 1; ++order) {
    const auto x = full.kernel(order);
    const auto y = cut.kernel(order);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == y[i]);
  }
}

TEST_CASE("adjoint of a product reverses the factors") {
  const Grid g{2, 0.5};
  const auto a = ChaosElement::integral(GridKernel(2, g, {Complex{1, 2}, Complex{0, 1}, Complex{3, 0}, Complex{-1, 1}}));
  const auto b = ChaosElement::integral(GridKernel(1, g, {Complex{0.5, -1}, Complex{2, 0.25}}));
  const auto lhs = adjoint(poisson_multiply(a, b));
  const auto rhs = poisson_multiply(adjoint(b), adjoint(a));
  REQUIRE(lhs.terms().size() == rhs.terms().size());
  for (const auto& [order, k] : lhs.terms()) {
    const auto other = rhs.kernel(order);
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(std::abs(k[i] - other[i]) < 1e-14);
  }
}

TEST_CASE("moment engines agree with exhaustive diagram sums") {
  const std::vector<std::pair<int, int>> cases{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  std::uint64_t seed = 500;
  for (const auto& [q, m] : cases) {
    const auto f = random_mirror_symmetric(q, Grid{2, 0.6}, seed++);
    for (Measure measure : {Measure::poisson, Measure::wigner}) {
      CAPTURE(q);
      CAPTURE(m);
      const auto ref = oracle::diagram_moment(f, m, measure == Measure::wigner);
      CHECK(rel_close(moment_product(f, m, measure), ref, 1e-11));
      CHECK(rel_close(moment_diagram(f, m, measure), ref, 1e-11));
      CHECK(rel_close(moment_trace_formula(f, m, measure), ref, 1e-11));
    }
  }
}

TEST_CASE("low-order moments") {
  const auto f = random_mirror_symmetric(2, Grid{3, 0.5}, 77);
  for (auto method : {MomentMethod::product, MomentMethod::diagram, MomentMethod::trace}) {
    CHECK(std::abs(moment(f, 1, method, Measure::poisson)) == 0.0);
    CHECK(rel_close(moment(f, 2, method, Measure::poisson), Complex{norm2(f)}, 1e-13));
  }
  CHECK_THROWS_AS(moment_product(f, 0, Measure::poisson), Error);
}

TEST_CASE("moments of mirror-symmetric kernels are real") {
  GridKernel f(2, Grid{2, 1.0}, {Complex{1, 0}, Complex{0, 1}, Complex{0, -1}, Complex{2, 0}});
  REQUIRE(is_mirror_symmetric(f));
  for (int m = 2; m <= 5; ++m) CHECK(std::abs(moment_product(f, m, Measure::poisson).imag()) < 1e-12);
}

TEST_CASE("engines reject kernels without mirror symmetry") {
  GridKernel f(2, Grid{2, 1.0}, {Complex{1}, Complex{2}, Complex{3}, Complex{4}});
  for (auto method : {MomentMethod::product, MomentMethod::diagram, MomentMethod::trace}) {
    try {
      moment(f, 3, method, Measure::poisson);
      FAIL("expected failure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_mirror_symmetric);
    }
  }
}

TEST_CASE("moments of 2(1_A1 + 1_A2)") {
  GridKernel f(1, Grid{2, 1.0}, {Complex{2.0}, Complex{2.0}});
  for (auto method : {MomentMethod::product, MomentMethod::diagram, MomentMethod::trace}) {
    CHECK(moment(f, 2, method, Measure::poisson) == Complex{8.0});
    CHECK(moment(f, 3, method, Measure::poisson) == Complex{16.0});
  }
  CHECK(free_poisson_moment(8.0, 3) == 8.0);
}

TEST_CASE("closed-form oracles") {
  const std::vector<double> poisson{0, 1, 1, 3, 6, 15};
  const std::vector<double> semi{0, 1, 0, 2, 0, 5};
  for (int m = 1; m <= 6; ++m) {
    CHECK(free_poisson_moment(1.0, m) == poisson[static_cast<std::size_t>(m - 1)]);
    CHECK(semicircular_moment(1.0, m) == semi[static_cast<std::size_t>(m - 1)]);
  }
  CHECK(free_poisson_moment(2.0, 4) == doctest::Approx(2.0 + 2 * 4.0));
  CHECK(semicircular_moment(3.0, 4) == doctest::Approx(18.0));
  CHECK_THROWS_AS(free_poisson_moment(0.0, 2), Error);
}

TEST_CASE("multiset words") {
  for (int len = 0; len <= 6; ++len) {
    for (int ones = 0; ones <= len; ++ones) {
      const auto ws = multiset_words(len, ones);
      CHECK(ws.size() == binomial(len, ones));
      std::set<std::vector<int>> distinct;
      for (const auto& w : ws) {
        CHECK(w.ones() == ones);
        distinct.insert(w.bits);
      }
      CHECK(distinct.size() == ws.size());
      for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i - 1].bits < ws[i].bits);
    }
  }
  CHECK(multiset_words(3, 4).empty());
}

TEST_CASE("index sets") {
  for (int q = 1; q <= 3; ++q) {
    for (int m = 2; m <= 4; ++m) {
      for (int i = 0; i <= m - 1; ++i) {
        for (const auto& sigma : multiset_words(m - 1, i)) {
          const auto s = index_sets(m, q, sigma);
          CHECK(s.d_defined == (q % 2 == 1));
          CHECK(s.D.size() + s.E.size() == s.B.size());
          if (!s.d_defined) CHECK(s.D.empty());
          for (const auto& r : s.A) {
            int running = 0;
            for (int p = 1; p <= m - 1; ++p) {
              const int rp = r[static_cast<std::size_t>(p - 1)];
              const int sp = sigma.bits[static_cast<std::size_t>(p - 1)];
              CHECK(rp >= sp);
              CHECK(rp <= p * q + running);
              CHECK(rp <= q);
              running += sp - 2 * rp;
            }
          }
          for (const auto& r : s.B) {
            int total = 0;
            for (int v : r) total += v;
            CHECK(2 * total == m * q + i);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(index_sets(3, 1, MultisetWord{{0}}), Error);
  CHECK_THROWS_AS(index_sets(3, 1, MultisetWord{{0, 2}}), Error);
}

TEST_CASE("nested contractions reach the predicted order") {
  const auto f = random_mirror_symmetric(2, Grid{2, 0.5}, 3);
  for (int i = 0; i <= 2; ++i)
    for (const auto& sigma : multiset_words(2, i))
      for (const auto& r : index_sets(3, 2, sigma).A) {
        int total = 0;
        for (int v : r) total += v;
        CHECK(nested_contraction(f, r, sigma).arity() == 3 * 2 + i - 2 * total);
      }
}

TEST_CASE("power expansion equals the iterated product at every order") {
  const std::vector<std::pair<int, int>> cases{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};
  std::uint64_t seed = 900;
  for (const auto& [q, m] : cases) {
    const auto f = random_mirror_symmetric(q, Grid{2, 0.7}, seed++);
    const auto lhs = power_expansion(f, m);
    const auto rhs = iterated_power(f, m);
    CHECK(lhs.max_order() == rhs.max_order());
    for (int order = 0; order <= m * q; ++order) {
      const auto a = lhs.kernel(order);
      const auto b = rhs.kernel(order);
      const double scale = std::max(1.0, b.max_abs());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("trace formula: complementary parity contributes nothing") {
  for (int q = 1; q <= 3; ++q) {
    for (int m = 2; m * q <= 9; ++m) {
      const auto f = random_mirror_symmetric(q, Grid{2, 0.5}, static_cast<std::uint64_t>(10 * q + m));
      const int parity = (q * m) % 2;
      CHECK(std::abs(trace_formula_sum(f, m, 1 - parity)) == 0.0);
      CHECK(rel_close(trace_formula_sum(f, m, parity), moment_product(f, m, Measure::poisson), 1e-12));
    }
  }
}

TEST_CASE("method and measure names") {
  CHECK(parse_method("trace") == MomentMethod::trace);
  CHECK(std::string(method_name(MomentMethod::diagram)) == "diagram");
  CHECK(parse_measure("wigner") == Measure::wigner);
  CHECK_THROWS_AS(parse_measure("gauss"), Error);
  CHECK_THROWS_AS(parse_method("magic"), Error);
}

TEST_CASE("product examples") {
  const Grid g{3, 0.5};
  const auto ind = GridKernel::indicator(1, g);
  const auto x = ChaosElement::integral(ind);
  const auto p = poisson_multiply(x, x);
  CHECK(trace(p) == Complex{1.5});
  const auto one = p.kernel(1);
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == ind[i]);
  const auto two = p.kernel(2);
  for (std::size_t i = 0; i < two.size(); ++i) CHECK(two[i] == Complex{1.0});
  CHECK(trace(x) == Complex{0.0});

  const auto f = random_mirror_symmetric(2, g, 5);
  const auto y = ChaosElement::integral(f);
  const auto scaled = poisson_multiply(ChaosElement::scalar(Complex{3.0}, g), y);
  const auto k = scaled.kernel(2);
  for (std::size_t i = 0; i < k.size(); ++i) CHECK(std::abs(k[i] - 3.0 * f[i]) < 1e-15);

  const auto left = poisson_multiply(poisson_multiply(y, y), y);
  const auto right = poisson_multiply(y, poisson_multiply(y, y));
  for (int order = 0; order <= 6; ++order) {
    const auto a = left.kernel(order);
    const auto b = right.kernel(order);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-13);
  }
  CHECK(std::abs(trace(wigner_multiply(y, ChaosElement::integral(adjoint(f)))) - Complex{norm2(f)}) < 1e-14);
}

TEST_CASE("indicator moments in both algebras") {
  const auto ind = GridKernel::indicator(1, Grid{4, 0.5});
  const double l = 2.0;
  const auto x = ChaosElement::integral(ind);
  ChaosElement w = x;
  for (int i = 2; i <= 4; ++i) w = wigner_multiply(w, x);
  CHECK(trace(w) == Complex{2 * l * l});
  CHECK(moment_product(ind, 3, Measure::poisson) == Complex{l});
  CHECK(moment_product(ind, 4, Measure::poisson) == Complex{2 * l * l + l});
  CHECK(moment_trace_formula(ind, 4) == Complex{2 * l * l + l});
  CHECK(moment_trace_formula(ind, 2) == Complex{l});
  const auto f = random_mirror_symmetric(1, Grid{3, 0.5}, 4);
  const auto pairings = f_sigma_integral(f, 4, SetPartition(4, {{1, 2}, {3, 4}})) +
                        f_sigma_integral(f, 4, SetPartition(4, {{1, 4}, {2, 3}}));
  CHECK(std::abs(moment_diagram(f, 4, Measure::wigner) - pairings) < 1e-14);
}

TEST_CASE("index set examples") {
  const auto s1 = index_sets(2, 1, MultisetWord{{0}});
  CHECK(s1.A == std::vector<IndexTuple>{{0}, {1}});
  CHECK(s1.B == std::vector<IndexTuple>{{1}});
  const auto s2 = index_sets(2, 2, MultisetWord{{0}});
  CHECK(s2.B == std::vector<IndexTuple>{{2}});
  for (const auto& r : index_sets(3, 2, MultisetWord{{1, 1}}).A) {
    CHECK(r[0] >= 1);
    CHECK(r[1] >= 1);
  }
}

TEST_CASE("power expansion at m = 2 is the product rule") {
  const auto f = random_mirror_symmetric(2, Grid{3, 0.5}, 12);
  const auto y = ChaosElement::integral(f);
  const auto a = power_expansion(f, 2);
  const auto b = poisson_multiply(y, y);
  for (int order = 0; order <= 4; ++order) {
    const auto x = a.kernel(order);
    const auto z = b.kernel(order);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(x[i] - z[i]) < 1e-15);
  }
  CHECK(trace(power_expansion(GridKernel::indicator(1, Grid{2, 1.0}), 3)) == Complex{2.0});
}
