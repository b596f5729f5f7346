#include "fpchaos/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "fpchaos/error.hpp"

namespace fpchaos {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_same_grid(const GridKernel& f, const GridKernel& g, const char* what) {
  require(f.grid() == g.grid(), ErrorCode::grid_mismatch,
          std::string(what) + ": kernels live on different grids");
}

// rev[s] is the flat index of the digit string of s (base `bins`, `len`
// digits) read backwards.
std::vector<std::size_t> reversal_table(int bins, int len) {
  const std::size_t count = ipow(static_cast<std::size_t>(bins), len);
  std::vector<std::size_t> rev(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t x = s, r = 0;
    for (int d = 0; d < len; ++d) {
      r = r * static_cast<std::size_t>(bins) + x % static_cast<std::size_t>(bins);
      x /= static_cast<std::size_t>(bins);
    }
    rev[s] = r;
  }
  return rev;
}

}  // namespace

std::size_t checked_entry_count(int arity, int bins) {
  require(arity >= 0, ErrorCode::invalid_argument, "kernel arity must be >= 0");
  require(bins >= 1, ErrorCode::invalid_argument, "kernel bins must be >= 1");
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) {
    n *= static_cast<std::size_t>(bins);
    require(n <= kMaxKernelEntries, ErrorCode::size_limit,
            "kernel with arity " + std::to_string(arity) + " on " + std::to_string(bins) +
                " bins exceeds " + std::to_string(kMaxKernelEntries) + " entries");
  }
  return n;
}

GridKernel::GridKernel(int arity, Grid grid) : arity_(arity), grid_(grid) {
  require(grid.cell_width > 0.0 && std::isfinite(grid.cell_width), ErrorCode::invalid_argument,
          "cell width must be positive and finite");
  values_.assign(checked_entry_count(arity, grid.bins), Complex{0.0});
}

GridKernel::GridKernel(int arity, Grid grid, std::vector<Complex> values) : GridKernel(arity, grid) {
  require(values.size() == values_.size(), ErrorCode::invalid_argument,
          "kernel value table has " + std::to_string(values.size()) + " entries, expected " +
              std::to_string(values_.size()));
  values_ = std::move(values);
}

GridKernel GridKernel::scalar(Complex value, Grid grid) { return GridKernel(0, grid, {value}); }

GridKernel GridKernel::indicator(int arity, Grid grid) {
  GridKernel k(arity, grid);
  std::fill(k.values_.begin(), k.values_.end(), Complex{1.0});
  return k;
}

std::size_t GridKernel::flat_index(std::span<const int> index) const {
  require(index.size() == static_cast<std::size_t>(arity_), ErrorCode::invalid_argument,
          "kernel index has wrong length");
  std::size_t flat = 0;
  for (int i : index) {
    require(i >= 0 && i < grid_.bins, ErrorCode::invalid_argument, "kernel index out of range");
    flat = flat * static_cast<std::size_t>(grid_.bins) + static_cast<std::size_t>(i);
  }
  return flat;
}

double GridKernel::cell_volume() const { return std::pow(grid_.cell_width, arity_); }

double GridKernel::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool GridKernel::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& v) { return v == Complex{0.0}; });
}

GridKernel& GridKernel::operator+=(const GridKernel& other) {
  require_same_grid(*this, other, "kernel addition");
  require(arity_ == other.arity_, ErrorCode::invalid_argument, "kernel addition: arity mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GridKernel& GridKernel::operator-=(const GridKernel& other) {
  require_same_grid(*this, other, "kernel subtraction");
  require(arity_ == other.arity_, ErrorCode::invalid_argument, "kernel subtraction: arity mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GridKernel& GridKernel::operator*=(Complex c) {
  for (auto& v : values_) v *= c;
  return *this;
}

GridKernel operator+(GridKernel a, const GridKernel& b) { return a += b; }
GridKernel operator-(GridKernel a, const GridKernel& b) { return a -= b; }
GridKernel operator*(Complex c, GridKernel a) { return a *= c; }

GridKernel adjoint(const GridKernel& f) {
  GridKernel out(f.arity(), f.grid());
  const auto rev = reversal_table(f.bins(), f.arity());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::conj(f[rev[i]]);
  return out;
}

bool is_mirror_symmetric(const GridKernel& f, double tol) {
  require(tol >= 0.0, ErrorCode::invalid_argument, "mirror symmetry tolerance must be >= 0");
  const auto rev = reversal_table(f.bins(), f.arity());
  const double bound = tol * std::max(1.0, f.max_abs());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::abs(f[i] - std::conj(f[rev[i]])) > bound) return false;
  return true;
}

void require_mirror_symmetric(const GridKernel& f, const char* what) {
  require(is_mirror_symmetric(f), ErrorCode::not_mirror_symmetric,
          std::string(what) + ": kernel is not mirror symmetric");
}

GridKernel abs(const GridKernel& f) {
  GridKernel out(f.arity(), f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

GridKernel tensor_product(const GridKernel& f, const GridKernel& g) { return arc_contraction(f, g, 0); }

GridKernel arc_contraction(const GridKernel& f, const GridKernel& g, int k) {
  require_same_grid(f, g, "arc contraction");
  require(k >= 0 && k <= std::min(f.arity(), g.arity()), ErrorCode::invalid_argument,
          "arc contraction index " + std::to_string(k) + " out of range for arities " +
              std::to_string(f.arity()) + ", " + std::to_string(g.arity()));
  const int bins = f.bins();
  GridKernel out(f.arity() + g.arity() - 2 * k, f.grid());
  const std::size_t glued = ipow(static_cast<std::size_t>(bins), k);
  const std::size_t left = ipow(static_cast<std::size_t>(bins), f.arity() - k);
  const std::size_t right = ipow(static_cast<std::size_t>(bins), g.arity() - k);
  const auto rev = reversal_table(bins, k);
  const double weight = std::pow(f.cell_width(), k);

  for (std::size_t t = 0; t < left; ++t) {
    Complex* row = &out[t * right];
    for (std::size_t s = 0; s < glued; ++s) {
      const Complex a = f[t * glued + rev[s]];
      if (a == Complex{0.0}) continue;
      const Complex* grow = &g[s * right];
      for (std::size_t u = 0; u < right; ++u) row[u] += a * grow[u];
    }
    for (std::size_t u = 0; u < right; ++u) row[u] *= weight;
  }
  return out;
}

GridKernel star_contraction(const GridKernel& f, const GridKernel& g, int k) {
  require_same_grid(f, g, "star contraction");
  require(k >= 1 && k <= std::min(f.arity(), g.arity()), ErrorCode::invalid_argument,
          "star contraction index " + std::to_string(k) + " out of range for arities " +
              std::to_string(f.arity()) + ", " + std::to_string(g.arity()));
  const int bins = f.bins();
  const auto nb = static_cast<std::size_t>(bins);
  GridKernel out(f.arity() + g.arity() - 2 * k + 1, f.grid());
  const std::size_t glued = ipow(nb, k - 1);
  const std::size_t left = ipow(nb, f.arity() - k);
  const std::size_t right = ipow(nb, g.arity() - k);
  const auto rev = reversal_table(bins, k - 1);
  const double weight = std::pow(f.cell_width(), k - 1);

  for (std::size_t t = 0; t < left; ++t) {
    for (std::size_t x = 0; x < nb; ++x) {
      Complex* row = &out[(t * nb + x) * right];
      for (std::size_t s = 0; s < glued; ++s) {
        const Complex a = f[(t * nb + x) * glued + rev[s]];
        if (a == Complex{0.0}) continue;
        const Complex* grow = &g[(s * nb + x) * right];
        for (std::size_t u = 0; u < right; ++u) row[u] += a * grow[u];
      }
      for (std::size_t u = 0; u < right; ++u) row[u] *= weight;
    }
  }
  return out;
}

double norm2(const GridKernel& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += std::norm(v);
  return s * f.cell_volume();
}

Complex inner(const GridKernel& f, const GridKernel& g) {
  require_same_grid(f, g, "inner product");
  require(f.arity() == g.arity(), ErrorCode::invalid_argument, "inner product: arity mismatch");
  Complex s{0.0};
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
  return s * f.cell_volume();
}

namespace {

// Depth-first sum over one bin per block. Factor j is multiplied in as soon
// as the last block it touches has been assigned; a zero partial product
// prunes the whole subtree.
struct SigmaIntegrator {
  const GridKernel& f;
  int m;
  int q;
  std::span<const int> labels;
  std::vector<int> assignment;
  std::vector<std::vector<int>> ready;  // ready[b] = factors completed by block b

  Complex factor(int j) const {
    std::size_t flat = 0;
    for (int i = 0; i < q; ++i)
      flat = flat * static_cast<std::size_t>(f.bins()) +
             static_cast<std::size_t>(assignment[static_cast<std::size_t>(labels[static_cast<std::size_t>(j * q + i)])]);
    return f[flat];
  }

  Complex run(std::size_t block, Complex partial) {
    if (block == assignment.size()) return partial;
    Complex sum{0.0};
    for (int v = 0; v < f.bins(); ++v) {
      assignment[block] = v;
      Complex p = partial;
      for (int j : ready[block]) {
        p *= factor(j);
        if (p == Complex{0.0}) break;
      }
      if (p == Complex{0.0}) continue;
      sum += run(block + 1, p);
    }
    return sum;
  }
};

}  // namespace

Complex f_sigma_integral(const GridKernel& f, int m, std::span<const int> labels) {
  const int q = f.arity();
  require(m >= 1 && q >= 1, ErrorCode::invalid_argument, "f_sigma integral needs m, q >= 1");
  require(labels.size() == static_cast<std::size_t>(m * q), ErrorCode::invalid_argument,
          "f_sigma integral: partition ground set is " + std::to_string(labels.size()) +
              ", expected mq=" + std::to_string(m * q));
  const int blocks = *std::max_element(labels.begin(), labels.end()) + 1;
  SigmaIntegrator it{f, m, q, labels, std::vector<int>(static_cast<std::size_t>(blocks), 0),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(blocks))};
  for (int j = 0; j < m; ++j) {
    int last = 0;
    for (int i = 0; i < q; ++i) last = std::max(last, labels[static_cast<std::size_t>(j * q + i)]);
    it.ready[static_cast<std::size_t>(last)].push_back(j);
  }
  return it.run(0, Complex{1.0}) * std::pow(f.cell_width(), blocks);
}

Complex f_sigma_integral(const GridKernel& f, int m, const SetPartition& sigma) {
  const auto labels = sigma.labels();
  return f_sigma_integral(f, m, std::span<const int>(labels));
}

TamednessReport tamedness_report(std::span<const GridKernel> fs, int m, double threshold) {
  require(!fs.empty(), ErrorCode::invalid_argument, "tamedness report needs at least one kernel");
  const int q = fs.front().arity();
  require(q >= 1 && m >= 2, ErrorCode::invalid_argument, "tamedness report needs q >= 1, m >= 2");
  for (const auto& f : fs)
    require(f.arity() == q, ErrorCode::invalid_argument, "tamedness report: mixed arities");
  require(m * q <= kMaxPartitionGround, ErrorCode::size_limit,
          "tamedness report: mq=" + std::to_string(m * q) + " exceeds " +
              std::to_string(kMaxPartitionGround));

  std::vector<GridKernel> moduli;
  moduli.reserve(fs.size());
  for (const auto& f : fs) moduli.push_back(abs(f));

  TamednessReport report;
  report.q = q;
  report.m = m;
  report.threshold = threshold;
  report.scope = "bounded over the supplied sequence at m=" + std::to_string(m) + " only";
  PartitionFilter filter = nc0_filter(m, q);
  for_each_partition(m * q, filter, [&](const std::vector<int>& labels) {
    TamednessEntry e;
    e.sigma = SetPartition::from_labels(labels);
    for (const auto& g : moduli) {
      const double v = f_sigma_integral(g, m, std::span<const int>(labels)).real();
      e.values.push_back(v);
      e.max = std::max(e.max, v);
    }
    e.bounded = e.max <= threshold;
    report.bounded = report.bounded && e.bounded;
    report.entries.push_back(std::move(e));
  });
  return report;
}

}  // namespace fpchaos
