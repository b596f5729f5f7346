#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpchaos/kernels.hpp"

namespace fpchaos {

enum class Measure { poisson, wigner };

const char* measure_name(Measure m) noexcept;
Measure parse_measure(const std::string& name);

enum class MomentMethod { product, diagram, trace };

const char* method_name(MomentMethod m) noexcept;
MomentMethod parse_method(const std::string& name);

/// Finite sum Σ_q I_q(f_q) on a shared grid. The order-0 term is the scalar
/// part, stored as an arity-0 kernel. Exactly-zero kernels are never kept.
class ChaosElement {
 public:
  explicit ChaosElement(Grid grid) : grid_(grid) {}

  /// I_q(f).
  static ChaosElement integral(GridKernel f);
  static ChaosElement scalar(Complex c, Grid grid);

  const Grid& grid() const noexcept { return grid_; }
  const std::map<int, GridKernel>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  int max_order() const;

  /// Kernel of order q; the zero kernel if the term is absent.
  GridKernel kernel(int order) const;
  bool has(int order) const { return terms_.count(order) != 0; }

  /// Adds `f` into the term of order f.arity().
  void accumulate(const GridKernel& f);

 private:
  Grid grid_;
  std::map<int, GridKernel> terms_;
};

/// Product in the free Poisson algebra: arc and star terms. Terms of order
/// above `max_order` are dropped when it is given.
ChaosElement poisson_multiply(const ChaosElement& a, const ChaosElement& b,
                              std::optional<int> max_order = std::nullopt);
/// Product in the Wigner algebra: arc terms only.
ChaosElement wigner_multiply(const ChaosElement& a, const ChaosElement& b,
                             std::optional<int> max_order = std::nullopt);
ChaosElement multiply(const ChaosElement& a, const ChaosElement& b, Measure measure,
                      std::optional<int> max_order = std::nullopt);

/// Involution: every kernel replaced by its adjoint.
ChaosElement adjoint(const ChaosElement& a);

/// φ(a): the scalar part.
Complex trace(const ChaosElement& a);

/// φ(I_q(f)^m) by iterating the product formula.
Complex moment_product(const GridKernel& f, int m, Measure measure);

/// φ(I_q(f)^m) as a sum of f_σ integrals over NC⁰₍≥2₎ (Poisson) or NC⁰₂
/// (Wigner).
Complex moment_diagram(const GridKernel& f, int m, Measure measure);

/// A permutation of the multiset {1^i, 0^(m-1-i)}, as a 0/1 word.
struct MultisetWord {
  std::vector<int> bits;

  int ones() const;
  std::size_t length() const noexcept { return bits.size(); }
  friend bool operator==(const MultisetWord&, const MultisetWord&) = default;
};

/// All distinct words of the given length with `ones` ones, in
/// lexicographic order.
std::vector<MultisetWord> multiset_words(int length, int ones);

using IndexTuple = std::vector<int>;

/// The sets 𝔄, 𝔅, 𝔇, 𝔈 attached to (m, q, σ), for tuples (r_1..r_{m-1}).
struct IndexSets {
  int m = 0;
  int q = 0;
  MultisetWord sigma;
  std::vector<IndexTuple> A;
  std::vector<IndexTuple> B;
  std::vector<IndexTuple> D;
  std::vector<IndexTuple> E;
  /// False for even q, where 𝔇 is undefined; then D is empty and E == B.
  bool d_defined = false;
};

IndexSets index_sets(int m, int q, const MultisetWord& sigma);

/// Left-nested chain (..((f ⋆ f) ⋆ f)..) ⋆ f where step p is the arc
/// contraction of index r_p if sigma(p) = 0 and the star contraction of
/// index r_p if sigma(p) = 1.
GridKernel nested_contraction(const GridKernel& f, const IndexTuple& r, const MultisetWord& sigma);

/// I_q(f)^m expanded as a sum over words and admissible index tuples.
ChaosElement power_expansion(const GridKernel& f, int m);

/// Trace formula: contributions of words of length m-2 whose weight has the
/// given parity, closed by an arc contraction of index q.
Complex trace_formula_sum(const GridKernel& f, int m, int parity, Measure measure = Measure::poisson);

/// φ(I_q(f)^m) from the trace formula; only words whose weight has the
/// parity of qm are summed. For the Wigner measure only the all-zero word
/// is used.
Complex moment_trace_formula(const GridKernel& f, int m, Measure measure = Measure::poisson);

/// Dispatches to one of the three moment engines.
Complex moment(const GridKernel& f, int m, MomentMethod method, Measure measure);

/// φ(Z(λ)^m) = Σ_j λ^j R_{m,j}.
double free_poisson_moment(double lambda, int m);
/// m-th moment of the centered semicircle of variance λ.
double semicircular_moment(double lambda, int m);

}  // namespace fpchaos
