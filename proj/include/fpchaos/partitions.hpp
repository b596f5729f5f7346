#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fpchaos {

inline constexpr int kMaxPartitionGround = 12;  // Bell growth
inline constexpr int kMaxNcGround = 16;         // Catalan growth

/// A partition of {1,...,n}. Always stored canonically: blocks ordered by
/// least element, elements ascending inside each block.
class SetPartition {
 public:
  using Block = std::vector<int>;

  SetPartition() = default;
  /// Validates coverage/disjointness and canonicalizes the block order.
  SetPartition(int n, std::vector<Block> blocks);

  /// Builds from a restricted-growth labelling: labels[i] is the block of
  /// element i+1, blocks numbered in order of first appearance.
  static SetPartition from_labels(const std::vector<int>& labels);

  static SetPartition finest(int n);    // 0̂
  static SetPartition coarsest(int n);  // 1̂

  int ground_size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  /// labels()[i] = index of the block holding element i+1.
  std::vector<int> labels() const;

  std::size_t min_block_size() const;
  std::size_t max_block_size() const;
  bool has_singleton() const { return min_block_size() == 1; }

  /// JSON-style listing, e.g. [[1,4],[2,3]].
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

std::vector<SetPartition> enumerate_partitions(int n);
bool is_noncrossing(const SetPartition& p);
std::vector<SetPartition> enumerate_nc(int n);

/// π*: m consecutive blocks of size q on [mq].
SetPartition block_partition(int m, int q);

/// σ ∧ π* = 0̂, i.e. every block of sigma meets every block of pi_star in at
/// most one element.
bool meet_is_zero(const SetPartition& sigma, const SetPartition& pi_star);

/// Constraints applied during generation. Elements of the same `color`
/// (when colors are given) may not share a block, which is the meet-zero
/// condition against a partition whose blocks are the color classes.
struct PartitionFilter {
  std::vector<int> colors;
  std::size_t min_block = 1;
  std::size_t max_block = 0;  // 0 = unbounded
};

/// Streams every non-crossing partition of [n] (in restricted-growth label
/// form) satisfying the filter. Prunes during generation, so the cost is
/// driven by the surviving family rather than by Catalan(n).
void for_each_nc(int n, const PartitionFilter& filter,
                 const std::function<void(const std::vector<int>& labels)>& visit);

/// Same contract as for_each_nc but over all set partitions of [n].
void for_each_partition(int n, const PartitionFilter& filter,
                        const std::function<void(const std::vector<int>& labels)>& visit);

/// Filter encoding meet-zero against π*(m, q), optionally with block bounds.
PartitionFilter nc0_filter(int m, int q, std::size_t min_block = 1, std::size_t max_block = 0);

struct Nc0Classes {
  std::vector<SetPartition> pairings;      // NC⁰₂
  std::vector<SetPartition> large_blocks;  // NC⁰₍>2₎
  std::vector<SetPartition> at_least_two;  // NC⁰₍≥2₎
};
Nc0Classes nc0_classes(int m, int q);

/// Split of NC⁰₍>2₎ for odd q: `uniform` holds partitions whose blocks meet
/// every π*-block in 0, (q+1)/2 or q points, `mixed` holds the rest.
struct IntersectionSplit {
  std::vector<SetPartition> uniform;
  std::vector<SetPartition> mixed;
};
IntersectionSplit intersection_split(int m, int q);

struct RiordanTable {
  int m = 0;
  std::map<int, std::uint64_t> counts;  // j -> R_{m,j}, zero entries omitted
  std::uint64_t total() const;
  std::uint64_t at(int j) const;
};

/// No-singleton non-crossing partitions of [m] grouped by block count,
/// counted by exhaustive generation.
RiordanTable riordan(int m);

std::uint64_t binomial(int n, int k);
std::uint64_t catalan(int n);

}  // namespace fpchaos
