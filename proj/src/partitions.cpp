#include "fpchaos/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "fpchaos/error.hpp"

namespace fpchaos {

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  require(n >= 1, ErrorCode::invalid_argument, "partition ground set must be non-empty");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& b : blocks_) {
    require(!b.empty(), ErrorCode::invalid_argument, "partition blocks must be non-empty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      require(x >= 1 && x <= n, ErrorCode::invalid_argument,
              "partition element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
      require(!seen[x], ErrorCode::invalid_argument,
              "partition element " + std::to_string(x) + " appears twice");
      seen[x] = 1;
    }
  }
  require(std::all_of(seen.begin() + 1, seen.end(), [](char c) { return c != 0; }),
          ErrorCode::invalid_argument, "partition blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  require(!labels.empty(), ErrorCode::invalid_argument, "empty label vector");
  int count = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<Block> blocks(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require(labels[i] >= 0, ErrorCode::invalid_argument, "negative block label");
    blocks[static_cast<std::size_t>(labels[i])].push_back(static_cast<int>(i) + 1);
  }
  return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

SetPartition SetPartition::finest(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::coarsest(int n) {
  Block all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return SetPartition(n, {all});
}

std::vector<int> SetPartition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int x : blocks_[b]) out[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
  return out;
}

std::size_t SetPartition::min_block_size() const {
  std::size_t best = blocks_.empty() ? 0 : blocks_.front().size();
  for (const auto& b : blocks_) best = std::min(best, b.size());
  return best;
}

std::size_t SetPartition::max_block_size() const {
  std::size_t best = 0;
  for (const auto& b : blocks_) best = std::max(best, b.size());
  return best;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << ',';
    os << '[';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) os << ',';
      os << blocks_[b][i];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

void check_ground(int n, int limit, const char* what) {
  require(n >= 1, ErrorCode::invalid_argument, std::string(what) + ": n must be >= 1");
  require(n <= limit, ErrorCode::size_limit,
          std::string(what) + ": n=" + std::to_string(n) + " exceeds limit " +
              std::to_string(limit));
}

// Shared state for the two generators. Block colors are tracked as bitmasks,
// which caps the number of distinct colors at 64.
struct Generator {
  int n;
  const PartitionFilter& filter;
  const std::function<void(const std::vector<int>&)>& visit;
  std::vector<int> labels;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> masks;

  Generator(int n_, const PartitionFilter& f, const std::function<void(const std::vector<int>&)>& v)
      : n(n_), filter(f), visit(v), labels(static_cast<std::size_t>(n_), -1) {
    if (!filter.colors.empty()) {
      require(filter.colors.size() == static_cast<std::size_t>(n), ErrorCode::invalid_argument,
              "partition filter colors must cover the ground set");
      for (int c : filter.colors)
        require(c >= 0 && c < 64, ErrorCode::invalid_argument, "partition filter color out of range");
    }
  }

  std::uint64_t color_bit(int i) const {
    return filter.colors.empty() ? 0 : (std::uint64_t{1} << filter.colors[static_cast<std::size_t>(i)]);
  }

  bool can_join(std::size_t block, int i) const {
    if (filter.max_block != 0 && sizes[block] >= filter.max_block) return false;
    return (masks[block] & color_bit(i)) == 0;
  }

  bool sizes_ok(const std::vector<int>& blocks) const {
    for (int b : blocks)
      if (sizes[static_cast<std::size_t>(b)] < filter.min_block) return false;
    return true;
  }

  void open_block(int i) {
    labels[static_cast<std::size_t>(i)] = static_cast<int>(sizes.size());
    sizes.push_back(1);
    masks.push_back(color_bit(i));
  }

  void close_block() {
    sizes.pop_back();
    masks.pop_back();
  }

  void join(std::size_t block, int i) {
    labels[static_cast<std::size_t>(i)] = static_cast<int>(block);
    ++sizes[block];
    masks[block] |= color_bit(i);
  }

  void leave(std::size_t block, int i) {
    --sizes[block];
    masks[block] &= ~color_bit(i);
  }

  // Non-crossing: `open` is the stack of blocks that may still grow. Joining
  // a block closes every block opened after it.
  void nc(int i, std::vector<int>& open) {
    if (i == n) {
      if (sizes_ok(open)) visit(labels);
      return;
    }
    for (std::size_t s = open.size(); s-- > 0;) {
      std::size_t b = static_cast<std::size_t>(open[s]);
      if (!can_join(b, i)) continue;
      std::vector<int> closed(open.begin() + static_cast<std::ptrdiff_t>(s) + 1, open.end());
      if (!sizes_ok(closed)) continue;
      std::vector<int> next(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(s) + 1);
      join(b, i);
      nc(i + 1, next);
      leave(b, i);
    }
    open_block(i);
    open.push_back(labels[static_cast<std::size_t>(i)]);
    nc(i + 1, open);
    open.pop_back();
    close_block();
  }

  void all(int i) {
    if (i == n) {
      for (std::size_t b = 0; b < sizes.size(); ++b)
        if (sizes[b] < filter.min_block) return;
      visit(labels);
      return;
    }
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      if (!can_join(b, i)) continue;
      join(b, i);
      all(i + 1);
      leave(b, i);
    }
    open_block(i);
    all(i + 1);
    close_block();
  }
};

template <typename ForEach>
std::vector<SetPartition> collect(int n, const PartitionFilter& filter, ForEach for_each) {
  std::vector<SetPartition> out;
  for_each(n, filter, [&](const std::vector<int>& labels) {
    out.push_back(SetPartition::from_labels(labels));
  });
  return out;
}

}  // namespace

void for_each_nc(int n, const PartitionFilter& filter,
                 const std::function<void(const std::vector<int>&)>& visit) {
  check_ground(n, kMaxNcGround, "non-crossing enumeration");
  Generator gen(n, filter, visit);
  std::vector<int> open;
  gen.nc(0, open);
}

void for_each_partition(int n, const PartitionFilter& filter,
                        const std::function<void(const std::vector<int>&)>& visit) {
  check_ground(n, kMaxPartitionGround, "partition enumeration");
  Generator gen(n, filter, visit);
  gen.all(0);
}

std::vector<SetPartition> enumerate_partitions(int n) {
  return collect(n, PartitionFilter{}, for_each_partition);
}

bool is_noncrossing(const SetPartition& p) {
  const auto label = p.labels();
  const int n = p.ground_size();
  // Four-point test on positions 0..n-1.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (label[a] == label[b]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (label[c] != label[a]) continue;
        for (int d = c + 1; d < n; ++d)
          if (label[d] == label[b]) return false;
      }
    }
  return true;
}

std::vector<SetPartition> enumerate_nc(int n) { return collect(n, PartitionFilter{}, for_each_nc); }

SetPartition block_partition(int m, int q) {
  require(m >= 1 && q >= 1, ErrorCode::invalid_argument, "block partition needs m, q >= 1");
  std::vector<SetPartition::Block> blocks;
  for (int j = 0; j < m; ++j) {
    SetPartition::Block b;
    for (int i = 1; i <= q; ++i) b.push_back(j * q + i);
    blocks.push_back(std::move(b));
  }
  return SetPartition(m * q, std::move(blocks));
}

bool meet_is_zero(const SetPartition& sigma, const SetPartition& pi_star) {
  require(sigma.ground_size() == pi_star.ground_size(), ErrorCode::invalid_argument,
          "meet test needs partitions of the same ground set");
  const auto owner = pi_star.labels();
  for (const auto& b : sigma.blocks()) {
    std::vector<char> hit(pi_star.block_count(), 0);
    for (int x : b) {
      auto& h = hit[static_cast<std::size_t>(owner[static_cast<std::size_t>(x - 1)])];
      if (h) return false;
      h = 1;
    }
  }
  return true;
}

PartitionFilter nc0_filter(int m, int q, std::size_t min_block, std::size_t max_block) {
  require(m >= 1 && q >= 1, ErrorCode::invalid_argument, "NC0 classes need m, q >= 1");
  require(m * q <= kMaxNcGround, ErrorCode::size_limit,
          "mq=" + std::to_string(m * q) + " exceeds limit " + std::to_string(kMaxNcGround));
  PartitionFilter f;
  f.colors.resize(static_cast<std::size_t>(m * q));
  for (int i = 0; i < m * q; ++i) f.colors[static_cast<std::size_t>(i)] = i / q;
  f.min_block = min_block;
  f.max_block = max_block;
  return f;
}

Nc0Classes nc0_classes(int m, int q) {
  Nc0Classes out;
  out.pairings = collect(m * q, nc0_filter(m, q, 2, 2), for_each_nc);
  out.large_blocks = collect(m * q, nc0_filter(m, q, 3, 0), for_each_nc);
  out.at_least_two = collect(m * q, nc0_filter(m, q, 2, 0), for_each_nc);
  return out;
}

IntersectionSplit intersection_split(int m, int q) {
  require(q % 2 == 1, ErrorCode::domain, "intersection split is defined for odd q only");
  IntersectionSplit out;
  const auto pi_star = block_partition(m, q);
  const auto half = static_cast<std::size_t>((q + 1) / 2);
  const auto full = static_cast<std::size_t>(q);
  for (auto& tau : nc0_classes(m, q).large_blocks) {
    bool uniform = true;
    for (const auto& b : tau.blocks()) {
      for (const auto& p : pi_star.blocks()) {
        std::vector<int> common;
        std::set_intersection(b.begin(), b.end(), p.begin(), p.end(), std::back_inserter(common));
        const auto k = common.size();
        if (k != 0 && k != half && k != full) uniform = false;
      }
    }
    (uniform ? out.uniform : out.mixed).push_back(std::move(tau));
  }
  return out;
}

std::uint64_t RiordanTable::total() const {
  std::uint64_t s = 0;
  for (const auto& [j, c] : counts) s += c;
  return s;
}

std::uint64_t RiordanTable::at(int j) const {
  auto it = counts.find(j);
  return it == counts.end() ? 0 : it->second;
}

RiordanTable riordan(int m) {
  require(m >= 1, ErrorCode::invalid_argument, "riordan: m must be >= 1");
  require(m <= 14, ErrorCode::size_limit, "riordan: m=" + std::to_string(m) + " exceeds limit 14");
  RiordanTable t;
  t.m = m;
  PartitionFilter no_singletons;
  no_singletons.min_block = 2;
  for_each_nc(m, no_singletons, [&](const std::vector<int>& labels) {
    ++t.counts[*std::max_element(labels.begin(), labels.end()) + 1];
  });
  return t;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

}  // namespace fpchaos
