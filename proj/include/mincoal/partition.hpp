#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincoal/graph.hpp"

namespace mincoal {

// A partition of the ground set {0, ..., ground_size-1} into nonempty,
// pairwise disjoint blocks. Canonical form: blocks sorted by their smallest
// element, so equality is structural equality.
struct SetPartition {
  int ground_size = 0;
  std::vector<VertexSet> blocks;

  // Validates (nonempty disjoint blocks covering the ground set) and
  // canonicalizes. Throws std::invalid_argument otherwise.
  static SetPartition of(int ground_size, std::vector<VertexSet> blocks);
  static SetPartition singletons(int ground_size);

  int block_count() const { return static_cast<int>(blocks.size()); }
  // Index of the block containing v (v must be in the ground set).
  int block_of(int v) const;

  // Text form "0 1|2 3": blocks joined by '|', vertices by ' '.
  std::string to_text() const;
  static SetPartition from_text(int ground_size, const std::string& text);

  bool operator==(const SetPartition&) const = default;
};

// Streams every partition of {0..n-1}, or every partition with exactly
// `block_count` blocks, in restricted-growth-string order. n >= 1.
class PartitionStream {
 public:
  explicit PartitionStream(int n);
  PartitionStream(int n, int block_count);  // 1 <= block_count <= n

  // Next partition, or nullopt when exhausted.
  std::optional<SetPartition> next();

 private:
  bool advance();
  bool first_with_k();

  int n_;
  int k_ = 0;  // 0 = all block counts
  bool done_ = false;
  bool started_ = false;
  std::vector<int> rgs_;
  std::vector<int> max_;  // max_[i] = max(rgs_[0..i])
};

// Streams every coarsening of a partition (partitions obtainable by merging
// blocks of `base`), including `base` itself.
class CoarseningStream {
 public:
  explicit CoarseningStream(const SetPartition& base);
  std::optional<SetPartition> next();

 private:
  SetPartition base_;
  PartitionStream groups_;
};

// True iff `fine` refines `coarse`: every block of `fine` is contained in a
// block of `coarse`. Both must partition the same ground set.
bool is_refinement(const SetPartition& coarse, const SetPartition& fine);

}  // namespace mincoal
