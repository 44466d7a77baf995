#include "mincoal/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mincoal {

SetPartition SetPartition::of(int ground_size, std::vector<VertexSet> blocks) {
  if (ground_size < 1 || ground_size > kMaxOrder)
    throw std::invalid_argument("partition ground size out of range");
  const VertexSet full = VertexSet::full(ground_size);
  VertexSet seen;
  for (const VertexSet& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition block is empty");
    if (!b.subset_of(full)) throw std::invalid_argument("partition block exceeds ground set");
    if (seen.intersects(b)) throw std::invalid_argument("partition blocks overlap");
    seen |= b;
  }
  if (seen != full) throw std::invalid_argument("partition blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });
  SetPartition p;
  p.ground_size = ground_size;
  p.blocks = std::move(blocks);
  return p;
}

SetPartition SetPartition::singletons(int ground_size) {
  std::vector<VertexSet> blocks;
  blocks.reserve(ground_size);
  for (int v = 0; v < ground_size; ++v) blocks.push_back(VertexSet::single(v));
  return of(ground_size, std::move(blocks));
}

int SetPartition::block_of(int v) const {
  if (v < 0 || v >= ground_size) throw std::invalid_argument("vertex outside the ground set");
  for (int i = 0; i < block_count(); ++i)
    if (blocks[i].contains(v)) return i;
  throw std::logic_error("partition does not cover vertex");
}

std::string SetPartition::to_text() const {
  std::string out;
  for (const VertexSet& b : blocks) {
    if (!out.empty()) out += '|';
    out += b.to_string();
  }
  return out;
}

SetPartition SetPartition::from_text(int ground_size, const std::string& text) {
  std::vector<VertexSet> blocks;
  std::stringstream whole(text);
  std::string part;
  while (std::getline(whole, part, '|')) {
    VertexSet b;
    std::stringstream ss(part);
    int v;
    while (ss >> v) {
      if (v < 0 || v >= ground_size)
        throw std::invalid_argument("partition text: vertex " + std::to_string(v) +
                                    " outside ground set of size " + std::to_string(ground_size));
      b.add(v);
    }
    if (!ss.eof())
      throw std::invalid_argument("partition text: expected integers, got \"" + part + "\"");
    blocks.push_back(b);
  }
  return of(ground_size, std::move(blocks));
}

PartitionStream::PartitionStream(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("partition stream: order out of range");
  rgs_.assign(n, 0);
  max_.assign(n, 0);
}

PartitionStream::PartitionStream(int n, int block_count) : PartitionStream(n) {
  if (block_count < 1 || block_count > n)
    throw std::invalid_argument("partition stream: block count out of range");
  k_ = block_count;
}

// Lex-least restricted growth string with maximum exactly k_-1:
// zeros, then a forced climb 1, 2, ..., k_-1 on the last k_-1 positions.
bool PartitionStream::first_with_k() {
  std::fill(rgs_.begin(), rgs_.end(), 0);
  for (int t = 1; t < k_; ++t) rgs_[n_ - k_ + t] = t;
  for (int i = 1; i < n_; ++i) max_[i] = std::max(max_[i - 1], rgs_[i]);
  return true;
}

bool PartitionStream::advance() {
  for (int i = n_ - 1; i >= 1; --i) {
    const int prefix_max = max_[i - 1];
    const int c = rgs_[i] + 1;
    if (c > prefix_max + 1) continue;
    if (k_ == 0) {
      rgs_[i] = c;
      max_[i] = std::max(prefix_max, c);
      for (int j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        max_[j] = max_[j - 1];
      }
      return true;
    }
    // Exactly-k mode: cap values at k_-1 and keep the suffix able to reach it.
    if (c > k_ - 1) continue;
    const int new_max = std::max(prefix_max, c);
    const int deficit = k_ - 1 - new_max;
    if (deficit > n_ - 1 - i) continue;
    rgs_[i] = c;
    for (int j = i + 1; j < n_; ++j) rgs_[j] = 0;
    for (int t = 0; t < deficit; ++t) rgs_[n_ - deficit + t] = new_max + 1 + t;
    for (int j = i; j < n_; ++j) max_[j] = std::max(max_[j - 1], rgs_[j]);
    return true;
  }
  return false;
}

std::optional<SetPartition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (k_ > 0) first_with_k();
    // k_ == 0: the all-zeros string (single block) is already in place.
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  const int nblocks = max_[n_ - 1] + 1;
  std::vector<VertexSet> blocks(nblocks);
  for (int v = 0; v < n_; ++v) blocks[rgs_[v]].add(v);
  return SetPartition::of(n_, std::move(blocks));
}

CoarseningStream::CoarseningStream(const SetPartition& base)
    : base_(base), groups_(base.block_count()) {}

std::optional<SetPartition> CoarseningStream::next() {
  auto grouping = groups_.next();
  if (!grouping) return std::nullopt;
  std::vector<VertexSet> merged(grouping->block_count());
  for (int b = 0; b < base_.block_count(); ++b) merged[grouping->block_of(b)] |= base_.blocks[b];
  return SetPartition::of(base_.ground_size, std::move(merged));
}

bool is_refinement(const SetPartition& coarse, const SetPartition& fine) {
  if (coarse.ground_size != fine.ground_size)
    throw std::invalid_argument("refinement check: partitions of different ground sets");
  for (const VertexSet& b : fine.blocks)
    if (!b.subset_of(coarse.blocks[coarse.block_of(b.lowest())])) return false;
  return true;
}

}  // namespace mincoal
