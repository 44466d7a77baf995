#include "mincoal/coalition.hpp"

#include <stdexcept>

#include "mincoal/domination.hpp"

namespace mincoal {

bool is_coalition(const Graph& g, VertexSet x, VertexSet y) {
  if (x.empty() || y.empty()) throw std::invalid_argument("coalition sets must be nonempty");
  if (x.intersects(y)) throw std::invalid_argument("coalition sets must be disjoint");
  return !is_dominating_set(g, x) && !is_dominating_set(g, y) && is_dominating_set(g, x | y);
}

namespace {

void check_partition_of(const Graph& g, const SetPartition& p) {
  if (p.ground_size != g.order())
    throw std::invalid_argument("partition ground set does not match the graph order");
}

}  // namespace

CPartitionCheck check_c_partition(const Graph& g, const SetPartition& p) {
  check_partition_of(g, p);
  const int k = p.block_count();
  const std::uint64_t full = g.vertices().bits;
  std::vector<std::uint64_t> covered(k);
  for (int i = 0; i < k; ++i) covered[i] = dominated_vertices(g, p.blocks[i]).bits;

  CPartitionCheck out;
  std::vector<BlockJustification> justify(k);
  for (int i = 0; i < k; ++i) {
    if (covered[i] == full) {
      if (p.blocks[i].size() != 1) {
        out.failing_block = i;  // dominating but not a singleton: no role for it
        return out;
      }
      justify[i] = {BlockJustification::Kind::SingletonDominating, -1};
      continue;
    }
    int partner = -1;
    for (int j = 0; j < k; ++j) {
      if (j == i || covered[j] == full) continue;
      if ((covered[i] | covered[j]) == full) {
        partner = j;
        break;
      }
    }
    if (partner < 0) {
      out.failing_block = i;
      return out;
    }
    justify[i] = {BlockJustification::Kind::CoalitionWith, partner};
  }
  out.certificate = CPartitionCertificate{p, std::move(justify)};
  return out;
}

std::optional<CPartitionCertificate> is_c_partition(const Graph& g, const SetPartition& p) {
  return check_c_partition(g, p).certificate;
}

bool CPartitionCertificate::validate(const Graph& g) const {
  if (partition.ground_size != g.order()) return false;
  const int k = partition.block_count();
  if (static_cast<int>(justify.size()) != k) return false;
  // SetPartition invariants are enforced on construction; re-establish them
  // anyway since certificates may arrive from outside.
  try {
    SetPartition::of(partition.ground_size, partition.blocks);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (int i = 0; i < k; ++i) {
    switch (justify[i].kind) {
      case BlockJustification::Kind::SingletonDominating:
        if (partition.blocks[i].size() != 1 || !is_dominating_set(g, partition.blocks[i]))
          return false;
        break;
      case BlockJustification::Kind::CoalitionWith: {
        const int j = justify[i].partner;
        if (j < 0 || j >= k || j == i) return false;
        if (!is_coalition(g, partition.blocks[i], partition.blocks[j])) return false;
        break;
      }
    }
  }
  return true;
}

nlohmann::json CPartitionCertificate::to_json() const {
  nlohmann::json blocks = nlohmann::json::array();
  for (const VertexSet& b : partition.blocks) blocks.push_back(b.to_string());
  nlohmann::json just = nlohmann::json::array();
  for (const BlockJustification& j : justify) {
    if (j.kind == BlockJustification::Kind::SingletonDominating)
      just.push_back({{"type", "singleton"}});
    else
      just.push_back({{"type", "coalition"}, {"with", j.partner}});
  }
  return {{"order", partition.block_count()}, {"blocks", blocks}, {"justify", just}};
}

SetPartition merge_blocks(const SetPartition& p, int i, int j) {
  const int k = p.block_count();
  if (i < 0 || i >= k || j < 0 || j >= k)
    throw std::invalid_argument("merge: block index out of range");
  if (i == j) throw std::invalid_argument("merge: block indices must differ");
  std::vector<VertexSet> blocks;
  blocks.reserve(k - 1);
  for (int b = 0; b < k; ++b) {
    if (b == j) continue;
    blocks.push_back(b == i ? p.blocks[i] | p.blocks[j] : p.blocks[b]);
  }
  return SetPartition::of(p.ground_size, std::move(blocks));
}

bool is_minimal_c_partition(const Graph& g, const SetPartition& p) {
  if (!is_c_partition(g, p))
    throw std::invalid_argument("minimality is only defined for c-partitions");
  CoarseningStream stream(p);
  while (auto coarser = stream.next()) {
    if (coarser->block_count() == p.block_count()) continue;  // p itself
    if (is_c_partition(g, *coarser)) return false;
  }
  return true;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::BruteForce: return "brute-force";
    case Method::Formula: return "formula";
    case Method::Reduction: return "reduction";
    case Method::Recognizer: return "recognizer";
  }
  return "unknown";
}

nlohmann::json CminResult::to_json() const {
  nlohmann::json out;
  out["value"] = value ? nlohmann::json(*value) : nlohmann::json(nullptr);
  out["method"] = method_name(method);
  if (certificate) out["certificate"] = certificate->to_json();
  if (reduction)
    out["reduction"] = {{"stripped", reduction->stripped},
                        {"residual", graph6_encode(reduction->residual)}};
  if (inconclusive) out["inconclusive"] = true;
  return out;
}

CminResult cmin_bruteforce(const Graph& g) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    PartitionStream stream(n, k);
    while (auto p = stream.next()) {
      if (auto cert = is_c_partition(g, *p)) {
        // First success at the smallest feasible block count: any proper
        // coarsening has fewer blocks, and no c-partition with fewer blocks
        // exists, so this one is minimal.
        return {k, Method::BruteForce, std::move(cert), std::nullopt, false};
      }
    }
  }
  return {std::nullopt, Method::BruteForce, std::nullopt, std::nullopt, false};
}

CminResult coalition_number_bruteforce(const Graph& g) {
  const int n = g.order();
  for (int k = n; k >= 1; --k) {
    PartitionStream stream(n, k);
    while (auto p = stream.next()) {
      if (auto cert = is_c_partition(g, *p))
        return {k, Method::BruteForce, std::move(cert), std::nullopt, false};
    }
  }
  return {std::nullopt, Method::BruteForce, std::nullopt, std::nullopt, false};
}

}  // namespace mincoal
