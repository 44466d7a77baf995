#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mincoal/graph.hpp"
#include "mincoal/partition.hpp"

namespace mincoal {

// Two disjoint nonempty vertex sets form a coalition when neither dominates
// on its own but their union does. Throws std::invalid_argument if x, y are
// not disjoint nonempty subsets of the vertices.
bool is_coalition(const Graph& g, VertexSet x, VertexSet y);

// Why a block is allowed to appear in a c-partition: it is a one-vertex
// dominating set, or it forms a coalition with the block at index `partner`
// (the smallest such index).
struct BlockJustification {
  enum class Kind { SingletonDominating, CoalitionWith };
  Kind kind = Kind::SingletonDominating;
  int partner = -1;

  bool operator==(const BlockJustification&) const = default;
};

struct CPartitionCertificate {
  SetPartition partition;
  std::vector<BlockJustification> justify;  // one entry per block

  // Re-checks every justification from scratch against g.
  bool validate(const Graph& g) const;
  nlohmann::json to_json() const;
};

struct CPartitionCheck {
  // Present iff the partition is a c-partition.
  std::optional<CPartitionCertificate> certificate;
  // Index of the first block with no justification; -1 when certificate is set.
  int failing_block = -1;
};

// Decides whether p is a c-partition of g and explains the outcome either
// way. p must partition the vertices of g.
CPartitionCheck check_c_partition(const Graph& g, const SetPartition& p);
std::optional<CPartitionCertificate> is_c_partition(const Graph& g, const SetPartition& p);

// Partition with blocks i and j merged (i != j). Indices refer to canonical
// block order; the result is canonical again.
SetPartition merge_blocks(const SetPartition& p, int i, int j);

// A c-partition is minimal when no proper coarsening of it is a c-partition.
// Throws std::invalid_argument if p is not a c-partition of g.
bool is_minimal_c_partition(const Graph& g, const SetPartition& p);

enum class Method { BruteForce, Formula, Reduction, Recognizer };
const char* method_name(Method m);

struct ReductionTrace {
  int stripped = 0;  // number of universal vertices removed
  Graph residual;

  bool operator==(const ReductionTrace&) const = default;
};

struct CminResult {
  // Number of blocks; nullopt when g admits no c-partition at all, or when
  // the search was cut short (see inconclusive).
  std::optional<int> value;
  Method method = Method::BruteForce;
  std::optional<CPartitionCertificate> certificate;
  std::optional<ReductionTrace> reduction;
  // Set when a fast-only dispatch would have needed exhaustive search.
  bool inconclusive = false;

  nlohmann::json to_json() const;
};

// Smallest number of blocks over all c-partitions, by exhaustive search in
// increasing block count. Always returns a validated certificate when a
// value is found.
CminResult cmin_bruteforce(const Graph& g);

// Largest number of blocks over all c-partitions (the coalition number), by
// exhaustive search in decreasing block count.
CminResult coalition_number_bruteforce(const Graph& g);

}  // namespace mincoal
