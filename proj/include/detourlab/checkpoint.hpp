#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "detourlab/search.hpp"

namespace detourlab {

/// Resumable state of a search. Binary layout is described in
/// docs/checkpoint-format.md.
struct Checkpoint {
  static constexpr std::uint32_t kVersion = 1;

  std::uint64_t spec_hash = 0;
  std::uint32_t unit_order = 0;
  std::uint64_t units_total = 0;
  /// Ascending.
  std::vector<std::uint64_t> completed_units;
  /// Counters summed over the completed units only.
  std::map<int, OrderCount> counts;
  /// Hits of the completed units, tagged with their unit id.
  std::vector<std::pair<std::uint64_t, SearchHit>> hits;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

std::string serialize_checkpoint(const Checkpoint& cp);
/// Throws Error(kParseError) on a malformed or truncated buffer.
Checkpoint parse_checkpoint(const std::string& bytes);

/// Writes to a temporary sibling file and renames it into place.
void checkpoint_save(const std::string& path, const Checkpoint& cp);
/// Throws kCheckpointMismatch if the stored hash differs from `expected_hash`.
Checkpoint checkpoint_resume(const std::string& path, std::uint64_t expected_hash);

}  // namespace detourlab
