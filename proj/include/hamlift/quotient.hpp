#pragma once

#include <vector>

namespace hamlift {

/// A partition of {0, ..., n-1} into blocks. Blocks are numbered by ascending
/// smallest member and each block lists its vertices in ascending order.
struct QuotientMap {
  std::vector<int> block_of;             // vertex -> block id
  std::vector<std::vector<int>> blocks;  // block id -> sorted members

  int vertex_count() const { return static_cast<int>(block_of.size()); }
  int block_count() const { return static_cast<int>(blocks.size()); }

  /// Builds the map from raw block assignments, renumbering blocks by
  /// smallest member. Throws std::invalid_argument if not a partition.
  static QuotientMap from_assignment(const std::vector<int>& raw_block_of);
};

}  // namespace hamlift
