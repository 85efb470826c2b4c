#pragma once

#include <utility>
#include <vector>

#include "topkvote/types.hpp"

namespace topkvote {

// A strict partial order over candidate ids 0..m-1, kept transitively
// closed. Construction rejects cycles.
class PartialOrder {
 public:
  explicit PartialOrder(int m);  // the empty order

  // Builds the transitive closure of the given pairs (x preferred over y).
  // Throws cyclic_order when the closure would contain x > x,
  // index_out_of_range for ids outside [0, m).
  static PartialOrder from_pairs(int m,
                                 const std::vector<std::pair<int, int>>& pairs);

  // P(A_1, ..., A_t): every candidate of an earlier block is preferred over
  // every candidate of a later block; candidates outside all blocks are
  // unconstrained. Throws overlapping_blocks.
  static PartialOrder partitioned(int m,
                                  const std::vector<std::vector<int>>& blocks);

  int size() const { return m_; }
  bool prefers(int x, int y) const { return above_[idx(x, y)] != 0; }

  // All pairs (x, y) with x preferred over y, sorted.
  std::vector<std::pair<int, int>> pairs() const;
  std::size_t pair_count() const;

  bool is_total() const;

  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

  // The order with every pair flipped.
  PartialOrder reversed() const;

  // Closure of the union with another order over the same candidates.
  PartialOrder union_with(const PartialOrder& other) const;

  bool operator==(const PartialOrder&) const = default;

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * m_ + y;
  }
  void close_and_check();

  int m_;
  std::vector<std::uint8_t> above_;  // above_[x*m + y] == 1 iff x > y
};

// True when `order` (a permutation of 0..m-1, best first) extends P.
bool order_extends(const PartialOrder& p, const std::vector<int>& order);

// Deterministic linear order: blocks concatenated, ascending ids inside
// each block. Throws overlapping_blocks on duplicates.
std::vector<int> ordered_concat(const std::vector<std::vector<int>>& blocks);

// Same, but requires the blocks to partition 0..m-1 exactly
// (incomplete_cover otherwise).
std::vector<int> block_linearization(int m,
                                     const std::vector<std::vector<int>>& blocks);

}  // namespace topkvote
