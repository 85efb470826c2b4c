#include "topkvote/partial_order.hpp"

#include <algorithm>

namespace topkvote {

PartialOrder::PartialOrder(int m) : m_(m) {
  if (m < 1) fail(Errc::index_out_of_range, "candidate count must be positive");
  above_.assign(static_cast<std::size_t>(m) * m, 0);
}

void PartialOrder::close_and_check() {
  // Floyd-Warshall style reachability; m stays small in practice.
  for (int k = 0; k < m_; ++k) {
    for (int x = 0; x < m_; ++x) {
      if (!above_[idx(x, k)]) continue;
      const std::uint8_t* row_k = &above_[idx(k, 0)];
      std::uint8_t* row_x = &above_[idx(x, 0)];
      for (int y = 0; y < m_; ++y) row_x[y] |= row_k[y];
    }
  }
  for (int x = 0; x < m_; ++x) {
    if (above_[idx(x, x)])
      fail(Errc::cyclic_order, "pairs contain a cycle through candidate " +
                                   std::to_string(x));
  }
}

PartialOrder PartialOrder::from_pairs(
    int m, const std::vector<std::pair<int, int>>& pairs) {
  PartialOrder p(m);
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= m || y < 0 || y >= m)
      fail(Errc::index_out_of_range, "pair index outside candidate range");
    if (x == y) fail(Errc::cyclic_order, "reflexive pair");
    p.above_[p.idx(x, y)] = 1;
  }
  p.close_and_check();
  return p;
}

PartialOrder PartialOrder::partitioned(
    int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<char> seen(m, 0);
  for (const auto& block : blocks) {
    for (int c : block) {
      if (c < 0 || c >= m)
        fail(Errc::index_out_of_range, "block entry outside candidate range");
      if (seen[c]) fail(Errc::overlapping_blocks, "candidate in two blocks");
      seen[c] = 1;
    }
  }
  PartialOrder p(m);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (int x : blocks[i])
        for (int y : blocks[j]) p.above_[p.idx(x, y)] = 1;
    }
  }
  // Cross-block pairs are already transitively closed and acyclic.
  return p;
}

std::vector<std::pair<int, int>> PartialOrder::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if (above_[idx(x, y)]) out.emplace_back(x, y);
  return out;
}

std::size_t PartialOrder::pair_count() const {
  std::size_t n = 0;
  for (auto b : above_) n += b;
  return n;
}

bool PartialOrder::is_total() const {
  return pair_count() == static_cast<std::size_t>(m_) * (m_ - 1) / 2;
}

std::vector<int> PartialOrder::maximal_elements() const {
  std::vector<int> out;
  for (int y = 0; y < m_; ++y) {
    bool covered = false;
    for (int x = 0; x < m_ && !covered; ++x) covered = above_[idx(x, y)];
    if (!covered) out.push_back(y);
  }
  return out;
}

std::vector<int> PartialOrder::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < m_; ++x) {
    bool covers = false;
    for (int y = 0; y < m_ && !covers; ++y) covers = above_[idx(x, y)];
    if (!covers) out.push_back(x);
  }
  return out;
}

PartialOrder PartialOrder::reversed() const {
  PartialOrder p(m_);
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y) p.above_[p.idx(y, x)] = above_[idx(x, y)];
  return p;
}

PartialOrder PartialOrder::union_with(const PartialOrder& other) const {
  if (other.m_ != m_)
    fail(Errc::validation_error, "orders over different candidate counts");
  PartialOrder p(m_);
  for (std::size_t i = 0; i < above_.size(); ++i)
    p.above_[i] = above_[i] | other.above_[i];
  p.close_and_check();
  return p;
}

bool order_extends(const PartialOrder& p, const std::vector<int>& order) {
  const int m = p.size();
  if (static_cast<int>(order.size()) != m) return false;
  std::vector<int> pos(m, -1);
  for (int i = 0; i < m; ++i) {
    int c = order[i];
    if (c < 0 || c >= m || pos[c] != -1) return false;
    pos[c] = i;
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (p.prefers(x, y) && pos[x] > pos[y]) return false;
  return true;
}

std::vector<int> ordered_concat(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> out;
  for (const auto& block : blocks) {
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    out.insert(out.end(), sorted.begin(), sorted.end());
  }
  std::vector<int> check = out;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    fail(Errc::overlapping_blocks, "candidate in two blocks");
  return out;
}

std::vector<int> block_linearization(
    int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> out = ordered_concat(blocks);
  if (static_cast<int>(out.size()) != m)
    fail(Errc::incomplete_cover, "blocks do not partition the candidate set");
  for (int c : out) {
    if (c < 0 || c >= m)
      fail(Errc::incomplete_cover, "block entry outside candidate range");
  }
  return out;
}

}  // namespace topkvote
