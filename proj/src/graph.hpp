#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace uif {

// Simple graph on the ground set [n], n <= 64, adjacency kept as bit masks.
class GraphOnN {
 public:
  explicit GraphOnN(std::uint32_t n);

  static GraphOnN complete(std::uint32_t n);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const;

  // 1-based endpoints; loops are rejected, duplicate edges are no-ops.
  void add_edge(std::uint32_t u, std::uint32_t v);
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::uint64_t neighbors_mask(std::uint32_t v) const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  GraphOnN complement() const;

  // Exact |I_k(G)| by ordered enumeration with edge pruning; refuses
  // vertex counts above `cap`.
  BigInt count_independent_ksets(std::uint32_t k, std::uint32_t cap = 40) const;
  // Exact N_k(G), counted as independent sets of the complement.
  BigInt count_cliques(std::uint32_t k, std::uint32_t cap = 40) const;

 private:
  std::uint32_t n_;
  std::vector<std::uint64_t> adj_;
};

}  // namespace uif
