#include "graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "ksubset.hpp"

namespace uif {

GraphOnN::GraphOnN(std::uint32_t n) : n_(n), adj_(n, 0) {
  if (n == 0 || n > kMaxGroundSet)
    throw std::invalid_argument("GraphOnN: need 1 <= n <= 64");
}

GraphOnN GraphOnN::complete(std::uint32_t n) {
  GraphOnN g(n);
  for (std::uint32_t v = 1; v <= n; ++v)
    g.adj_[v - 1] = full_mask(n) & ~(1ull << (v - 1));
  return g;
}

std::uint64_t GraphOnN::edge_count() const {
  std::uint64_t twice = 0;
  for (auto m : adj_) twice += static_cast<std::uint64_t>(std::popcount(m));
  return twice / 2;
}

void GraphOnN::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == 0 || v == 0 || u > n_ || v > n_)
    throw std::invalid_argument("add_edge: vertex outside [1,n]");
  if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
  adj_[u - 1] |= 1ull << (v - 1);
  adj_[v - 1] |= 1ull << (u - 1);
}

bool GraphOnN::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u == 0 || v == 0 || u > n_ || v > n_) return false;
  return (adj_[u - 1] >> (v - 1)) & 1;
}

std::uint64_t GraphOnN::neighbors_mask(std::uint32_t v) const {
  if (v == 0 || v > n_) throw std::invalid_argument("vertex outside [1,n]");
  return adj_[v - 1];
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> GraphOnN::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 1; u <= n_; ++u) {
    std::uint64_t higher = adj_[u - 1] >> u;  // neighbors > u, shifted
    while (higher) {
      auto off = static_cast<std::uint32_t>(std::countr_zero(higher));
      out.emplace_back(u, u + 1 + off);
      higher &= higher - 1;
    }
  }
  return out;
}

GraphOnN GraphOnN::complement() const {
  GraphOnN g(n_);
  for (std::uint32_t v = 1; v <= n_; ++v)
    g.adj_[v - 1] = full_mask(n_) & ~adj_[v - 1] & ~(1ull << (v - 1));
  return g;
}

namespace {

struct IndepCounter {
  const std::vector<std::uint64_t>& adj;
  std::uint64_t total = 0;

  bool edgeless(std::uint64_t avail) const {
    std::uint64_t rest = avail;
    while (rest) {
      auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      if (adj[v] & rest) return false;  // rest holds only higher vertices
    }
    return true;
  }

  // avail holds candidates above every chosen vertex and non-adjacent to all
  // of them; counts completions of size `need`.
  void rec(std::uint64_t avail, std::uint32_t need) {
    if (need == 0) {
      ++total;
      return;
    }
    auto cnt = static_cast<std::uint32_t>(std::popcount(avail));
    if (cnt < need) return;
    if (need == 1) {
      total += cnt;
      return;
    }
    if (edgeless(avail)) {
      total += binom64(cnt, need);
      return;
    }
    std::uint64_t rest = avail;
    while (rest) {
      auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      rec(rest & ~adj[v], need - 1);
    }
  }
};

}  // namespace

BigInt GraphOnN::count_independent_ksets(std::uint32_t k,
                                         std::uint32_t cap) const {
  if (n_ > cap)
    throw CapacityError("independent-set enumeration capped at n = " +
                        std::to_string(cap) + ", got n = " +
                        std::to_string(n_));
  if (k > n_) return 0;
  IndepCounter c{adj_};
  c.rec(full_mask(n_), k);
  return BigInt(static_cast<unsigned long>(c.total));
}

BigInt GraphOnN::count_cliques(std::uint32_t k, std::uint32_t cap) const {
  return complement().count_independent_ksets(k, cap);
}

}  // namespace uif
