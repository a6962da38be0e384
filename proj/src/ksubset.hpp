#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uif {

// Ground sets are [n] = {1,...,n} with n <= 64 on every enumeration path;
// element e occupies bit e-1.  Subsets compare in colexicographic order,
// which for bit masks is plain numeric order.
inline constexpr std::uint32_t kMaxGroundSet = 64;

std::uint64_t full_mask(std::uint32_t n);
std::uint64_t mask_from_elements(const std::vector<std::uint32_t>& elems);
std::vector<std::uint32_t> elements_of(std::uint64_t bits);  // ascending, 1-based
std::string subset_str(std::uint64_t bits);                  // "1,3,5"

// C(n,k) for n <= 64; every such value fits in 64 bits.
std::uint64_t binom64(std::uint32_t n, std::uint32_t k);

// Colex stream of k-subsets: start at the k lowest bits, advance with
// Gosper's hack, stop once the next mask would leave [n].
std::uint64_t first_ksubset(std::uint32_t k);
bool next_ksubset(std::uint64_t& bits, std::uint32_t n);

std::uint64_t colex_rank(std::uint64_t bits);
std::uint64_t colex_unrank(std::uint32_t n, std::uint32_t k, std::uint64_t rank);

template <typename Fn>
void for_each_ksubset(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  if (k > n) return;
  std::uint64_t bits = first_ksubset(k);
  do {
    fn(bits);
  } while (next_ksubset(bits, n));
}

}  // namespace uif
