#include "ksubset.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace uif {

namespace {

using BinomTable = std::array<std::array<std::uint64_t, kMaxGroundSet + 1>,
                              kMaxGroundSet + 1>;

BinomTable build_binom_table() {
  BinomTable t{};
  for (std::uint32_t n = 0; n <= kMaxGroundSet; ++n) {
    t[n][0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k)
      t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

const BinomTable& binom_table() {
  static const BinomTable t = build_binom_table();
  return t;
}

void check_ground(std::uint32_t n) {
  if (n > kMaxGroundSet)
    throw CapacityError("ground set size " + std::to_string(n) +
                        " exceeds the enumeration cap of 64");
}

}  // namespace

std::uint64_t full_mask(std::uint32_t n) {
  check_ground(n);
  return n == 64 ? ~0ull : ((1ull << n) - 1);
}

std::uint64_t mask_from_elements(const std::vector<std::uint32_t>& elems) {
  std::uint64_t bits = 0;
  for (auto e : elems) {
    if (e == 0 || e > kMaxGroundSet)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside [1,64]");
    bits |= 1ull << (e - 1);
  }
  return bits;
}

std::vector<std::uint32_t> elements_of(std::uint64_t bits) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(bits)));
  while (bits) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)) + 1);
    bits &= bits - 1;
  }
  return out;
}

std::string subset_str(std::uint64_t bits) {
  std::ostringstream os;
  bool first = true;
  for (auto e : elements_of(bits)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os.str();
}

std::uint64_t binom64(std::uint32_t n, std::uint32_t k) {
  if (n > kMaxGroundSet) throw std::invalid_argument("binom64: n > 64");
  if (k > n) return 0;
  return binom_table()[n][k];
}

std::uint64_t first_ksubset(std::uint32_t k) {
  if (k > kMaxGroundSet) throw std::invalid_argument("first_ksubset: k > 64");
  return k == 64 ? ~0ull : ((1ull << k) - 1);
}

bool next_ksubset(std::uint64_t& bits, std::uint32_t n) {
  check_ground(n);
  if (bits == 0) return false;  // the empty set is the whole stream for k=0
  const std::uint32_t k = static_cast<std::uint32_t>(std::popcount(bits));
  // last subset in colex order: the k highest bits of [n]
  const std::uint64_t last = full_mask(n) ^ full_mask(n - k);
  if (bits == last) return false;
  const std::uint64_t low = bits & (~bits + 1);
  const std::uint64_t carry = bits + low;
  bits = carry | (((bits ^ carry) / low) >> 2);
  return true;
}

std::uint64_t colex_rank(std::uint64_t bits) {
  std::uint64_t rank = 0;
  std::uint32_t i = 1;
  while (bits) {
    auto pos = static_cast<std::uint32_t>(std::countr_zero(bits));
    rank += binom64(pos, i);
    ++i;
    bits &= bits - 1;
  }
  return rank;
}

std::uint64_t colex_unrank(std::uint32_t n, std::uint32_t k,
                           std::uint64_t rank) {
  check_ground(n);
  if (k > n || rank >= binom64(n, k))
    throw std::invalid_argument("colex_unrank: rank out of range");
  std::uint64_t bits = 0;
  std::uint32_t hi = n;
  for (std::uint32_t i = k; i >= 1; --i) {
    std::uint32_t c = i - 1;
    while (c + 1 <= hi && binom64(c + 1, i) <= rank) ++c;
    bits |= 1ull << c;
    rank -= binom64(c, i);
    hi = c;
  }
  return bits;
}

}  // namespace uif
