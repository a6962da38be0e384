#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"

namespace uif {

// A duplicate-free family of k-subsets of [n], members kept in colex order
// (ascending bit-mask value).  The intersecting / trivial-center / covering
// number queries cache their answers until the family is mutated.
class SetFamily {
 public:
  SetFamily(std::uint32_t ground_n, std::uint32_t k);

  // All k-sets containing `center`.
  static SetFamily star(std::uint32_t n, std::uint32_t k, std::uint32_t center);

  // The exceptional set plus every k-set through `center` that meets it;
  // requires center outside the exceptional set.
  static SetFamily hilton_milner(std::uint32_t n, std::uint32_t k,
                                 std::uint32_t center,
                                 std::uint64_t exceptional_bits);

  std::uint32_t ground_n() const { return n_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<std::uint64_t>& members() const { return members_; }

  void add(std::uint64_t bits);  // validates size/range; duplicates are no-ops
  bool contains(std::uint64_t bits) const;

  // True iff no two members are disjoint.
  bool is_intersecting() const;

  // Smallest element common to every member; empty families have none.
  std::optional<std::uint32_t> trivial_center() const;

  // Exact tau via iterative-deepening branch and bound; tau(empty) = 0.
  std::uint32_t covering_number() const;

  // One member per line as a sorted 1-based element list.
  std::string to_text() const;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<std::uint64_t> members_;
  mutable std::optional<bool> intersecting_;
  mutable std::optional<std::optional<std::uint32_t>> center_;
  mutable std::optional<std::uint32_t> tau_;

  void invalidate_caches();
};

// Exact size of the union; all families must share ground set and k.
BigInt union_size(const std::vector<const SetFamily*>& fams);

// Witness-file format: families separated by a single blank line.
std::string serialize_families(const std::vector<const SetFamily*>& fams);
std::vector<SetFamily> parse_families(std::string_view text,
                                      std::uint32_t ground_n);

}  // namespace uif
