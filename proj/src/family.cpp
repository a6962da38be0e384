#include "family.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "ksubset.hpp"

namespace uif {

SetFamily::SetFamily(std::uint32_t ground_n, std::uint32_t k)
    : n_(ground_n), k_(k) {
  if (ground_n == 0 || ground_n > kMaxGroundSet)
    throw CapacityError("SetFamily: need 1 <= n <= 64");
  if (k > ground_n) throw std::invalid_argument("SetFamily: k > n");
}

SetFamily SetFamily::star(std::uint32_t n, std::uint32_t k,
                          std::uint32_t center) {
  if (center == 0 || center > n)
    throw std::invalid_argument("star: center outside [1,n]");
  SetFamily f(n, k);
  const std::uint64_t cbit = 1ull << (center - 1);
  for_each_ksubset(n, k, [&](std::uint64_t bits) {
    if (bits & cbit) f.members_.push_back(bits);
  });
  return f;
}

SetFamily SetFamily::hilton_milner(std::uint32_t n, std::uint32_t k,
                                   std::uint32_t center,
                                   std::uint64_t exceptional_bits) {
  if (center == 0 || center > n)
    throw std::invalid_argument("hilton_milner: center outside [1,n]");
  if (std::popcount(exceptional_bits) != static_cast<int>(k))
    throw std::invalid_argument("hilton_milner: exceptional set must have size k");
  if (exceptional_bits & ~full_mask(n))
    throw std::invalid_argument("hilton_milner: exceptional set outside [1,n]");
  const std::uint64_t cbit = 1ull << (center - 1);
  if (exceptional_bits & cbit)
    throw std::invalid_argument("hilton_milner: center lies in the exceptional set");
  // Materialized by filtering the full enumeration so the size can be
  // cross-checked against the closed-form bound.
  SetFamily f(n, k);
  for_each_ksubset(n, k, [&](std::uint64_t bits) {
    if (bits == exceptional_bits ||
        ((bits & cbit) && (bits & exceptional_bits)))
      f.members_.push_back(bits);
  });
  return f;
}

void SetFamily::add(std::uint64_t bits) {
  if (std::popcount(bits) != static_cast<int>(k_))
    throw std::invalid_argument("add: member must have exactly k elements");
  if (bits & ~full_mask(n_))
    throw std::invalid_argument("add: member outside [1,n]");
  if (members_.empty() || bits > members_.back()) {
    members_.push_back(bits);
  } else {
    auto it = std::lower_bound(members_.begin(), members_.end(), bits);
    if (it != members_.end() && *it == bits) return;
    members_.insert(it, bits);
  }
  invalidate_caches();
}

bool SetFamily::contains(std::uint64_t bits) const {
  return std::binary_search(members_.begin(), members_.end(), bits);
}

bool SetFamily::is_intersecting() const {
  if (!intersecting_) {
    bool ok = true;
    for (std::size_t i = 0; i < members_.size() && ok; ++i)
      for (std::size_t j = i + 1; j < members_.size(); ++j)
        if ((members_[i] & members_[j]) == 0) {
          ok = false;
          break;
        }
    intersecting_ = ok;
  }
  return *intersecting_;
}

std::optional<std::uint32_t> SetFamily::trivial_center() const {
  if (!center_) {
    if (members_.empty()) {
      center_ = std::optional<std::uint32_t>{};
    } else {
      std::uint64_t common = members_.front();
      for (auto m : members_) common &= m;
      if (common == 0)
        center_ = std::optional<std::uint32_t>{};
      else
        center_ = static_cast<std::uint32_t>(std::countr_zero(common)) + 1;
    }
  }
  return *center_;
}

namespace {

// Every cover must hit the first surviving member, so branching on its
// elements is complete.
bool exists_cover(const std::vector<std::uint64_t>& alive, std::uint32_t budget) {
  if (alive.empty()) return true;
  if (budget == 0) return false;
  std::uint64_t pivot = alive.front();
  while (pivot) {
    const std::uint64_t xbit = pivot & (~pivot + 1);
    pivot &= pivot - 1;
    std::vector<std::uint64_t> rest;
    rest.reserve(alive.size());
    for (auto m : alive)
      if ((m & xbit) == 0) rest.push_back(m);
    if (exists_cover(rest, budget - 1)) return true;
  }
  return false;
}

}  // namespace

std::uint32_t SetFamily::covering_number() const {
  if (!tau_) {
    std::uint32_t t = 0;
    while (!exists_cover(members_, t)) ++t;
    tau_ = t;
  }
  return *tau_;
}

std::string SetFamily::to_text() const {
  std::ostringstream os;
  for (auto m : members_) os << subset_str(m) << '\n';
  return os.str();
}

void SetFamily::invalidate_caches() {
  intersecting_.reset();
  center_.reset();
  tau_.reset();
}

BigInt union_size(const std::vector<const SetFamily*>& fams) {
  if (fams.empty()) return 0;
  const std::uint32_t n = fams.front()->ground_n();
  const std::uint32_t k = fams.front()->k();
  std::size_t total = 0;
  for (auto* f : fams) {
    if (f->ground_n() != n || f->k() != k)
      throw std::invalid_argument("union_size: mixed ground sets or k");
    total += f->members().size();
  }
  std::vector<std::uint64_t> all;
  all.reserve(total);
  for (auto* f : fams)
    all.insert(all.end(), f->members().begin(), f->members().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return BigInt(static_cast<unsigned long>(all.size()));
}

std::string serialize_families(const std::vector<const SetFamily*>& fams) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    if (i) os << '\n';
    os << fams[i]->to_text();
  }
  return os.str();
}

std::vector<SetFamily> parse_families(std::string_view text,
                                      std::uint32_t ground_n) {
  std::vector<SetFamily> out;
  std::vector<std::uint64_t> pending;
  auto flush = [&] {
    if (pending.empty()) return;
    auto k = static_cast<std::uint32_t>(std::popcount(pending.front()));
    SetFamily f(ground_n, k);
    for (auto bits : pending) f.add(bits);
    out.push_back(std::move(f));
    pending.clear();
  };
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    std::vector<std::uint32_t> elems;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      std::size_t used = 0;
      unsigned long v = std::stoul(tok, &used);
      if (used != tok.size() || v == 0 || v > ground_n)
        throw std::invalid_argument("parse_families: bad element '" + tok + "'");
      elems.push_back(static_cast<std::uint32_t>(v));
    }
    if (elems.empty())
      throw std::invalid_argument("parse_families: empty member line");
    pending.push_back(mask_from_elements(elems));
  }
  flush();
  return out;
}

}  // namespace uif
