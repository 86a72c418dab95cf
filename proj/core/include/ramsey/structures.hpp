#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/semigroup.hpp"

namespace ramsey {

/// Disjoint increasing index blocks H_1 < H_2 < ... < H_k (1-based indices
/// into a source sequence). The defining invariant is max H_i < min H_{i+1}.
struct BlockSystem {
  std::vector<std::vector<std::uint32_t>> blocks;

  void validate() const {
    if (blocks.empty()) throw DomainError("block system must be nonempty");
    std::uint32_t prev_max = 0;
    for (const auto& h : blocks) {
      if (h.empty()) throw DomainError("blocks must be nonempty");
      std::uint32_t lo = h.front(), hi = h.front();
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] < 1) throw DomainError("block indices are 1-based");
        if (i > 0 && h[i] <= h[i - 1]) {
          throw DomainError("block indices must be strictly increasing");
        }
        lo = std::min(lo, h[i]);
        hi = std::max(hi, h[i]);
      }
      if (lo <= prev_max) {
        throw DomainError("blocks must satisfy max H_i < min H_{i+1}");
      }
      prev_max = hi;
    }
  }

  std::uint32_t max_index() const {
    std::uint32_t m = 0;
    for (const auto& h : blocks) {
      for (std::uint32_t t : h) m = std::max(m, t);
    }
    return m;
  }
};

enum class StructureKind { FS, FP, AP };

inline std::string structure_kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::FS: return "fs";
    case StructureKind::FP: return "fp";
    case StructureKind::AP: return "ap";
  }
  return "?";
}

/// Generated structured set with provenance: every element records each
/// arrangement (1-based index list, in combination order) that produced it.
/// Colliding arrangements are retained, so commutative collapse stays
/// observable.
template <typename E>
struct StructuredSet {
  struct Entry {
    E value;
    std::vector<std::vector<std::uint32_t>> arrangements;
  };

  StructureKind kind;
  std::vector<E> generators;
  std::vector<Entry> entries;  // first-derivation order

  std::size_t size() const { return entries.size(); }

  std::uint64_t arrangement_count() const {
    std::uint64_t c = 0;
    for (const auto& e : entries) c += e.arrangements.size();
    return c;
  }

  std::vector<E> values() const {
    std::vector<E> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.value);
    return out;
  }

  bool contains_value(const E& v) const {
    for (const auto& e : entries) {
      if (e.value == v) return true;
    }
    return false;
  }
};

inline constexpr std::size_t kMaxGenerationPrefix = 20;
inline constexpr std::uint64_t kMaxApArrangements = 2'000'000;

/// Sum over j of k!/(k-j)!: the number of AP arrangements for k generators.
inline std::uint64_t ap_arrangement_total(std::uint32_t k) {
  std::uint64_t total = 0, falling = 1;
  for (std::uint32_t j = 1; j <= k; ++j) {
    falling *= (k - j + 1);
    total += falling;
  }
  return total;
}

/// Re-derives an element from its recorded provenance.
template <SemigroupOps S>
typename S::Element derive_from_arrangement(const S& inst,
                                            const std::vector<typename S::Element>& gens,
                                            const std::vector<std::uint32_t>& arrangement) {
  if (arrangement.empty()) throw DomainError("empty arrangement");
  for (std::uint32_t idx : arrangement) {
    if (idx < 1 || idx > gens.size()) throw DomainError("arrangement index out of range");
  }
  typename S::Element acc = gens[arrangement[0] - 1];
  for (std::size_t i = 1; i < arrangement.size(); ++i) {
    acc = inst.combine(acc, gens[arrangement[i] - 1]);
  }
  return acc;
}

namespace detail {

template <typename E>
void record(StructuredSet<E>& out, std::map<E, std::size_t>& index, E value,
            std::vector<std::uint32_t> arrangement) {
  auto it = index.find(value);
  if (it == index.end()) {
    index.emplace(value, out.entries.size());
    out.entries.push_back({std::move(value), {std::move(arrangement)}});
  } else {
    out.entries[it->second].arrangements.push_back(std::move(arrangement));
  }
}

template <SemigroupOps S>
StructuredSet<typename S::Element> generate_increasing(
    StructureKind kind, const std::vector<typename S::Element>& x, const S& inst) {
  if (x.empty()) throw DomainError("generation requires k >= 1");
  if (x.size() > kMaxGenerationPrefix) {
    throw BudgetError("generation bounded at k <= " +
                      std::to_string(kMaxGenerationPrefix) + ", got k = " +
                      std::to_string(x.size()));
  }
  using E = typename S::Element;
  StructuredSet<E> out;
  out.kind = kind;
  out.generators = x;
  std::map<E, std::size_t> index;
  const std::uint32_t k = static_cast<std::uint32_t>(x.size());
  // Subsets in increasing mask order; indices inside a subset ascend, which
  // is exactly the increasing-order combination the definitions use.
  for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
    std::vector<std::uint32_t> idxs;
    for (std::uint32_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) idxs.push_back(i + 1);
    }
    E value = derive_from_arrangement(inst, x, idxs);
    record(out, index, std::move(value), std::move(idxs));
  }
  return out;
}

}  // namespace detail

/// All sums over nonempty index sets, indices in increasing order.
template <SemigroupOps S>
StructuredSet<typename S::Element> fs_generate(const std::vector<typename S::Element>& x,
                                               const S& add) {
  return detail::generate_increasing(StructureKind::FS, x, add);
}

/// All products over nonempty index sets, factors in increasing index order.
template <SemigroupOps S>
StructuredSet<typename S::Element> fp_generate(const std::vector<typename S::Element>& x,
                                               const S& mul) {
  return detail::generate_increasing(StructureKind::FP, x, mul);
}

/// All products of each nonempty subset in every arrangement (no
/// repetitions). Values collapse to set semantics; provenance keeps every
/// arrangement.
template <SemigroupOps S>
StructuredSet<typename S::Element> ap_generate(const std::vector<typename S::Element>& x,
                                               const S& mul) {
  if (x.empty()) throw DomainError("generation requires k >= 1");
  if (x.size() > kMaxGenerationPrefix) {
    throw BudgetError("generation bounded at k <= " +
                      std::to_string(kMaxGenerationPrefix) + ", got k = " +
                      std::to_string(x.size()));
  }
  const std::uint32_t k = static_cast<std::uint32_t>(x.size());
  const std::uint64_t total = ap_arrangement_total(k);
  if (total > kMaxApArrangements) {
    throw BudgetError("ap generation would enumerate " + std::to_string(total) +
                      " arrangements (limit " + std::to_string(kMaxApArrangements) + ")");
  }
  using E = typename S::Element;
  StructuredSet<E> out;
  out.kind = StructureKind::AP;
  out.generators = x;
  std::map<E, std::size_t> index;
  for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
    std::vector<std::uint32_t> idxs;
    for (std::uint32_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) idxs.push_back(i + 1);
    }
    // Arrangements in lexicographic order of the index list.
    std::vector<std::uint32_t> perm = idxs;
    do {
      E value = derive_from_arrangement(mul, x, perm);
      detail::record(out, index, std::move(value), perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

/// y_i = sum over t in H_i of x_t. Validates the block invariant and indices.
template <SemigroupOps S>
std::vector<typename S::Element> sum_subsystem(const std::vector<typename S::Element>& x,
                                               const BlockSystem& blocks, const S& add) {
  blocks.validate();
  if (blocks.max_index() > x.size()) {
    throw DomainError("block index exceeds source prefix length");
  }
  std::vector<typename S::Element> y;
  y.reserve(blocks.blocks.size());
  for (const auto& h : blocks.blocks) {
    typename S::Element acc = x[h[0] - 1];
    for (std::size_t i = 1; i < h.size(); ++i) acc = add.combine(acc, x[h[i] - 1]);
    y.push_back(std::move(acc));
  }
  return y;
}

}  // namespace ramsey
