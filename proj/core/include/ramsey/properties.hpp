#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/rational.hpp"
#include "ramsey/semigroup.hpp"
#include "ramsey/window_set.hpp"

namespace ramsey {

/// Window-relative verdict status. Every checker documents which direction
/// (pass or fail) is globally sound; the other direction says nothing beyond
/// the window.
enum class Status { Holds, Fails, Inconclusive };

std::string status_name(Status s);

struct BudgetUse {
  std::uint64_t explored = 0;
  std::uint64_t limit = 0;
  bool budget_exhausted = false;  // stopped by the node limit
  bool space_exhausted = false;   // searched the whole bounded space
};

// Default search bounds, recorded in every verdict that uses them.
inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;
inline constexpr std::uint32_t kDefaultHBound = 20;
inline constexpr std::uint32_t kDefaultMBound = 3;

// ---------------------------------------------------------------------------
// Integer sequences for J-set queries
// ---------------------------------------------------------------------------

/// f: N -> N given as an affine rule mul*n + add or as an explicit prefix.
struct NatSeq {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
  std::vector<std::uint64_t> prefix;  // nonempty => prefix mode

  static NatSeq affine(std::uint64_t mul, std::uint64_t add);
  static NatSeq from_prefix(std::vector<std::uint64_t> values);

  /// Accepts "n", "3n", "2n+1", "7", or "[2,4,8]".
  static NatSeq parse(std::string_view text);

  bool is_prefix() const { return !prefix.empty(); }
  std::uint64_t at(std::uint64_t n) const;  // 1-based
  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

struct ThickVerdict {
  Status status;
  std::optional<std::uint64_t> witness;  // least x with F+x inside A
  std::string soundness;
};

struct SyndeticVerdict {
  Status status;
  std::uint64_t covered_up_to = 0;       // coverage checked on [1..N-max G]
  std::optional<std::uint64_t> hole;     // least uncovered point on failure
  std::string soundness;
};

struct PiecewiseVerdict {
  Status status;
  std::optional<std::uint64_t> witness;  // least x with F+x inside union of -t+A
  std::string soundness;
};

struct IpVerdict {
  Status status;
  std::vector<std::uint64_t> witness;  // lexicographically least x_1 < ... < x_k
  BudgetUse budget;
  std::string soundness;
};

struct JsetWitness {
  std::uint64_t a = 0;
  std::vector<std::uint64_t> h;  // sorted index set
};

struct JsetVerdict {
  Status status;
  std::optional<JsetWitness> witness;
  BudgetUse budget;
  std::string soundness;
};

struct ApWitness {
  std::uint64_t a = 0;
  std::uint64_t d = 0;
};

struct ApVerdict {
  Status status;
  std::optional<ApWitness> witness;  // least (a,d)
  std::string soundness;
};

struct DensityResult {
  BigRational at_n;         // |A ∩ [1..n]| / n
  BigRational running_max;  // max over prefixes m <= n (finite limsup proxy)
  std::uint64_t argmax = 0;
};

// ---------------------------------------------------------------------------
// Checkers (all pure; least witnesses in documented lexicographic orders)
// ---------------------------------------------------------------------------

/// Thick on the window: least x >= 1 with f+x in A for every f in F.
/// Pass is globally sound for this F; fail only refutes on the window.
ThickVerdict check_thick(const WindowSet& a, const std::vector<std::uint64_t>& f);

/// Syndetic on the window: does the union of -t+A over t in G cover
/// [1..N-max G]? Fail (an uncovered point) is globally sound; pass is not.
SyndeticVerdict check_syndetic(const WindowSet& a, const std::vector<std::uint64_t>& g);

/// Piecewise syndetic: least x with F+x inside the union of -t+A (t in G).
/// Pass is globally sound for this (G,F) pair.
PiecewiseVerdict check_piecewise_syndetic(const WindowSet& a,
                                          const std::vector<std::uint64_t>& g,
                                          const std::vector<std::uint64_t>& f);

/// Depth-k IP structure: lexicographically least x_1 < ... < x_k <=
/// search_bound with every finite sum inside A (sums beyond the window
/// disqualify a candidate). Pass is globally sound.
IpVerdict check_ip_depth(const WindowSet& a, std::uint32_t k, std::uint64_t search_bound,
                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Commutative J-set check: least (a, H) with a <= a_bound, H nonempty subset
/// of [1..h_bound], such that a + sum_{t in H} f(t) lies in A for every f.
/// Order: a ascending, then H by ascending bitmask value. Pass is globally
/// sound.
JsetVerdict check_jset_commutative(const WindowSet& a, const std::vector<NatSeq>& fseqs,
                                   std::uint64_t a_bound, std::uint32_t h_bound,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

/// Length-k arithmetic progression: least (a,d), d >= 1, with a + i*d in A
/// for i = 0..k-1. Pass is globally sound.
ApVerdict check_ap_length(const WindowSet& a, std::uint64_t k);

/// Exact prefix density |A ∩ [1..n]|/n plus the running maximum over all
/// prefixes m <= n.
DensityResult upper_density_prefix(const WindowSet& a, std::uint64_t n);

/// Exact partial sum of 1/m over m in A, m <= n. Finite data never decides
/// divergence; only the partial sum is reported.
BigRational harmonic_partial_sum(const WindowSet& a, std::uint64_t n);

// ---------------------------------------------------------------------------
// Witness re-verification (used by the honesty meta-tests and the CLI)
// ---------------------------------------------------------------------------

bool reverify_thick(const WindowSet& a, const std::vector<std::uint64_t>& f,
                    std::uint64_t x);
bool reverify_syndetic_hole(const WindowSet& a, const std::vector<std::uint64_t>& g,
                            std::uint64_t hole);
bool reverify_syndetic_cover(const WindowSet& a, const std::vector<std::uint64_t>& g);
bool reverify_piecewise(const WindowSet& a, const std::vector<std::uint64_t>& g,
                        const std::vector<std::uint64_t>& f, std::uint64_t x);
bool reverify_ip(const WindowSet& a, const std::vector<std::uint64_t>& xs);
bool reverify_jset(const WindowSet& a, const std::vector<NatSeq>& fseqs,
                   const JsetWitness& w);
bool reverify_ap(const WindowSet& a, std::uint64_t k, const ApWitness& w);

// ---------------------------------------------------------------------------
// Non-commutative J-set check over a semigroup instance
// ---------------------------------------------------------------------------

template <typename E>
struct SeqOf {
  std::vector<E> prefix;

  const E& at(std::uint64_t n) const {  // 1-based
    if (n < 1 || n > prefix.size()) {
      throw DomainError("sequence index " + std::to_string(n) + " beyond prefix");
    }
    return prefix[n - 1];
  }
};

template <typename E>
struct JsetNcWitness {
  std::uint32_t m = 0;
  std::vector<E> a;               // m+1 entries
  std::vector<std::uint64_t> t;   // strictly increasing indices
};

template <typename E>
struct JsetNcVerdict {
  Status status;
  std::optional<JsetNcWitness<E>> witness;
  BudgetUse budget;
  std::string soundness;
};

/// Searches m <= m_bound, a from pool^(m+1), strictly increasing t over
/// [1..t_bound] such that x(m,a,t,f) satisfies `member` for every f. The pool
/// may include the instance identity (spec'd element lists are the bound).
/// Order: m ascending, t lexicographic, a lexicographic by pool position.
template <SemigroupOps S, typename Pred>
JsetNcVerdict<typename S::Element> check_jset_noncommutative(
    const S& inst, const std::vector<SeqOf<typename S::Element>>& fseqs, Pred&& member,
    const std::vector<typename S::Element>& a_pool, std::uint32_t m_bound,
    std::uint64_t t_bound, std::uint64_t node_budget = kDefaultNodeBudget) {
  using E = typename S::Element;
  JsetNcVerdict<E> verdict;
  verdict.status = Status::Fails;
  verdict.budget.limit = node_budget;
  verdict.soundness =
      "pass is globally sound (a verified product pattern exists); "
      "fail only exhausts the stated bounds";
  if (fseqs.empty()) throw DomainError("jset check requires a nonempty family");
  if (a_pool.empty()) throw DomainError("jset check requires a nonempty element pool");

  std::vector<std::uint64_t> t;
  std::vector<std::size_t> a_idx;

  auto try_candidate = [&](std::uint32_t m) -> bool {
    ++verdict.budget.explored;
    std::vector<E> a;
    a.reserve(a_idx.size());
    for (std::size_t i : a_idx) a.push_back(a_pool[i]);
    for (const auto& f : fseqs) {
      const E val = x_product(inst, m, a, t, [&](std::uint64_t n) { return f.at(n); });
      if (!member(val)) return false;
    }
    verdict.status = Status::Holds;
    verdict.witness = JsetNcWitness<E>{m, std::move(a), t};
    return true;
  };

  // Enumerates a-tuples recursively in pool order.
  auto search_a = [&](auto&& self, std::uint32_t m, std::size_t pos) -> bool {
    if (verdict.budget.explored >= node_budget) return false;
    if (pos == static_cast<std::size_t>(m) + 1) return try_candidate(m);
    for (std::size_t i = 0; i < a_pool.size(); ++i) {
      a_idx[pos] = i;
      if (self(self, m, pos + 1)) return true;
      if (verdict.budget.explored >= node_budget) return false;
    }
    return false;
  };

  auto search_t = [&](auto&& self, std::uint32_t m, std::uint64_t next_min,
                      std::uint32_t remaining) -> bool {
    if (remaining == 0) {
      a_idx.assign(static_cast<std::size_t>(m) + 1, 0);
      return search_a(search_a, m, 0);
    }
    for (std::uint64_t v = next_min; v + remaining - 1 <= t_bound; ++v) {
      t.push_back(v);
      if (self(self, m, v + 1, remaining - 1)) return true;
      t.pop_back();
      if (verdict.budget.explored >= node_budget) return false;
    }
    return false;
  };

  for (std::uint32_t m = 1; m <= m_bound; ++m) {
    t.clear();
    if (search_t(search_t, m, 1, m)) return verdict;
    if (verdict.budget.explored >= node_budget) {
      verdict.status = Status::Inconclusive;
      verdict.budget.budget_exhausted = true;
      return verdict;
    }
  }
  verdict.budget.space_exhausted = true;
  return verdict;
}

/// The (N,+) instantiation used by the cross-oracle tests: shift tuples are
/// drawn from the additive monoid completion (entries may be 0) with
/// 1 <= sum(a) <= total_bound, so the realizable witnesses (sum(a), {t})
/// coincide exactly with check_jset_commutative's (a, H) space when
/// m_bound = h_bound = t_bound and a_bound = total_bound.
JsetVerdict check_jset_noncommutative_nat(const WindowSet& a,
                                          const std::vector<NatSeq>& fseqs,
                                          std::uint64_t total_bound,
                                          std::uint32_t m_bound, std::uint64_t t_bound,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace ramsey
