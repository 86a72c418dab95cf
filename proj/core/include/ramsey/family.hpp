#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/semigroup.hpp"

namespace ramsey {

/// Subset of a finite universe {0..u-1} as a bitmask.
using Mask = std::uint64_t;

std::string mask_to_string(Mask m, std::uint32_t universe);

/// An upward-closed, empty-set-free collection of subsets of a finite
/// universe, stored by its minimal elements (an antichain). Membership and
/// closure work up to universe size 20; the exhaustive Ramsey/dual sweeps are
/// gated to universe size 5.
class Family {
 public:
  static constexpr std::uint32_t kMaxUniverse = 20;
  static constexpr std::uint32_t kMaxExhaustiveUniverse = 5;

  /// Upward closure of the base sets. The base must be nonempty and must not
  /// contain the empty set; redundant (non-minimal) base sets are pruned.
  static Family upward_closure(std::uint32_t universe, std::vector<Mask> base);

  std::uint32_t universe() const { return universe_; }
  Mask universe_mask() const {
    return universe_ == 64 ? ~0ull : (1ull << universe_) - 1;
  }

  /// Canonical antichain: sorted ascending as bitmasks.
  const std::vector<Mask>& minimal_sets() const { return minimal_; }

  bool member(Mask b) const {
    for (Mask m : minimal_) {
      if ((m & ~b) == 0) return true;
    }
    return false;
  }

  /// Every member, ascending. Universe <= kMaxExhaustiveUniverse enforced by
  /// callers that need it; this enumerates up to 2^universe masks.
  std::vector<Mask> all_members() const;

  bool operator==(const Family& o) const {
    return universe_ == o.universe_ && minimal_ == o.minimal_;
  }

 private:
  Family(std::uint32_t universe, std::vector<Mask> minimal)
      : universe_(universe), minimal_(std::move(minimal)) {}

  std::uint32_t universe_;
  std::vector<Mask> minimal_;
};

/// Reduces a collection of sets to its minimal antichain (sorted ascending).
std::vector<Mask> minimal_antichain(std::vector<Mask> sets);

struct RamseyReport {
  bool ramsey = true;
  // Counterexample (A, A1, A2) with A = A1 ∪ A2 and neither part a member.
  std::optional<std::array<Mask, 3>> counterexample;
};

/// Exhaustive Ramsey-property check. Partitions range over ordered pairs
/// (A1, A2) with A1 ∪ A2 = A, overlaps included; disjoint_only restricts to
/// honest 2-colourings (equivalent for upward-closed families).
RamseyReport is_ramsey(const Family& f, bool disjoint_only = false);

/// F* = {E : E meets every member of F}, as a Family. Exhaustive, gated to
/// universe <= 5.
Family dual_family(const Family& f);

struct FilterReport {
  bool filter = true;
  std::optional<std::array<Mask, 2>> counterexample;  // members with A∩B not a member
};

/// Is F closed under pairwise intersection? Checked on the minimal antichain,
/// which is exact for upward-closed families.
FilterReport is_filter(const Family& f);

struct ShiftReport {
  struct Violation {
    std::uint32_t s;
    Mask member;   // a minimal set (hence a member) whose shift leaves F
    Mask shifted;
  };
  bool invariant = true;
  std::vector<Violation> violations;
};

/// Tests sE (or Es, s^-1 E, E s^-1) in F for every s in the carrier and every
/// member E; checked on minimal sets, which is exact by upward closure.
/// Requires the family universe to equal the carrier size.
ShiftReport check_shift_invariance(const Family& f, const FiniteSemigroup& s, bool left,
                                   bool inverse);

struct Cond14Report {
  bool holds = true;
  // First violating (E, A): premise held via A but E is not a member.
  std::optional<std::pair<Mask, Mask>> violation;
  std::string note;
};

/// The finite subsemigroup condition: for every E, if some member A has
/// (intersection over x in H of x^-1 E) in F for ALL finite H ⊆ A (the empty
/// H contributing the full carrier), then E must be a member. Exhaustive over
/// carriers of size <= 5.
Cond14Report check_subsemigroup_condition(const Family& f, const FiniteSemigroup& s);

/// Enumerates every nonempty, empty-set-free, upward-closed family on the
/// given universe (universe <= 4: the 166 nontrivial monotone antichains).
std::vector<Family> enumerate_families(std::uint32_t universe);

}  // namespace ramsey
