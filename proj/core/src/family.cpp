#include "ramsey/family.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

std::string mask_to_string(Mask m, std::uint32_t universe) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < universe; ++i) {
    if ((m >> i) & 1) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(i);
    }
  }
  return out + "}";
}

std::vector<Mask> minimal_antichain(std::vector<Mask> sets) {
  // Ascending mask order puts every subset before its supersets, so a single
  // dominance pass yields the exact antichain.
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> minimal;
  for (Mask candidate : sets) {
    bool dominated = false;
    for (Mask m : minimal) {
      if ((m & ~candidate) == 0) {  // m ⊆ candidate
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(candidate);
  }
  return minimal;
}

Family Family::upward_closure(std::uint32_t universe, std::vector<Mask> base) {
  if (universe < 1 || universe > kMaxUniverse) {
    throw DomainError("family universe must be in [1.." + std::to_string(kMaxUniverse) +
                      "]");
  }
  if (base.empty()) throw DomainError("family base must be nonempty");
  const Mask full = universe == 64 ? ~0ull : (1ull << universe) - 1;
  for (Mask b : base) {
    if (b == 0) throw DomainError("the empty set cannot generate a family");
    if ((b & ~full) != 0) throw DomainError("base set exceeds the universe");
  }
  return Family(universe, minimal_antichain(std::move(base)));
}

std::vector<Mask> Family::all_members() const {
  std::vector<Mask> out;
  const Mask full = universe_mask();
  for (Mask b = 1; b <= full; ++b) {
    if (member(b)) out.push_back(b);
  }
  return out;
}

RamseyReport is_ramsey(const Family& f, bool disjoint_only) {
  if (f.universe() > Family::kMaxExhaustiveUniverse) {
    throw DomainError(
        "exhaustive Ramsey check gated to universe <= " +
        std::to_string(Family::kMaxExhaustiveUniverse) +
        "; use a sampled sweep for larger universes");
  }
  RamseyReport rep;
  for (Mask a : f.all_members()) {
    // Enumerate ordered pairs (a1, a2) with a1 ∪ a2 = a by walking all
    // sub-mask pairs: a1 ⊆ a and a2 ⊇ a \ a1 with a2 ⊆ a.
    for (Mask a1 = 0;; a1 = (a1 - a) & a) {
      const Mask rest = a & ~a1;
      if (disjoint_only) {
        const Mask a2 = rest;
        if (!f.member(a1) && !f.member(a2)) {
          rep.ramsey = false;
          rep.counterexample = {a, a1, a2};
          return rep;
        }
      } else {
        // a2 = rest ∪ s for any s ⊆ a1.
        for (Mask s = 0;; s = (s - a1) & a1) {
          const Mask a2 = rest | s;
          if (!f.member(a1) && !f.member(a2)) {
            rep.ramsey = false;
            rep.counterexample = {a, a1, a2};
            return rep;
          }
          if (s == a1) break;
        }
      }
      if (a1 == a) break;
    }
  }
  return rep;
}

Family dual_family(const Family& f) {
  if (f.universe() > Family::kMaxExhaustiveUniverse) {
    throw DomainError("exhaustive dual gated to universe <= " +
                      std::to_string(Family::kMaxExhaustiveUniverse));
  }
  // E ∈ F* iff E meets every minimal set of F. The universe always qualifies.
  std::vector<Mask> hitting;
  const Mask full = f.universe_mask();
  for (Mask e = 1; e <= full; ++e) {
    bool hits_all = true;
    for (Mask m : f.minimal_sets()) {
      if ((e & m) == 0) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) hitting.push_back(e);
  }
  return Family::upward_closure(f.universe(), std::move(hitting));
}

FilterReport is_filter(const Family& f) {
  FilterReport rep;
  const auto& mins = f.minimal_sets();
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i; j < mins.size(); ++j) {
      const Mask inter = mins[i] & mins[j];
      if (!f.member(inter)) {
        rep.filter = false;
        rep.counterexample = {mins[i], mins[j]};
        return rep;
      }
    }
  }
  return rep;
}

ShiftReport check_shift_invariance(const Family& f, const FiniteSemigroup& s, bool left,
                                   bool inverse) {
  if (f.universe() != s.size()) {
    throw DomainError("family universe must equal the semigroup carrier");
  }
  ShiftReport rep;
  for (std::uint32_t elem = 0; elem < s.size(); ++elem) {
    for (Mask m : f.minimal_sets()) {
      Mask shifted;
      if (left) {
        shifted = inverse ? s.left_quotient(elem, m) : s.left_shift(elem, m);
      } else {
        shifted = inverse ? s.right_quotient(elem, m) : s.right_shift(elem, m);
      }
      if (!f.member(shifted)) {
        rep.invariant = false;
        rep.violations.push_back({elem, m, shifted});
      }
    }
  }
  return rep;
}

Cond14Report check_subsemigroup_condition(const Family& f, const FiniteSemigroup& s) {
  if (s.size() > Family::kMaxExhaustiveUniverse) {
    throw DomainError("subsemigroup condition gated to carriers of size <= " +
                      std::to_string(Family::kMaxExhaustiveUniverse));
  }
  if (f.universe() != s.size()) {
    throw DomainError("family universe must equal the semigroup carrier");
  }
  Cond14Report rep;
  rep.note = "empty H contributes the full carrier to the intersection";
  const Mask full = f.universe_mask();
  const auto members = f.all_members();

  // Left quotients x^-1 E for all x, E fixed, reused across H subsets.
  std::vector<Mask> quotients(s.size());
  for (Mask e = 0; e <= full; ++e) {
    if (f.member(e)) continue;  // conclusion already holds
    for (std::uint32_t x = 0; x < s.size(); ++x) quotients[x] = s.left_quotient(x, e);
    for (Mask a : members) {
      bool premise = true;
      // All finite H ⊆ A, including H = ∅ (contributing the full carrier).
      for (Mask h = 0;; h = (h - a) & a) {
        Mask inter = full;
        for (std::uint32_t x = 0; x < s.size() && inter != 0; ++x) {
          if ((h >> x) & 1) inter &= quotients[x];
        }
        if (!f.member(inter)) {
          premise = false;
          break;
        }
        if (h == a) break;
      }
      if (premise) {
        rep.holds = false;
        rep.violation = {e, a};
        return rep;
      }
    }
  }
  return rep;
}

std::vector<Family> enumerate_families(std::uint32_t universe) {
  if (universe < 1 || universe > 4) {
    throw DomainError("family enumeration supported for universes of size 1..4");
  }
  const std::uint32_t nonempty = (1u << universe) - 1;  // count of nonempty subsets
  std::vector<Family> out;
  // A collection is a bitset over the nonempty subsets 1..nonempty.
  for (std::uint64_t coll = 1; coll < (1ull << nonempty); ++coll) {
    bool upward = true;
    std::vector<Mask> sets;
    for (Mask b = 1; b <= nonempty && upward; ++b) {
      if (!((coll >> (b - 1)) & 1)) continue;
      sets.push_back(b);
      // Every superset of b inside the universe must be present.
      for (Mask c = b; c <= nonempty; ++c) {
        if ((c & b) == b && !((coll >> (c - 1)) & 1)) {
          upward = false;
          break;
        }
      }
    }
    if (upward) out.push_back(Family::upward_closure(universe, std::move(sets)));
  }
  return out;
}

}  // namespace ramsey
