#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/properties.hpp"
#include "ramsey/semigroup.hpp"
#include "ramsey/window_set.hpp"

namespace ramsey {

/// Named, parameterized F-predicate plugged into certificate verification
/// ("the chain sets must all be F-sets" is family-relative).
struct FPredicate {
  enum class Kind { Nonempty, Thick, Syndetic, IpDepth, ApLength };

  Kind kind = Kind::Nonempty;
  std::vector<std::uint64_t> f;  // thick offsets
  std::vector<std::uint64_t> g;  // syndetic translations
  std::uint32_t k = 0;           // ip depth / ap length
  std::uint64_t search_bound = 0;  // ip search bound; 0 = window max

  /// "nonempty" | "thick:0,1,2" | "syndetic:1,2" | "ip:2" | "ip:2:100" | "ap:3"
  static FPredicate parse(const std::string& text);
  std::string to_string() const;

  bool eval_window(const WindowSet& set) const;
  /// Carrier sets only support the nonempty predicate.
  bool eval_mask(std::uint64_t mask) const;
};

// ---------------------------------------------------------------------------
// Chain certificates
// ---------------------------------------------------------------------------

struct WindowChainCertificate {
  WindowSet target;
  std::vector<WindowSet> chain;  // C_1 ⊇ C_2 ⊇ ... on the target's window
  FPredicate fpred;
};

struct CarrierChainCertificate {
  FiniteSemigroup semigroup;
  std::uint64_t target = 0;           // mask
  std::vector<std::uint64_t> chain;   // masks
  FPredicate fpred;
};

struct ChainLinkWitness {
  std::uint32_t n = 0;   // 1-based chain index
  std::uint64_t x = 0;   // element of C_n
  std::uint32_t m = 0;   // least index with C_m ⊆ x^-1 C_n
};

struct ChainReport {
  bool pass = false;
  std::string failure;  // empty on pass

  // Set when the containment A ⊇ C_1 ⊇ ... breaks: 0 means A ⊉ C_1,
  // i >= 1 means C_i ⊉ C_{i+1}.
  std::optional<std::uint32_t> failing_containment;
  // Set when some (n, x) has no witness m.
  std::optional<std::pair<std::uint32_t, std::uint64_t>> failing_link;
  // Set when fpred fails on C_n.
  std::optional<std::uint32_t> failing_fpred;

  std::vector<ChainLinkWitness> links;  // per-(n,x) witnesses, canonical order
  // Window chains only: x beyond the threshold are inconclusive, not failures.
  std::uint64_t skipped_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> skipped_examples;
  std::uint64_t x_threshold = 0;
};

/// Verifies a window chain certificate. For each n and each x in
/// C_n ∩ [1..threshold] there must be some m with C_m ⊆ -x+C_n on the
/// shrunken window; fpred must pass on every C_n. threshold = 0 selects the
/// default floor(N/2); larger x are recorded as inconclusive, never as
/// failures.
ChainReport verify_chain(const WindowChainCertificate& cert, std::uint64_t x_threshold = 0);

/// Exact variant over a finite carrier: every x in C_n is checked against
/// x^-1 C_n with no truncation.
ChainReport verify_chain(const CarrierChainCertificate& cert);

/// The dilation transform: target n*A, chain <n*C_k>, same window (elements
/// pushed beyond the window are dropped by the dilation semantics). The
/// caller re-verifies.
WindowChainCertificate dilate_chain(const WindowChainCertificate& cert, std::uint64_t n);

// ---------------------------------------------------------------------------
// Tree certificates
// ---------------------------------------------------------------------------

struct WindowTreeCertificate {
  WindowSet target;
  std::vector<std::vector<std::uint64_t>> nodes;  // prefix-closed, root included
  std::uint32_t depth = 0;
  FPredicate fpred;
  // Index lists into `nodes`; empty selects the default collection (all
  // non-frontier singletons plus root pairs).
  std::vector<std::vector<std::size_t>> fcollection;
};

struct CarrierTreeCertificate {
  FiniteSemigroup semigroup;
  std::uint64_t target = 0;  // mask
  std::vector<std::vector<std::uint32_t>> nodes;
  std::uint32_t depth = 0;
  FPredicate fpred;
  std::vector<std::vector<std::size_t>> fcollection;
};

struct TreeReport {
  bool pass = false;
  std::string failure;

  std::optional<std::size_t> failing_node;          // node index
  std::optional<std::uint64_t> failing_x;           // x in B_f without containment
  std::optional<std::uint64_t> failing_y;           // witness element breaking it
  std::optional<std::size_t> failing_fcollection;   // index into the collection
  std::size_t checked_nodes = 0;
  std::size_t checked_collections = 0;
};

TreeReport verify_tree(const WindowTreeCertificate& cert);
TreeReport verify_tree(const CarrierTreeCertificate& cert);

/// Deterministic chain-to-tree translation (the finite shadow of building a
/// function tree from a verified decreasing chain). Nodes are sequences whose
/// running sums stay within sum_cap; each node's branching set is the chain
/// set selected by the verified link witnesses.
WindowTreeCertificate chain_to_tree(const WindowChainCertificate& cert,
                                    std::uint32_t depth, std::uint64_t sum_cap,
                                    std::size_t max_nodes = 200'000);

CarrierTreeCertificate chain_to_tree(const CarrierChainCertificate& cert,
                                     std::uint32_t depth,
                                     std::size_t max_nodes = 200'000);

}  // namespace ramsey
