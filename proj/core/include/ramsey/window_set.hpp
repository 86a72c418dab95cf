#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

/// An exact subset of the integer window [1..N].
///
/// Membership is bit-exact for every m <= window_max(); nothing is ever
/// extrapolated beyond the window. All operations are pure: they return new
/// sets and never mutate their inputs, so shared WindowSets are safe to use
/// concurrently.
///
/// A window_max of 0 denotes the degenerate empty window (it arises from
/// dilate_preimage with n > N and holds no elements).
class WindowSet {
 public:
  WindowSet() : window_max_(0) {}

  /// Empty set on [1..n].
  explicit WindowSet(std::uint64_t n) : window_max_(n), words_((n + 63) / 64) {}

  /// Set on [1..n] with the given members. Throws WindowError if a member
  /// falls outside [1..n].
  WindowSet(std::uint64_t n, const std::vector<std::uint64_t>& members);

  /// Set on [1..n] holding every m with pred(m) true.
  static WindowSet from_predicate(std::uint64_t n,
                                  const std::function<bool(std::uint64_t)>& pred);

  static WindowSet full(std::uint64_t n);

  std::uint64_t window_max() const { return window_max_; }

  bool contains(std::uint64_t m) const {
    if (m < 1 || m > window_max_) return false;
    return (words_[(m - 1) >> 6] >> ((m - 1) & 63)) & 1u;
  }

  std::uint64_t count() const;

  /// |A ∩ [1..n]| for n <= window_max.
  std::uint64_t count_prefix(std::uint64_t n) const;

  bool empty() const { return count() == 0; }

  std::vector<std::uint64_t> members() const;

  /// Least member, or 0 if empty.
  std::uint64_t min_element() const;

  void for_each(const std::function<void(std::uint64_t)>& fn) const;

  bool operator==(const WindowSet& other) const {
    return window_max_ == other.window_max_ && words_ == other.words_;
  }
  bool operator!=(const WindowSet& other) const { return !(*this == other); }

  /// a ⊆ b; requires equal windows.
  static bool is_subset(const WindowSet& a, const WindowSet& b);

  /// Line-oriented text format: "window N" then one line with a sorted
  /// run-length member list, e.g. "2-6 8 10-12". Bit-exact round trip.
  std::string to_text() const;
  static WindowSet from_text(std::string_view text);

 private:
  friend WindowSet translate_preimage(std::uint64_t t, const WindowSet& a);
  friend WindowSet dilate_preimage(std::uint64_t n, const WindowSet& a);
  friend WindowSet set_union(const WindowSet& a, const WindowSet& b);
  friend WindowSet set_intersect(const WindowSet& a, const WindowSet& b);
  friend WindowSet set_difference(const WindowSet& a, const WindowSet& b);
  friend WindowSet set_complement(const WindowSet& a);

  void set_bit(std::uint64_t m) { words_[(m - 1) >> 6] |= 1ull << ((m - 1) & 63); }
  void clear_tail();

  std::uint64_t window_max_;
  std::vector<std::uint64_t> words_;
};

/// {y in [1..N-t] : t+y in A}. The window shrinks to N-t; that shrink is part
/// of the contract, not an approximation. Throws WindowError when t >= N
/// (the result window would be empty).
WindowSet translate_preimage(std::uint64_t t, const WindowSet& a);

/// Result of a forward dilation. `truncated` records whether any n*a fell
/// beyond the window and was dropped; downstream checkers use it to refuse
/// conclusions that silently ignored elements.
struct DilateResult {
  WindowSet set;
  bool truncated = false;
  std::uint64_t dropped = 0;
};

/// {n*a : a in A, n*a <= N} on the same window [1..N].
DilateResult dilate(std::uint64_t n, const WindowSet& a);

/// {y : n*y in A} on the window [1..floor(N/n)].
WindowSet dilate_preimage(std::uint64_t n, const WindowSet& a);

// Exact boolean algebra; both arguments must share a window (WindowError
// otherwise).
WindowSet set_union(const WindowSet& a, const WindowSet& b);
WindowSet set_intersect(const WindowSet& a, const WindowSet& b);
WindowSet set_difference(const WindowSet& a, const WindowSet& b);
WindowSet set_complement(const WindowSet& a);

}  // namespace ramsey
