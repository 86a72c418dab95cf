#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// 2x2 matrix over bounded naturals. Entries saturate nowhere: any operation
/// that would exceed kEntryLimit throws OverflowError, because a silent wrap
/// would fabricate algebraic identities.
struct Mat2 {
  static constexpr std::uint64_t kEntryLimit = 1ull << 31;

  std::array<std::uint64_t, 4> e{};  // row-major [a b; c d]

  auto operator<=>(const Mat2&) const = default;

  std::uint64_t trace() const { return e[0] + e[3]; }

  static Mat2 identity() { return Mat2{{1, 0, 0, 1}}; }
  static Mat2 unipotent(std::uint64_t n) { return Mat2{{1, n, 0, 1}}; }
};

std::string mat2_to_string(const Mat2& m);

// ---------------------------------------------------------------------------
// Semigroup instances
// ---------------------------------------------------------------------------

/// A semigroup instance is a small value object exposing the carrier element
/// type, the binary operation, an optional identity, and a seeded sampler.
template <typename S>
concept SemigroupOps = requires(const S& s, const typename S::Element& a,
                                const typename S::Element& b, std::mt19937_64& rng) {
  typename S::Element;
  { s.combine(a, b) } -> std::same_as<typename S::Element>;
  { s.name() } -> std::convertible_to<std::string>;
  { s.commutative() } -> std::same_as<bool>;
  { s.identity() } -> std::same_as<std::optional<typename S::Element>>;
  { s.sample(rng) } -> std::same_as<typename S::Element>;
  { s.to_string(a) } -> std::convertible_to<std::string>;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a > UINT64_MAX - b) throw OverflowError(std::string(what) + ": addition overflow");
  return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a != 0 && b > UINT64_MAX / a) {
    throw OverflowError(std::string(what) + ": multiplication overflow");
  }
  return a * b;
}

}  // namespace detail

/// (N, +) over positive integers. No identity (0 is excluded from N here).
struct NatAdd {
  using Element = std::uint64_t;
  std::uint64_t sample_bound = 100;

  Element combine(Element a, Element b) const { return detail::checked_add(a, b, "nat"); }
  std::string name() const { return "nat-add"; }
  bool commutative() const { return true; }
  std::optional<Element> identity() const { return std::nullopt; }
  Element sample(std::mt19937_64& rng) const { return 1 + rng() % sample_bound; }
  std::string to_string(Element a) const { return std::to_string(a); }
};

/// (N, *) over positive integers.
struct NatMul {
  using Element = std::uint64_t;
  std::uint64_t sample_bound = 100;

  Element combine(Element a, Element b) const { return detail::checked_mul(a, b, "nat"); }
  std::string name() const { return "nat-mul"; }
  bool commutative() const { return true; }
  std::optional<Element> identity() const { return 1; }
  Element sample(std::mt19937_64& rng) const { return 1 + rng() % sample_bound; }
  std::string to_string(Element a) const { return std::to_string(a); }
};

/// Tropical "addition": max over N (including 0).
struct TropMax {
  using Element = std::uint64_t;
  std::uint64_t sample_bound = 1000;

  Element combine(Element a, Element b) const { return a > b ? a : b; }
  std::string name() const { return "trop-max"; }
  bool commutative() const { return true; }
  std::optional<Element> identity() const { return 0; }
  Element sample(std::mt19937_64& rng) const { return rng() % sample_bound; }
  std::string to_string(Element a) const { return std::to_string(a); }
};

/// Tropical "multiplication": ordinary + over N (including 0).
struct TropPlus {
  using Element = std::uint64_t;
  std::uint64_t sample_bound = 1000;

  Element combine(Element a, Element b) const {
    return detail::checked_add(a, b, "tropical");
  }
  std::string name() const { return "trop-plus"; }
  bool commutative() const { return true; }
  std::optional<Element> identity() const { return 0; }
  Element sample(std::mt19937_64& rng) const { return rng() % sample_bound; }
  std::string to_string(Element a) const { return std::to_string(a); }
};

/// Entrywise sum of 2x2 matrices.
struct Mat2Add {
  using Element = Mat2;
  std::uint64_t sample_bound = 8;

  Element combine(const Element& a, const Element& b) const {
    Mat2 out;
    for (int i = 0; i < 4; ++i) {
      out.e[i] = detail::checked_add(a.e[i], b.e[i], "mat2");
      if (out.e[i] >= Mat2::kEntryLimit) throw OverflowError("mat2: entry limit exceeded");
    }
    return out;
  }
  std::string name() const { return "mat2-add"; }
  bool commutative() const { return true; }
  std::optional<Element> identity() const { return std::nullopt; }
  Element sample(std::mt19937_64& rng) const {
    Mat2 out;
    for (int i = 0; i < 4; ++i) out.e[i] = rng() % sample_bound;
    return out;
  }
  std::string to_string(const Element& a) const { return mat2_to_string(a); }
};

/// Matrix product of 2x2 matrices (non-commutative).
struct Mat2Mul {
  using Element = Mat2;
  std::uint64_t sample_bound = 8;

  Element combine(const Element& a, const Element& b) const {
    auto cell = [&](int r, int c) {
      const std::uint64_t x = detail::checked_mul(a.e[2 * r], b.e[c], "mat2");
      const std::uint64_t y = detail::checked_mul(a.e[2 * r + 1], b.e[2 + c], "mat2");
      const std::uint64_t v = detail::checked_add(x, y, "mat2");
      if (v >= Mat2::kEntryLimit) throw OverflowError("mat2: entry limit exceeded");
      return v;
    };
    return Mat2{{cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1)}};
  }
  std::string name() const { return "mat2-mul"; }
  bool commutative() const { return false; }
  std::optional<Element> identity() const { return Mat2::identity(); }
  Element sample(std::mt19937_64& rng) const {
    Mat2 out;
    for (int i = 0; i < 4; ++i) out.e[i] = rng() % sample_bound;
    return out;
  }
  std::string to_string(const Element& a) const { return mat2_to_string(a); }
};

/// Finite words over a fixed alphabet under concatenation. Only a semigroup
/// (the empty word acts as identity and is reported as such); products in
/// different orders stay observable, which the AP tests rely on.
struct FreeMon {
  using Element = std::string;
  std::string alphabet = "abcde";
  std::size_t sample_max_len = 3;

  Element combine(const Element& a, const Element& b) const { return a + b; }
  std::string name() const { return "freemon"; }
  bool commutative() const { return false; }
  std::optional<Element> identity() const { return std::string(); }
  Element sample(std::mt19937_64& rng) const {
    const std::size_t len = 1 + rng() % sample_max_len;
    std::string out;
    for (std::size_t i = 0; i < len; ++i) out += alphabet[rng() % alphabet.size()];
    return out;
  }
  std::string to_string(const Element& a) const { return a; }
};

// ---------------------------------------------------------------------------
// Sampled associativity check
// ---------------------------------------------------------------------------

struct AssocReport {
  bool pass = true;
  std::uint64_t checked = 0;
  std::vector<std::string> counterexample;  // x, y, z rendered
};

template <SemigroupOps S>
AssocReport check_associativity(const S& inst, std::uint64_t samples, std::uint64_t seed) {
  AssocReport rep;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto x = inst.sample(rng);
    const auto y = inst.sample(rng);
    const auto z = inst.sample(rng);
    ++rep.checked;
    if (inst.combine(inst.combine(x, y), z) != inst.combine(x, inst.combine(y, z))) {
      rep.pass = false;
      rep.counterexample = {inst.to_string(x), inst.to_string(y), inst.to_string(z)};
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The product form x(m,a,t,f)
// ---------------------------------------------------------------------------

/// Evaluates (prod_{j=1..m} a(j)*f(t(j))) * a(m+1) with the factors combined
/// left to right in the stated order. Throws DomainError on arity mismatch or
/// a non-increasing index tuple.
template <SemigroupOps S, typename F>
typename S::Element x_product(const S& inst, std::uint32_t m,
                              const std::vector<typename S::Element>& a,
                              const std::vector<std::uint64_t>& t, F&& f) {
  if (m < 1) throw DomainError("x_product requires m >= 1");
  if (a.size() != static_cast<std::size_t>(m) + 1) {
    throw DomainError("x_product requires len(a) = m+1");
  }
  if (t.size() != m) throw DomainError("x_product requires len(t) = m");
  for (std::size_t j = 1; j < t.size(); ++j) {
    if (t[j - 1] >= t[j]) throw DomainError("x_product requires strictly increasing t");
  }
  typename S::Element acc = inst.combine(a[0], f(t[0]));
  for (std::uint32_t j = 1; j < m; ++j) {
    acc = inst.combine(acc, inst.combine(a[j], f(t[j])));
  }
  return inst.combine(acc, a[m]);
}

// ---------------------------------------------------------------------------
// Weak rings
// ---------------------------------------------------------------------------

/// A carrier with an addition semigroup and a multiplication semigroup plus
/// claimed distributivity flags. check_laws verifies the claims on sampled
/// triples.
template <typename AddT, typename MulT>
struct WeakRing {
  static_assert(std::is_same_v<typename AddT::Element, typename MulT::Element>);
  using Element = typename AddT::Element;

  AddT add;
  MulT mul;
  bool left_distributive = false;
  bool right_distributive = false;
  std::string name;
};

inline WeakRing<NatAdd, NatMul> nat_ring() { return {NatAdd{}, NatMul{}, true, true, "nat"}; }
inline WeakRing<TropMax, TropPlus> tropical_ring() {
  return {TropMax{}, TropPlus{}, true, true, "tropical"};
}
inline WeakRing<Mat2Add, Mat2Mul> mat2_ring() {
  return {Mat2Add{}, Mat2Mul{}, true, true, "mat2"};
}

struct LawReport {
  struct Entry {
    std::string law;
    bool claimed = false;
    bool pass = true;
    std::uint64_t checked = 0;
    std::vector<std::string> counterexample;  // x, y, z rendered
  };

  std::string ring;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<Entry> entries;

  bool claimed_laws_hold() const {
    for (const auto& e : entries) {
      if (e.claimed && !e.pass) return false;
    }
    return true;
  }
};

/// Deterministic given (samples, seed). Each law is reported with pass/fail
/// and a counterexample triple on failure.
template <typename AddT, typename MulT>
LawReport check_laws(const WeakRing<AddT, MulT>& ring, std::uint64_t samples,
                     std::uint64_t seed) {
  if (samples < 1) throw DomainError("check_laws requires samples >= 1");
  LawReport report;
  report.ring = ring.name;
  report.samples = samples;
  report.seed = seed;

  using E = typename AddT::Element;
  auto run = [&](const std::string& law, bool claimed, auto&& check) {
    LawReport::Entry entry;
    entry.law = law;
    entry.claimed = claimed;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const E x = ring.add.sample(rng);
      const E y = ring.add.sample(rng);
      const E z = ring.add.sample(rng);
      ++entry.checked;
      if (!check(x, y, z)) {
        entry.pass = false;
        entry.counterexample = {ring.add.to_string(x), ring.add.to_string(y),
                                ring.add.to_string(z)};
        break;
      }
    }
    report.entries.push_back(std::move(entry));
  };

  run("add-associative", true, [&](const E& x, const E& y, const E& z) {
    return ring.add.combine(ring.add.combine(x, y), z) ==
           ring.add.combine(x, ring.add.combine(y, z));
  });
  run("mul-associative", true, [&](const E& x, const E& y, const E& z) {
    return ring.mul.combine(ring.mul.combine(x, y), z) ==
           ring.mul.combine(x, ring.mul.combine(y, z));
  });
  run("left-distributive", ring.left_distributive,
      [&](const E& x, const E& y, const E& z) {
        return ring.mul.combine(x, ring.add.combine(y, z)) ==
               ring.add.combine(ring.mul.combine(x, y), ring.mul.combine(x, z));
      });
  run("right-distributive", ring.right_distributive,
      [&](const E& x, const E& y, const E& z) {
        return ring.mul.combine(ring.add.combine(x, y), z) ==
               ring.add.combine(ring.mul.combine(x, z), ring.mul.combine(y, z));
      });
  return report;
}

// ---------------------------------------------------------------------------
// Finite semigroups (table-based; carriers are indices 0..size-1)
// ---------------------------------------------------------------------------

/// Cayley-table semigroup on at most 64 elements; subsets are uint64_t masks.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::string name, std::uint32_t size, std::vector<std::uint32_t> table);

  /// (Z_n, +).
  static FiniteSemigroup cyclic(std::uint32_t n);

  /// Resolves "z2".."z64". Throws DomainError for unknown names.
  static FiniteSemigroup by_name(const std::string& name);

  const std::string& name() const { return name_; }
  std::uint32_t size() const { return size_; }

  std::uint32_t op(std::uint32_t i, std::uint32_t j) const {
    return table_[static_cast<std::size_t>(i) * size_ + j];
  }

  /// Exhaustive associativity check over all triples.
  bool is_associative() const;

  std::uint64_t full_mask() const {
    return size_ == 64 ? ~0ull : (1ull << size_) - 1;
  }

  // Subset transforms. E is a bitmask over the carrier.
  std::uint64_t left_shift(std::uint32_t s, std::uint64_t e) const;      // sE
  std::uint64_t right_shift(std::uint32_t s, std::uint64_t e) const;     // Es
  std::uint64_t left_quotient(std::uint32_t s, std::uint64_t e) const;   // {y : sy in E}
  std::uint64_t right_quotient(std::uint32_t s, std::uint64_t e) const;  // {y : ys in E}

 private:
  std::string name_;
  std::uint32_t size_;
  std::vector<std::uint32_t> table_;
};

}  // namespace ramsey
