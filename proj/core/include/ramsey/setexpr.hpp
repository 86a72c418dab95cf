#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/window_set.hpp"

namespace ramsey {

/// AST of the set-definition DSL.
///
/// Atoms:        all | interval(a,b) | mod(m,r) | pow2blocks | fs(x1..xk) | fp(x1..xk)
/// Combinators:  union(e,e) | inter(e,e) | diff(e,e)
///               | translate(t,e) | tpre(t,e) | dilate(n,e) | dpre(n,e)
///
/// translate(t,e) denotes the preimage -t+e (the only translation the theory
/// needs); tpre is an explicit synonym kept as its own node so that printing
/// reproduces the input spelling. dilate(n,e) is the forward dilation n*e,
/// dpre(n,e) the preimage n^-1 e.
///
/// Nodes are immutable and shared; every operation on them is pure.
struct SetExpr;
using SetExprPtr = std::shared_ptr<const SetExpr>;

struct SetExpr {
  enum class Kind {
    All,
    Interval,
    Mod,
    Pow2Blocks,
    Fs,
    Fp,
    Union,
    Inter,
    Diff,
    Translate,
    TPre,
    Dilate,
    DPre,
  };

  Kind kind;
  std::uint64_t p1 = 0;  // interval a / mod m / translate t / dilate n
  std::uint64_t p2 = 0;  // interval b / mod r
  std::vector<std::uint64_t> xs;  // fs / fp generators
  SetExprPtr lhs;                 // first child
  SetExprPtr rhs;                 // second child (binary combinators)
};

namespace expr {

SetExprPtr all();
SetExprPtr interval(std::uint64_t a, std::uint64_t b);
SetExprPtr mod(std::uint64_t m, std::uint64_t r);
SetExprPtr pow2blocks();
SetExprPtr fs(std::vector<std::uint64_t> xs);
SetExprPtr fp(std::vector<std::uint64_t> xs);
SetExprPtr union_(SetExprPtr l, SetExprPtr r);
SetExprPtr inter(SetExprPtr l, SetExprPtr r);
SetExprPtr diff(SetExprPtr l, SetExprPtr r);
SetExprPtr translate(std::uint64_t t, SetExprPtr e);
SetExprPtr tpre(std::uint64_t t, SetExprPtr e);
SetExprPtr dilate(std::uint64_t n, SetExprPtr e);
SetExprPtr dpre(std::uint64_t n, SetExprPtr e);

}  // namespace expr

/// Parses the whitespace-insensitive textual form. Throws ParseError for
/// syntax errors (with byte offset and expected-token set) and DomainError
/// for well-formed text with invalid parameters (e.g. mod(0,1)).
SetExprPtr parse_setexpr(std::string_view text);

/// Canonical text; parse_setexpr(print_setexpr(e)) is structurally equal to e.
std::string print_setexpr(const SetExpr& e);
inline std::string print_setexpr(const SetExprPtr& e) { return print_setexpr(*e); }

bool structurally_equal(const SetExpr& a, const SetExpr& b);
inline bool structurally_equal(const SetExprPtr& a, const SetExprPtr& b) {
  return structurally_equal(*a, *b);
}

/// Exact evaluation onto [1..N]. Preimage combinators shrink the result
/// window (translate/tpre by t, dpre to floor(N/n)); boolean combinators over
/// children with different windows restrict to the smaller one, so that every
/// reported member is exact.
WindowSet eval_setexpr(const SetExpr& e, std::uint64_t n);
inline WindowSet eval_setexpr(const SetExprPtr& e, std::uint64_t n) {
  return eval_setexpr(*e, n);
}

/// Window-free pointwise membership: decides y in e over all of N.
/// Agrees with eval_setexpr on the evaluated window.
bool setexpr_contains(const SetExpr& e, std::uint64_t y);
inline bool setexpr_contains(const SetExprPtr& e, std::uint64_t y) {
  return setexpr_contains(*e, y);
}

}  // namespace ramsey
