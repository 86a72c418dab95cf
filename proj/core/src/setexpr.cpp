#include "ramsey/setexpr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr std::size_t kMaxAtomGenerators = 20;

void check_generators(const std::vector<std::uint64_t>& xs, const char* what) {
  if (xs.empty()) throw DomainError(std::string(what) + " requires k >= 1 generators");
  if (xs.size() > kMaxAtomGenerators) {
    throw DomainError(std::string(what) + " accepts at most " +
                      std::to_string(kMaxAtomGenerators) + " generators");
  }
  std::set<std::uint64_t> seen;
  for (std::uint64_t x : xs) {
    if (x < 1) throw DomainError(std::string(what) + " generators must be >= 1");
    if (!seen.insert(x).second) {
      throw DomainError(std::string(what) + " generators must be distinct");
    }
  }
}

SetExprPtr make(SetExpr node) { return std::make_shared<const SetExpr>(std::move(node)); }

}  // namespace

namespace expr {

SetExprPtr all() { return make({SetExpr::Kind::All}); }

SetExprPtr interval(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < a) throw DomainError("interval requires 1 <= a <= b");
  SetExpr n{SetExpr::Kind::Interval};
  n.p1 = a;
  n.p2 = b;
  return make(std::move(n));
}

SetExprPtr mod(std::uint64_t m, std::uint64_t r) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  if (r >= m) throw DomainError("residue must satisfy 0 <= r < m");
  SetExpr n{SetExpr::Kind::Mod};
  n.p1 = m;
  n.p2 = r;
  return make(std::move(n));
}

SetExprPtr pow2blocks() { return make({SetExpr::Kind::Pow2Blocks}); }

SetExprPtr fs(std::vector<std::uint64_t> xs) {
  check_generators(xs, "fs");
  SetExpr n{SetExpr::Kind::Fs};
  n.xs = std::move(xs);
  return make(std::move(n));
}

SetExprPtr fp(std::vector<std::uint64_t> xs) {
  check_generators(xs, "fp");
  SetExpr n{SetExpr::Kind::Fp};
  n.xs = std::move(xs);
  return make(std::move(n));
}

namespace {
SetExprPtr binary(SetExpr::Kind k, SetExprPtr l, SetExprPtr r) {
  SetExpr n{k};
  n.lhs = std::move(l);
  n.rhs = std::move(r);
  return make(std::move(n));
}
SetExprPtr scaled(SetExpr::Kind k, std::uint64_t v, SetExprPtr e, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " requires parameter >= 1");
  SetExpr n{k};
  n.p1 = v;
  n.lhs = std::move(e);
  return make(std::move(n));
}
}  // namespace

SetExprPtr union_(SetExprPtr l, SetExprPtr r) {
  return binary(SetExpr::Kind::Union, std::move(l), std::move(r));
}
SetExprPtr inter(SetExprPtr l, SetExprPtr r) {
  return binary(SetExpr::Kind::Inter, std::move(l), std::move(r));
}
SetExprPtr diff(SetExprPtr l, SetExprPtr r) {
  return binary(SetExpr::Kind::Diff, std::move(l), std::move(r));
}
SetExprPtr translate(std::uint64_t t, SetExprPtr e) {
  return scaled(SetExpr::Kind::Translate, t, std::move(e), "translate");
}
SetExprPtr tpre(std::uint64_t t, SetExprPtr e) {
  return scaled(SetExpr::Kind::TPre, t, std::move(e), "tpre");
}
SetExprPtr dilate(std::uint64_t n, SetExprPtr e) {
  return scaled(SetExpr::Kind::Dilate, n, std::move(e), "dilate");
}
SetExprPtr dpre(std::uint64_t n, SetExprPtr e) {
  return scaled(SetExpr::Kind::DPre, n, std::move(e), "dpre");
}

}  // namespace expr

// ---------------------------------------------------------------------------
// Parser: a tiny recursive-descent pass over a hand-rolled lexer. Offsets are
// byte offsets into the original text.
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c, const char* token_name) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(pos, std::string("expected '") + c + "'", {token_name});
    }
    ++pos;
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(pos, "expected number", {"number"});
    }
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (UINT64_MAX - digit) / 10) {
        throw ParseError(start, "integer literal too large", {"number"});
      }
      v = v * 10 + digit;
      ++pos;
    }
    return v;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) {
      throw ParseError(start, "expected expression", {"identifier"});
    }
    return std::string(text.substr(start, pos - start));
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_{text} {}

  SetExprPtr parse() {
    SetExprPtr e = expression();
    if (!lex_.at_end()) {
      throw ParseError(lex_.pos, "trailing input after expression", {"end of input"});
    }
    return e;
  }

 private:
  SetExprPtr expression() {
    const std::size_t start = lex_.pos;
    const std::string name = lex_.ident();
    if (name == "all") return expr::all();
    if (name == "pow2blocks") return expr::pow2blocks();
    if (name == "interval") {
      auto [a, b] = two_numbers();
      return expr::interval(a, b);
    }
    if (name == "mod") {
      auto [m, r] = two_numbers();
      return expr::mod(m, r);
    }
    if (name == "fs") return expr::fs(number_list());
    if (name == "fp") return expr::fp(number_list());
    if (name == "union") return binary(&expr::union_);
    if (name == "inter") return binary(&expr::inter);
    if (name == "diff") return binary(&expr::diff);
    if (name == "translate") return scaled(&expr::translate);
    if (name == "tpre") return scaled(&expr::tpre);
    if (name == "dilate") return scaled(&expr::dilate);
    if (name == "dpre") return scaled(&expr::dpre);
    throw ParseError(start, "unknown set constructor '" + name + "'",
                     {"all", "interval", "mod", "pow2blocks", "fs", "fp", "union",
                      "inter", "diff", "translate", "tpre", "dilate", "dpre"});
  }

  std::pair<std::uint64_t, std::uint64_t> two_numbers() {
    lex_.expect('(', "'('");
    const std::uint64_t a = lex_.number();
    lex_.expect(',', "','");
    const std::uint64_t b = lex_.number();
    lex_.expect(')', "')'");
    return {a, b};
  }

  std::vector<std::uint64_t> number_list() {
    lex_.expect('(', "'('");
    std::vector<std::uint64_t> xs;
    xs.push_back(lex_.number());
    while (lex_.peek() == ',') {
      lex_.expect(',', "','");
      xs.push_back(lex_.number());
    }
    lex_.expect(')', "')'");
    return xs;
  }

  SetExprPtr binary(SetExprPtr (*ctor)(SetExprPtr, SetExprPtr)) {
    lex_.expect('(', "'('");
    SetExprPtr l = expression();
    lex_.expect(',', "','");
    SetExprPtr r = expression();
    lex_.expect(')', "')'");
    return ctor(std::move(l), std::move(r));
  }

  SetExprPtr scaled(SetExprPtr (*ctor)(std::uint64_t, SetExprPtr)) {
    lex_.expect('(', "'('");
    const std::uint64_t v = lex_.number();
    lex_.expect(',', "','");
    SetExprPtr e = expression();
    lex_.expect(')', "')'");
    return ctor(v, std::move(e));
  }

  Lexer lex_;
};

}  // namespace

SetExprPtr parse_setexpr(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

void print_into(const SetExpr& e, std::ostringstream& os) {
  using K = SetExpr::Kind;
  auto numbers = [&](const char* name) {
    os << name << '(' << e.p1 << ',' << e.p2 << ')';
  };
  auto list = [&](const char* name) {
    os << name << '(';
    for (std::size_t i = 0; i < e.xs.size(); ++i) {
      if (i != 0) os << ',';
      os << e.xs[i];
    }
    os << ')';
  };
  auto binary = [&](const char* name) {
    os << name << '(';
    print_into(*e.lhs, os);
    os << ", ";
    print_into(*e.rhs, os);
    os << ')';
  };
  auto scaled = [&](const char* name) {
    os << name << '(' << e.p1 << ", ";
    print_into(*e.lhs, os);
    os << ')';
  };
  switch (e.kind) {
    case K::All: os << "all"; break;
    case K::Pow2Blocks: os << "pow2blocks"; break;
    case K::Interval: numbers("interval"); break;
    case K::Mod: numbers("mod"); break;
    case K::Fs: list("fs"); break;
    case K::Fp: list("fp"); break;
    case K::Union: binary("union"); break;
    case K::Inter: binary("inter"); break;
    case K::Diff: binary("diff"); break;
    case K::Translate: scaled("translate"); break;
    case K::TPre: scaled("tpre"); break;
    case K::Dilate: scaled("dilate"); break;
    case K::DPre: scaled("dpre"); break;
  }
}

}  // namespace

std::string print_setexpr(const SetExpr& e) {
  std::ostringstream os;
  print_into(e, os);
  return os.str();
}

bool structurally_equal(const SetExpr& a, const SetExpr& b) {
  if (a.kind != b.kind || a.p1 != b.p1 || a.p2 != b.p2 || a.xs != b.xs) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

WindowSet restrict_to(const WindowSet& a, std::uint64_t n) {
  if (a.window_max() == n) return a;
  WindowSet out = WindowSet::from_predicate(n, [&](std::uint64_t m) {
    return a.contains(m);
  });
  return out;
}

// All subset sums (or products) of xs that stay within [1..n].
void fs_values_into(const std::vector<std::uint64_t>& xs, std::uint64_t n,
                    std::vector<std::uint64_t>& out) {
  std::vector<std::uint64_t> sums;
  sums.reserve(1);
  for (std::uint64_t x : xs) {
    const std::size_t old = sums.size();
    if (x <= n) sums.push_back(x);
    for (std::size_t i = 0; i < old; ++i) {
      if (sums[i] <= n - x) sums.push_back(sums[i] + x);
    }
  }
  out = std::move(sums);
}

void fp_values_into(const std::vector<std::uint64_t>& xs, std::uint64_t n,
                    std::vector<std::uint64_t>& out) {
  std::vector<std::uint64_t> prods;
  for (std::uint64_t x : xs) {
    const std::size_t old = prods.size();
    if (x <= n) prods.push_back(x);
    for (std::size_t i = 0; i < old; ++i) {
      if (x != 0 && prods[i] <= n / x) prods.push_back(prods[i] * x);
    }
  }
  out = std::move(prods);
}

}  // namespace

WindowSet eval_setexpr(const SetExpr& e, std::uint64_t n) {
  using K = SetExpr::Kind;
  switch (e.kind) {
    case K::All:
      return WindowSet::full(n);
    case K::Interval: {
      WindowSet out(n);
      if (e.p1 > n) return out;
      std::vector<std::uint64_t> ms;
      for (std::uint64_t m = e.p1; m <= std::min(e.p2, n); ++m) ms.push_back(m);
      return WindowSet(n, ms);
    }
    case K::Mod: {
      const std::uint64_t m = e.p1, r = e.p2;
      return WindowSet::from_predicate(n, [&](std::uint64_t y) { return y % m == r; });
    }
    case K::Pow2Blocks: {
      WindowSet out(n);
      std::vector<std::uint64_t> ms;
      for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t lo = 1ull << k;
        if (lo > n) break;
        for (std::uint64_t y = lo; y <= std::min(lo + k, n); ++y) ms.push_back(y);
        if (k >= 62) break;
      }
      return WindowSet(n, ms);
    }
    case K::Fs: {
      std::vector<std::uint64_t> vals;
      fs_values_into(e.xs, n, vals);
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      return WindowSet(n, vals);
    }
    case K::Fp: {
      std::vector<std::uint64_t> vals;
      fp_values_into(e.xs, n, vals);
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      return WindowSet(n, vals);
    }
    case K::Union:
    case K::Inter:
    case K::Diff: {
      WindowSet l = eval_setexpr(*e.lhs, n);
      WindowSet r = eval_setexpr(*e.rhs, n);
      const std::uint64_t w = std::min(l.window_max(), r.window_max());
      l = restrict_to(l, w);
      r = restrict_to(r, w);
      if (e.kind == K::Union) return set_union(l, r);
      if (e.kind == K::Inter) return set_intersect(l, r);
      return set_difference(l, r);
    }
    case K::Translate:
    case K::TPre:
      return translate_preimage(e.p1, eval_setexpr(*e.lhs, n));
    case K::Dilate:
      return dilate(e.p1, eval_setexpr(*e.lhs, n)).set;
    case K::DPre:
      return dilate_preimage(e.p1, eval_setexpr(*e.lhs, n));
  }
  throw DomainError("unreachable setexpr kind");
}

namespace {

bool subset_sum_hits(const std::vector<std::uint64_t>& sorted_desc, std::size_t i,
                     std::uint64_t remaining, const std::vector<std::uint64_t>& suffix) {
  if (remaining == 0) return true;
  if (i >= sorted_desc.size()) return false;
  if (suffix[i] < remaining) return false;
  if (sorted_desc[i] <= remaining &&
      subset_sum_hits(sorted_desc, i + 1, remaining - sorted_desc[i], suffix)) {
    return true;
  }
  return subset_sum_hits(sorted_desc, i + 1, remaining, suffix);
}

bool subset_product_hits(const std::vector<std::uint64_t>& xs, std::size_t i,
                         std::uint64_t remaining) {
  if (remaining == 1) {
    // Either we've used at least one factor already (handled by caller), or
    // 1 itself is a generator.
    return true;
  }
  if (i >= xs.size()) return false;
  if (xs[i] != 0 && remaining % xs[i] == 0 &&
      subset_product_hits(xs, i + 1, remaining / xs[i])) {
    return true;
  }
  return subset_product_hits(xs, i + 1, remaining);
}

}  // namespace

bool setexpr_contains(const SetExpr& e, std::uint64_t y) {
  using K = SetExpr::Kind;
  if (y < 1) return false;
  switch (e.kind) {
    case K::All:
      return true;
    case K::Interval:
      return e.p1 <= y && y <= e.p2;
    case K::Mod:
      return y % e.p1 == e.p2;
    case K::Pow2Blocks: {
      if (y < 2) return false;
      std::uint64_t k = 63 - static_cast<std::uint64_t>(std::countl_zero(y));
      const std::uint64_t lo = 1ull << k;
      return y >= lo && y - lo <= k;
    }
    case K::Fs: {
      std::uint64_t total = 0;
      for (std::uint64_t x : e.xs) {
        if (total > UINT64_MAX - x) { total = UINT64_MAX; break; }
        total += x;
      }
      if (y > total) return false;
      std::vector<std::uint64_t> sorted(e.xs);
      std::sort(sorted.rbegin(), sorted.rend());
      std::vector<std::uint64_t> suffix(sorted.size() + 1, 0);
      for (std::size_t i = sorted.size(); i > 0; --i) {
        suffix[i - 1] = suffix[i] > UINT64_MAX - sorted[i - 1] ? UINT64_MAX
                                                               : suffix[i] + sorted[i - 1];
      }
      // Nonempty subsets only: y >= min generator > 0 makes remaining==0 with
      // no picks impossible except y==0, excluded above.
      return subset_sum_hits(sorted, 0, y, suffix);
    }
    case K::Fp: {
      if (y == 1) {
        return std::find(e.xs.begin(), e.xs.end(), 1ull) != e.xs.end();
      }
      std::vector<std::uint64_t> nontrivial;
      for (std::uint64_t x : e.xs) {
        if (x > 1) nontrivial.push_back(x);
      }
      std::sort(nontrivial.rbegin(), nontrivial.rend());
      return subset_product_hits(nontrivial, 0, y);
    }
    case K::Union:
      return setexpr_contains(*e.lhs, y) || setexpr_contains(*e.rhs, y);
    case K::Inter:
      return setexpr_contains(*e.lhs, y) && setexpr_contains(*e.rhs, y);
    case K::Diff:
      return setexpr_contains(*e.lhs, y) && !setexpr_contains(*e.rhs, y);
    case K::Translate:
    case K::TPre:
      if (y > UINT64_MAX - e.p1) throw OverflowError("translate membership overflow");
      return setexpr_contains(*e.lhs, y + e.p1);
    case K::Dilate:
      return y % e.p1 == 0 && setexpr_contains(*e.lhs, y / e.p1);
    case K::DPre:
      if (e.p1 != 0 && y > UINT64_MAX / e.p1) {
        throw OverflowError("dpre membership overflow");
      }
      return setexpr_contains(*e.lhs, y * e.p1);
  }
  throw DomainError("unreachable setexpr kind");
}

}  // namespace ramsey
