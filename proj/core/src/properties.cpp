#include "ramsey/properties.hpp"

#include <algorithm>
#include <charconv>

#include "ramsey/errors.hpp"

namespace ramsey {

std::string status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds-with-witness";
    case Status::Fails: return "fails-on-window";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// NatSeq
// ---------------------------------------------------------------------------

NatSeq NatSeq::affine(std::uint64_t mul, std::uint64_t add) {
  if (mul == 0 && add == 0) throw DomainError("affine sequence must not be constant 0");
  NatSeq s;
  s.mul = mul;
  s.add = add;
  return s;
}

NatSeq NatSeq::from_prefix(std::vector<std::uint64_t> values) {
  if (values.empty()) throw DomainError("sequence prefix must be nonempty");
  for (std::uint64_t v : values) {
    if (v < 1) throw DomainError("sequence values must be >= 1");
  }
  NatSeq s;
  s.prefix = std::move(values);
  return s;
}

std::uint64_t NatSeq::at(std::uint64_t n) const {
  if (n < 1) throw DomainError("sequence indices are 1-based");
  if (is_prefix()) {
    if (n > prefix.size()) {
      throw DomainError("sequence index " + std::to_string(n) + " beyond prefix of " +
                        std::to_string(prefix.size()));
    }
    return prefix[n - 1];
  }
  const std::uint64_t scaled = detail::checked_mul(mul, n, "sequence");
  return detail::checked_add(scaled, add, "sequence");
}

namespace {

std::uint64_t parse_number_at(std::string_view s, std::size_t& pos) {
  std::uint64_t v = 0;
  const auto* begin = s.data() + pos;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr == begin) {
    throw DomainError("invalid sequence '" + std::string(s) + "'");
  }
  pos += static_cast<std::size_t>(ptr - begin);
  return v;
}

}  // namespace

NatSeq NatSeq::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw DomainError("empty sequence");
  if (compact.front() == '[') {
    if (compact.back() != ']') throw DomainError("unterminated sequence prefix");
    std::vector<std::uint64_t> values;
    std::size_t pos = 1;
    while (pos < compact.size() - 1) {
      values.push_back(parse_number_at(compact, pos));
      if (pos < compact.size() - 1) {
        if (compact[pos] != ',') throw DomainError("expected ',' in sequence prefix");
        ++pos;
      }
    }
    return from_prefix(std::move(values));
  }
  // Affine forms: "n", "3n", "2n+1", "7".
  std::size_t pos = 0;
  std::uint64_t mul = 0, add = 0;
  if (compact[pos] == 'n') {
    mul = 1;
    ++pos;
  } else {
    const std::uint64_t v = parse_number_at(compact, pos);
    if (pos < compact.size() && compact[pos] == 'n') {
      mul = v;
      ++pos;
    } else {
      add = v;
    }
  }
  if (pos < compact.size()) {
    if (compact[pos] != '+' || mul == 0) {
      throw DomainError("invalid sequence '" + std::string(text) + "'");
    }
    ++pos;
    add = parse_number_at(compact, pos);
    if (pos != compact.size()) {
      throw DomainError("invalid sequence '" + std::string(text) + "'");
    }
  }
  return affine(mul, add);
}

std::string NatSeq::to_string() const {
  if (is_prefix()) {
    std::string out = "[";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(prefix[i]);
    }
    return out + "]";
  }
  std::string out;
  if (mul == 1) {
    out = "n";
  } else if (mul > 1) {
    out = std::to_string(mul) + "n";
  }
  if (add != 0 || mul == 0) {
    if (!out.empty()) out += '+';
    out += std::to_string(add);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

namespace {

void validate_offsets(const std::vector<std::uint64_t>& f, const char* what) {
  if (f.empty()) throw DomainError(std::string(what) + " must be nonempty");
}

std::uint64_t max_of(const std::vector<std::uint64_t>& v) {
  return *std::max_element(v.begin(), v.end());
}

constexpr const char* kThickSound =
    "pass is globally sound for this F; fail only refutes on the window";
constexpr const char* kSyndeticSound =
    "fail (an uncovered point) is globally sound; pass only covers the window";
constexpr const char* kPsSound =
    "pass is globally sound for this (G,F); fail only refutes on the window";
constexpr const char* kSearchSound =
    "pass is globally sound (the witness re-verifies); fail or inconclusive only "
    "exhausts the stated bounds";

}  // namespace

ThickVerdict check_thick(const WindowSet& a, const std::vector<std::uint64_t>& f) {
  validate_offsets(f, "F");
  const std::uint64_t n = a.window_max();
  const std::uint64_t fmax = max_of(f);
  if (fmax >= n) throw DomainError("max F must be smaller than the window");
  ThickVerdict v;
  v.soundness = kThickSound;
  for (std::uint64_t x = 1; x + fmax <= n; ++x) {
    bool all = true;
    for (std::uint64_t off : f) {
      if (!a.contains(off + x)) {
        all = false;
        break;
      }
    }
    if (all) {
      v.status = Status::Holds;
      v.witness = x;
      return v;
    }
  }
  v.status = Status::Fails;
  return v;
}

SyndeticVerdict check_syndetic(const WindowSet& a, const std::vector<std::uint64_t>& g) {
  validate_offsets(g, "G");
  for (std::uint64_t t : g) {
    if (t < 1) throw DomainError("G must contain positive translations");
  }
  const std::uint64_t n = a.window_max();
  const std::uint64_t gmax = max_of(g);
  SyndeticVerdict v;
  v.soundness = kSyndeticSound;
  v.covered_up_to = gmax < n ? n - gmax : 0;
  for (std::uint64_t y = 1; y <= v.covered_up_to; ++y) {
    bool covered = false;
    for (std::uint64_t t : g) {
      if (a.contains(t + y)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      v.status = Status::Fails;
      v.hole = y;
      return v;
    }
  }
  v.status = Status::Holds;
  return v;
}

PiecewiseVerdict check_piecewise_syndetic(const WindowSet& a,
                                          const std::vector<std::uint64_t>& g,
                                          const std::vector<std::uint64_t>& f) {
  validate_offsets(g, "G");
  validate_offsets(f, "F");
  for (std::uint64_t t : g) {
    if (t < 1) throw DomainError("G must contain positive translations");
  }
  const std::uint64_t n = a.window_max();
  const std::uint64_t gmax = max_of(g);
  const std::uint64_t fmax = max_of(f);
  PiecewiseVerdict v;
  v.soundness = kPsSound;
  v.status = Status::Fails;
  if (gmax + fmax >= n) return v;  // no x is fully decidable on this window
  const std::uint64_t limit = n - gmax - fmax;
  for (std::uint64_t x = 1; x <= limit; ++x) {
    bool all = true;
    for (std::uint64_t off : f) {
      bool covered = false;
      for (std::uint64_t t : g) {
        if (a.contains(t + off + x)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        all = false;
        break;
      }
    }
    if (all) {
      v.status = Status::Holds;
      v.witness = x;
      return v;
    }
  }
  return v;
}

namespace {

// DFS for the lexicographically least IP witness. Every partial candidate
// keeps all finite sums of its prefix inside A (and inside the window).
bool ip_dfs(const WindowSet& a, std::uint32_t k, std::uint64_t search_bound,
            std::vector<std::uint64_t>& xs, std::vector<std::uint64_t>& sums,
            BudgetUse& budget) {
  if (xs.size() == k) return true;
  const std::uint64_t start = xs.empty() ? 1 : xs.back() + 1;
  for (std::uint64_t x = start; x <= search_bound; ++x) {
    if (budget.explored >= budget.limit) return false;
    ++budget.explored;
    if (!a.contains(x)) continue;
    bool ok = true;
    for (std::uint64_t s : sums) {
      if (s + x > a.window_max() || !a.contains(s + x)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const std::size_t old_size = sums.size();
    sums.push_back(x);
    for (std::size_t i = 0; i < old_size; ++i) sums.push_back(sums[i] + x);
    xs.push_back(x);
    if (ip_dfs(a, k, search_bound, xs, sums, budget)) return true;
    xs.pop_back();
    sums.resize(old_size);
  }
  return false;
}

}  // namespace

IpVerdict check_ip_depth(const WindowSet& a, std::uint32_t k, std::uint64_t search_bound,
                         std::uint64_t node_budget) {
  if (k < 1) throw DomainError("IP depth must be >= 1");
  if (search_bound < 1) throw DomainError("search bound must be >= 1");
  IpVerdict v;
  v.soundness = kSearchSound;
  v.budget.limit = node_budget;
  std::vector<std::uint64_t> xs, sums;
  if (ip_dfs(a, k, search_bound, xs, sums, v.budget)) {
    v.status = Status::Holds;
    v.witness = xs;
    return v;
  }
  if (v.budget.explored >= v.budget.limit) {
    v.status = Status::Inconclusive;
    v.budget.budget_exhausted = true;
  } else {
    v.status = Status::Fails;
    v.budget.space_exhausted = true;
  }
  return v;
}

namespace {

// Sums saturate instead of wrapping; a saturated sum simply fails the
// membership test.
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

}  // namespace

JsetVerdict check_jset_commutative(const WindowSet& a, const std::vector<NatSeq>& fseqs,
                                   std::uint64_t a_bound, std::uint32_t h_bound,
                                   std::uint64_t node_budget) {
  if (fseqs.empty()) throw DomainError("jset check requires a nonempty family");
  if (a_bound < 1 || h_bound < 1) throw DomainError("jset bounds must be >= 1");
  if (h_bound > 30) throw DomainError("h_bound must be <= 30");
  JsetVerdict v;
  v.soundness = kSearchSound;
  v.budget.limit = node_budget;

  // Prefix sequences shorter than h_bound restrict the index range.
  std::uint32_t eff_h = h_bound;
  for (const auto& f : fseqs) {
    if (f.is_prefix()) {
      eff_h = std::min<std::uint32_t>(eff_h, static_cast<std::uint32_t>(f.prefix.size()));
    }
  }
  std::vector<std::vector<std::uint64_t>> f_at(fseqs.size());
  for (std::size_t i = 0; i < fseqs.size(); ++i) {
    for (std::uint32_t t = 1; t <= eff_h; ++t) f_at[i].push_back(fseqs[i].at(t));
  }

  for (std::uint64_t shift = 1; shift <= a_bound; ++shift) {
    for (std::uint64_t mask = 1; mask < (1ull << eff_h); ++mask) {
      if (v.budget.explored >= node_budget) {
        v.status = Status::Inconclusive;
        v.budget.budget_exhausted = true;
        return v;
      }
      ++v.budget.explored;
      bool all = true;
      for (const auto& values : f_at) {
        std::uint64_t sum = shift;
        for (std::uint32_t t = 0; t < eff_h; ++t) {
          if ((mask >> t) & 1) sum = sat_add(sum, values[t]);
        }
        if (sum > a.window_max() || !a.contains(sum)) {
          all = false;
          break;
        }
      }
      if (all) {
        JsetWitness w;
        w.a = shift;
        for (std::uint32_t t = 0; t < eff_h; ++t) {
          if ((mask >> t) & 1) w.h.push_back(t + 1);
        }
        v.status = Status::Holds;
        v.witness = std::move(w);
        return v;
      }
    }
  }
  v.status = Status::Fails;
  v.budget.space_exhausted = true;
  return v;
}

ApVerdict check_ap_length(const WindowSet& a, std::uint64_t k) {
  if (k < 1) throw DomainError("AP length must be >= 1");
  ApVerdict v;
  v.soundness = kSearchSound;
  const std::uint64_t n = a.window_max();
  for (std::uint64_t start = 1; start + (k - 1) <= n; ++start) {
    if (!a.contains(start)) continue;
    if (k == 1) {
      v.status = Status::Holds;
      v.witness = ApWitness{start, 1};
      return v;
    }
    const std::uint64_t dmax = (n - start) / (k - 1);
    for (std::uint64_t d = 1; d <= dmax; ++d) {
      bool all = true;
      for (std::uint64_t i = 1; i < k; ++i) {
        if (!a.contains(start + i * d)) {
          all = false;
          break;
        }
      }
      if (all) {
        v.status = Status::Holds;
        v.witness = ApWitness{start, d};
        return v;
      }
    }
  }
  v.status = Status::Fails;
  return v;
}

DensityResult upper_density_prefix(const WindowSet& a, std::uint64_t n) {
  if (n < 1) throw DomainError("prefix length must be >= 1");
  if (n > a.window_max()) throw DomainError("prefix length exceeds window");
  DensityResult out;
  std::uint64_t count = 0;
  std::uint64_t best_num = 0, best_den = 1, best_arg = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (a.contains(m)) ++count;
    // count/m > best_num/best_den, exactly.
    if (static_cast<unsigned __int128>(count) * best_den >
        static_cast<unsigned __int128>(best_num) * m) {
      best_num = count;
      best_den = m;
      best_arg = m;
    }
  }
  out.at_n = make_rational(count, n);
  out.running_max = make_rational(best_num, best_den);
  out.argmax = best_arg;
  return out;
}

BigRational harmonic_partial_sum(const WindowSet& a, std::uint64_t n) {
  if (n > a.window_max()) throw DomainError("prefix length exceeds window");
  BigRational sum = 0;
  a.for_each([&](std::uint64_t m) {
    if (m <= n) sum += make_rational(1, m);
  });
  return sum;
}

// ---------------------------------------------------------------------------
// Re-verification by direct membership
// ---------------------------------------------------------------------------

bool reverify_thick(const WindowSet& a, const std::vector<std::uint64_t>& f,
                    std::uint64_t x) {
  for (std::uint64_t off : f) {
    if (!a.contains(off + x)) return false;
  }
  return true;
}

bool reverify_syndetic_hole(const WindowSet& a, const std::vector<std::uint64_t>& g,
                            std::uint64_t hole) {
  if (hole < 1 || hole > a.window_max() - max_of(g)) return false;
  for (std::uint64_t t : g) {
    if (a.contains(t + hole)) return false;
  }
  return true;
}

bool reverify_syndetic_cover(const WindowSet& a, const std::vector<std::uint64_t>& g) {
  const std::uint64_t gmax = max_of(g);
  if (gmax >= a.window_max()) return true;
  for (std::uint64_t y = 1; y <= a.window_max() - gmax; ++y) {
    bool covered = false;
    for (std::uint64_t t : g) {
      if (a.contains(t + y)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool reverify_piecewise(const WindowSet& a, const std::vector<std::uint64_t>& g,
                        const std::vector<std::uint64_t>& f, std::uint64_t x) {
  for (std::uint64_t off : f) {
    bool covered = false;
    for (std::uint64_t t : g) {
      if (a.contains(t + off + x)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool reverify_ip(const WindowSet& a, const std::vector<std::uint64_t>& xs) {
  if (xs.empty()) return false;
  std::vector<std::uint64_t> sums;
  for (std::uint64_t x : xs) {
    const std::size_t old_size = sums.size();
    sums.push_back(x);
    for (std::size_t i = 0; i < old_size; ++i) sums.push_back(sat_add(sums[i], x));
  }
  for (std::uint64_t s : sums) {
    if (s > a.window_max() || !a.contains(s)) return false;
  }
  return true;
}

bool reverify_jset(const WindowSet& a, const std::vector<NatSeq>& fseqs,
                   const JsetWitness& w) {
  if (w.h.empty()) return false;
  for (const auto& f : fseqs) {
    std::uint64_t sum = w.a;
    for (std::uint64_t t : w.h) sum = sat_add(sum, f.at(t));
    if (sum > a.window_max() || !a.contains(sum)) return false;
  }
  return true;
}

bool reverify_ap(const WindowSet& a, std::uint64_t k, const ApWitness& w) {
  if (w.d < 1) return false;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (!a.contains(w.a + i * w.d)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Non-commutative check, (N,+) instantiation
// ---------------------------------------------------------------------------

namespace {

/// Additive monoid completion ofN: elements may be 0 so that shift tuples of
/// every total >= 1 are expressible.
struct Nat0Add {
  using Element = std::uint64_t;
  Element combine(Element a, Element b) const { return detail::checked_add(a, b, "nat0"); }
  std::string name() const { return "nat0-add"; }
  bool commutative() const { return true; }
  std::optional<Element> identity() const { return 0; }
  Element sample(std::mt19937_64& rng) const { return rng() % 100; }
  std::string to_string(Element a) const { return std::to_string(a); }
};

}  // namespace

JsetVerdict check_jset_noncommutative_nat(const WindowSet& a,
                                          const std::vector<NatSeq>& fseqs,
                                          std::uint64_t total_bound,
                                          std::uint32_t m_bound, std::uint64_t t_bound,
                                          std::uint64_t node_budget) {
  if (fseqs.empty()) throw DomainError("jset check requires a nonempty family");
  if (total_bound < 1 || m_bound < 1 || t_bound < 1) {
    throw DomainError("jset bounds must be >= 1");
  }
  JsetVerdict v;
  v.soundness = kSearchSound;
  v.budget.limit = node_budget;
  const Nat0Add inst;

  std::uint64_t eff_t = t_bound;
  for (const auto& f : fseqs) {
    if (f.is_prefix()) eff_t = std::min<std::uint64_t>(eff_t, f.prefix.size());
  }

  std::vector<std::uint64_t> t;
  std::vector<std::uint64_t> tuple;

  auto try_candidate = [&](std::uint32_t m) -> bool {
    ++v.budget.explored;
    for (const auto& f : fseqs) {
      const std::uint64_t val = x_product(inst, m, tuple, t,
                                          [&](std::uint64_t n) { return f.at(n); });
      if (val > a.window_max() || !a.contains(val)) return false;
    }
    JsetWitness w;
    w.a = 0;
    for (std::uint64_t entry : tuple) w.a += entry;
    w.h = t;
    v.status = Status::Holds;
    v.witness = std::move(w);
    return true;
  };

  // Compositions of `remaining` into the open slots, lexicographic.
  auto search_tuple = [&](auto&& self, std::uint32_t m, std::size_t pos,
                          std::uint64_t remaining) -> bool {
    if (v.budget.explored >= node_budget) return false;
    if (pos + 1 == tuple.size()) {
      tuple[pos] = remaining;
      return try_candidate(m);
    }
    for (std::uint64_t part = 0; part <= remaining; ++part) {
      tuple[pos] = part;
      if (self(self, m, pos + 1, remaining - part)) return true;
      if (v.budget.explored >= node_budget) return false;
    }
    return false;
  };

  auto search_t = [&](auto&& self, std::uint32_t m, std::uint64_t next_min,
                      std::uint32_t remaining) -> bool {
    if (remaining == 0) {
      tuple.assign(static_cast<std::size_t>(m) + 1, 0);
      for (std::uint64_t total = 1; total <= total_bound; ++total) {
        if (search_tuple(search_tuple, m, 0, total)) return true;
        if (v.budget.explored >= node_budget) return false;
      }
      return false;
    }
    for (std::uint64_t val = next_min; val + remaining - 1 <= eff_t; ++val) {
      t.push_back(val);
      if (self(self, m, val + 1, remaining - 1)) return true;
      t.pop_back();
      if (v.budget.explored >= node_budget) return false;
    }
    return false;
  };

  for (std::uint32_t m = 1; m <= m_bound; ++m) {
    t.clear();
    if (search_t(search_t, m, 1, m)) return v;
    if (v.budget.explored >= node_budget) {
      v.status = Status::Inconclusive;
      v.budget.budget_exhausted = true;
      return v;
    }
  }
  v.status = Status::Fails;
  v.budget.space_exhausted = true;
  return v;
}

}  // namespace ramsey
