#include "ramsey/window_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace ramsey {

WindowSet::WindowSet(std::uint64_t n, const std::vector<std::uint64_t>& members)
    : WindowSet(n) {
  for (std::uint64_t m : members) {
    if (m < 1 || m > n) {
      throw WindowError("member " + std::to_string(m) + " outside window [1.." +
                        std::to_string(n) + "]");
    }
    set_bit(m);
  }
}

WindowSet WindowSet::from_predicate(std::uint64_t n,
                                    const std::function<bool(std::uint64_t)>& pred) {
  WindowSet out(n);
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (pred(m)) out.set_bit(m);
  }
  return out;
}

WindowSet WindowSet::full(std::uint64_t n) {
  WindowSet out(n);
  for (auto& w : out.words_) w = ~0ull;
  out.clear_tail();
  return out;
}

void WindowSet::clear_tail() {
  if (words_.empty()) return;
  const std::uint64_t used = window_max_ & 63;
  if (used != 0) words_.back() &= (~0ull) >> (64 - used);
}

std::uint64_t WindowSet::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::uint64_t WindowSet::count_prefix(std::uint64_t n) const {
  if (n > window_max_) {
    throw WindowError("prefix " + std::to_string(n) + " exceeds window " +
                      std::to_string(window_max_));
  }
  std::uint64_t c = 0;
  const std::uint64_t full_words = n >> 6;
  for (std::uint64_t i = 0; i < full_words; ++i) {
    c += static_cast<std::uint64_t>(std::popcount(words_[i]));
  }
  const std::uint64_t rem = n & 63;
  if (rem != 0) {
    c += static_cast<std::uint64_t>(
        std::popcount(words_[full_words] & ((~0ull) >> (64 - rem))));
  }
  return c;
}

std::vector<std::uint64_t> WindowSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(count());
  for_each([&](std::uint64_t m) { out.push_back(m); });
  return out;
}

std::uint64_t WindowSet::min_element() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return (static_cast<std::uint64_t>(i) << 6) +
             static_cast<std::uint64_t>(std::countr_zero(words_[i])) + 1;
    }
  }
  return 0;
}

void WindowSet::for_each(const std::function<void(std::uint64_t)>& fn) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      const int b = std::countr_zero(w);
      fn((static_cast<std::uint64_t>(i) << 6) + static_cast<std::uint64_t>(b) + 1);
      w &= w - 1;
    }
  }
}

bool WindowSet::is_subset(const WindowSet& a, const WindowSet& b) {
  if (a.window_max_ != b.window_max_) {
    throw WindowError("subset test on mismatched windows");
  }
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if ((a.words_[i] & ~b.words_[i]) != 0) return false;
  }
  return true;
}

WindowSet translate_preimage(std::uint64_t t, const WindowSet& a) {
  if (t < 1) throw DomainError("translate_preimage requires t >= 1");
  if (t >= a.window_max_) {
    throw WindowError("translate_preimage by " + std::to_string(t) +
                      " empties window [1.." + std::to_string(a.window_max_) + "]");
  }
  WindowSet out(a.window_max_ - t);
  // Bit y-1 of the result is bit (t+y)-1 of the input: a right shift by t.
  const std::uint64_t word_shift = t >> 6;
  const std::uint64_t bit_shift = t & 63;
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    std::uint64_t lo = a.words_[i + word_shift];
    std::uint64_t hi =
        (i + word_shift + 1 < a.words_.size()) ? a.words_[i + word_shift + 1] : 0;
    out.words_[i] = bit_shift == 0 ? lo : (lo >> bit_shift) | (hi << (64 - bit_shift));
  }
  out.clear_tail();
  return out;
}

DilateResult dilate(std::uint64_t n, const WindowSet& a) {
  if (n < 1) throw DomainError("dilate requires n >= 1");
  DilateResult res;
  res.set = WindowSet(a.window_max());
  a.for_each([&](std::uint64_t m) {
    if (m > a.window_max() / n) {
      res.truncated = true;
      ++res.dropped;
    } else {
      res.set.set_bit(n * m);
    }
  });
  return res;
}

WindowSet dilate_preimage(std::uint64_t n, const WindowSet& a) {
  if (n < 1) throw DomainError("dilate_preimage requires n >= 1");
  WindowSet out(a.window_max() / n);
  for (std::uint64_t y = 1; y <= out.window_max(); ++y) {
    if (a.contains(n * y)) out.set_bit(y);
  }
  return out;
}

namespace {
void require_same_window(const WindowSet& a, const WindowSet& b) {
  if (a.window_max() != b.window_max()) {
    throw WindowError("set algebra on mismatched windows (" +
                      std::to_string(a.window_max()) + " vs " +
                      std::to_string(b.window_max()) + ")");
  }
}
}  // namespace

WindowSet set_union(const WindowSet& a, const WindowSet& b) {
  require_same_window(a, b);
  WindowSet out(a.window_max());
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] = a.words_[i] | b.words_[i];
  }
  return out;
}

WindowSet set_intersect(const WindowSet& a, const WindowSet& b) {
  require_same_window(a, b);
  WindowSet out(a.window_max());
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] = a.words_[i] & b.words_[i];
  }
  return out;
}

WindowSet set_difference(const WindowSet& a, const WindowSet& b) {
  require_same_window(a, b);
  WindowSet out(a.window_max());
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] = a.words_[i] & ~b.words_[i];
  }
  return out;
}

WindowSet set_complement(const WindowSet& a) {
  WindowSet out(a.window_max());
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] = ~a.words_[i];
  }
  out.clear_tail();
  return out;
}

std::string WindowSet::to_text() const {
  std::ostringstream os;
  os << "window " << window_max_ << "\n";
  bool first = true;
  std::uint64_t run_start = 0, run_end = 0;
  auto flush = [&]() {
    if (run_start == 0) return;
    if (!first) os << ' ';
    first = false;
    if (run_start == run_end) {
      os << run_start;
    } else {
      os << run_start << '-' << run_end;
    }
  };
  for_each([&](std::uint64_t m) {
    if (run_start != 0 && m == run_end + 1) {
      run_end = m;
    } else {
      flush();
      run_start = run_end = m;
    }
  });
  flush();
  os << "\n";
  return os.str();
}

namespace {
std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}
}  // namespace

WindowSet WindowSet::from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string header;
  if (!std::getline(is, header)) throw FormatError("empty window-set text");
  constexpr std::string_view kPrefix = "window ";
  if (header.rfind(kPrefix, 0) != 0) {
    throw FormatError("window-set text must start with 'window N'");
  }
  const std::uint64_t n = parse_u64(std::string_view(header).substr(kPrefix.size()),
                                    "window size");
  WindowSet out(n);
  std::string body;
  std::getline(is, body);
  std::istringstream items(body);
  std::string item;
  std::uint64_t prev_end = 0;
  while (items >> item) {
    const auto dash = item.find('-');
    std::uint64_t lo, hi;
    if (dash == std::string::npos) {
      lo = hi = parse_u64(item, "member");
    } else {
      lo = parse_u64(std::string_view(item).substr(0, dash), "run start");
      hi = parse_u64(std::string_view(item).substr(dash + 1), "run end");
    }
    if (lo < 1 || hi < lo || hi > n) {
      throw FormatError("run '" + item + "' outside window [1.." + std::to_string(n) +
                        "]");
    }
    if (lo <= prev_end) throw FormatError("member list not sorted at '" + item + "'");
    for (std::uint64_t m = lo; m <= hi; ++m) out.set_bit(m);
    prev_end = hi;
  }
  return out;
}

}  // namespace ramsey
