#include "ramsey/semigroup.hpp"

#include <sstream>

namespace ramsey {

std::string mat2_to_string(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m.e[0] << ',' << m.e[1] << "],[" << m.e[2] << ',' << m.e[3] << "]]";
  return os.str();
}

FiniteSemigroup::FiniteSemigroup(std::string name, std::uint32_t size,
                                 std::vector<std::uint32_t> table)
    : name_(std::move(name)), size_(size), table_(std::move(table)) {
  if (size_ < 1 || size_ > 64) {
    throw DomainError("finite semigroup size must be in [1..64]");
  }
  if (table_.size() != static_cast<std::size_t>(size_) * size_) {
    throw DomainError("finite semigroup table has wrong shape");
  }
  for (std::uint32_t v : table_) {
    if (v >= size_) throw DomainError("finite semigroup table entry out of range");
  }
}

FiniteSemigroup FiniteSemigroup::cyclic(std::uint32_t n) {
  if (n < 1 || n > 64) throw DomainError("cyclic group order must be in [1..64]");
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
  }
  return FiniteSemigroup("z" + std::to_string(n), n, std::move(table));
}

FiniteSemigroup FiniteSemigroup::by_name(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'z') {
    std::uint32_t n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') {
        throw DomainError("unknown semigroup '" + name + "'");
      }
      n = n * 10 + static_cast<std::uint32_t>(name[i] - '0');
      if (n > 64) throw DomainError("cyclic group order must be in [1..64]");
    }
    return cyclic(n);
  }
  throw DomainError("unknown semigroup '" + name + "' (expected z2..z64)");
}

bool FiniteSemigroup::is_associative() const {
  for (std::uint32_t x = 0; x < size_; ++x) {
    for (std::uint32_t y = 0; y < size_; ++y) {
      for (std::uint32_t z = 0; z < size_; ++z) {
        if (op(op(x, y), z) != op(x, op(y, z))) return false;
      }
    }
  }
  return true;
}

std::uint64_t FiniteSemigroup::left_shift(std::uint32_t s, std::uint64_t e) const {
  std::uint64_t out = 0;
  for (std::uint32_t y = 0; y < size_; ++y) {
    if ((e >> y) & 1) out |= 1ull << op(s, y);
  }
  return out;
}

std::uint64_t FiniteSemigroup::right_shift(std::uint32_t s, std::uint64_t e) const {
  std::uint64_t out = 0;
  for (std::uint32_t y = 0; y < size_; ++y) {
    if ((e >> y) & 1) out |= 1ull << op(y, s);
  }
  return out;
}

std::uint64_t FiniteSemigroup::left_quotient(std::uint32_t s, std::uint64_t e) const {
  std::uint64_t out = 0;
  for (std::uint32_t y = 0; y < size_; ++y) {
    if ((e >> op(s, y)) & 1) out |= 1ull << y;
  }
  return out;
}

std::uint64_t FiniteSemigroup::right_quotient(std::uint32_t s, std::uint64_t e) const {
  std::uint64_t out = 0;
  for (std::uint32_t y = 0; y < size_; ++y) {
    if ((e >> op(y, s)) & 1) out |= 1ull << y;
  }
  return out;
}

}  // namespace ramsey
