#include "polymult/exponent_calculus.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace polymult {

ClassRow::ClassRow(std::vector<unsigned> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("class row must be nonempty");
  for (unsigned c : classes_)
    if (c == 0) throw std::invalid_argument("class row entries must be >= 1");
}

int mobius(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("mobius: argument must be >= 1");
  int sign = 1;
  for (std::uint64_t q = 2; q <= d / q; ++q) {
    if (d % q != 0) continue;
    d /= q;
    if (d % q == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

namespace {

class WittCache {
 public:
  bool lookup(unsigned w, const Exponent& n, Exponent& out) {
    std::lock_guard lock(mutex_);
    auto it = values_.find({w, n});
    if (it == values_.end()) return false;
    out = it->second;
    return true;
  }
  void store(unsigned w, const Exponent& n, const Exponent& value) {
    std::lock_guard lock(mutex_);
    if (values_.size() >= kMaxEntries) values_.clear();
    values_.emplace(std::pair{w, n}, value);
  }

 private:
  static constexpr std::size_t kMaxEntries = 1 << 16;
  std::mutex mutex_;
  std::map<std::pair<unsigned, Exponent>, Exponent> values_;
};

WittCache& witt_cache() {
  static WittCache cache;
  return cache;
}

Exponent witt_uncached(unsigned w, const Exponent& n) {
  Exponent sum = 0;
  for (unsigned d = 1; d <= w; ++d) {
    if (w % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Exponent power;
    mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), w / d);
    if (mu > 0)
      sum += power;
    else
      sum -= power;
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), w))
    throw std::logic_error("witt: divisor sum not divisible by the weight");
  Exponent result = sum / w;
  return result;
}

}  // namespace

Exponent witt(unsigned weight, const Exponent& letters) {
  if (weight == 0) throw std::invalid_argument("witt: weight must be >= 1");
  if (letters < 0) throw std::invalid_argument("witt: letter count must be >= 0");
  Exponent value;
  if (witt_cache().lookup(weight, letters, value)) return value;
  value = witt_uncached(weight, letters);
  witt_cache().store(weight, letters, value);
  return value;
}

Exponent witt(unsigned weight, unsigned long letters) {
  return witt(weight, Exponent(letters));
}

Exponent nested_tail(std::span<const unsigned> tail, const Exponent& x) {
  Exponent value = x;
  for (unsigned c : tail) value = witt(c + 1, value);
  return value;
}

Exponent beta(const ClassRow& row, const Exponent& letters) {
  return nested_tail(row.tail(), witt(row.first() + 1, letters));
}

Exponent d_exponent(const ClassRow& row, unsigned product_class,
                    const Exponent& letters) {
  if (product_class == 0)
    throw std::invalid_argument("d_exponent: product class must be >= 1");
  if (row.first() < product_class)
    throw std::invalid_argument("d_exponent: requires c_1 >= n (c_1 = " +
                                std::to_string(row.first()) + ", n = " +
                                std::to_string(product_class) + ")");
  Exponent inner = 0;
  for (unsigned j = 1; j <= product_class; ++j) inner += witt(row.first() + j, letters);
  return nested_tail(row.tail(), inner);
}

Exponent f_exponent(unsigned c, unsigned n, const Exponent& letters) {
  if (n == 0 || c < n)
    throw std::invalid_argument("f_exponent: requires c >= n >= 1");
  Exponent sum = 0;
  for (unsigned i = 1; i <= n; ++i) sum += witt(c + i, letters);
  return sum;
}

Exponent g_exponent(unsigned c, unsigned n, const Exponent& letters) {
  if (c == 0 || n < c)
    throw std::invalid_argument("g_exponent: requires n >= c >= 1");
  Exponent sum = 0;
  for (unsigned i = 1; i <= c; ++i) sum += witt(n + i, letters);
  return sum;
}

void validate_multiple_classes(const ClassRow& row,
                               std::span<const unsigned> classes) {
  for (std::size_t j = 0; j < classes.size(); ++j) {
    if (classes[j] == 0)
      throw std::invalid_argument("product classes must be >= 1");
    if (j > 0 && classes[j] > classes[j - 1])
      throw std::invalid_argument("product classes must be nonincreasing");
  }
  if (!classes.empty() && classes[0] > row.first())
    throw std::invalid_argument("requires c_1 >= n_1 (c_1 = " +
                                std::to_string(row.first()) + ", n_1 = " +
                                std::to_string(classes[0]) + ")");
}

Exponent u_value(const ClassRow& row, std::span<const unsigned> classes,
                 unsigned infinite_factors) {
  validate_multiple_classes(row, classes);
  const unsigned t = infinite_factors;
  if (t <= 1) return 0;
  if (classes.size() < t - 1)
    throw std::invalid_argument("u_value: need a class between every pair of infinite factors");
  const unsigned c1 = row.first();
  // classes[j-1] is n_j
  Exponent u = 0;
  for (unsigned j = 1; j <= classes[t - 2]; ++j) u += witt(c1 + j, t);
  for (unsigned i = 1; i + 2 <= t; ++i)
    for (unsigned j = classes[i] + 1; j <= classes[i - 1]; ++j) u += witt(c1 + j, i + 1);
  return u;
}

Exponent h_value(const ClassRow& row, std::span<const unsigned> classes,
                 unsigned j) {
  validate_multiple_classes(row, classes);
  if (j == 0 || j > classes.size())
    throw std::invalid_argument("h_value: index j must satisfy 1 <= j <= k");
  const unsigned c1 = row.first();
  Exponent h = 0;
  for (unsigned lambda = 1; lambda <= classes[j - 1]; ++lambda)
    h += witt(c1 + lambda, j + 1) - witt(c1 + lambda, j);
  return h;
}

Exponent e_exponent(const ClassRow& row, std::span<const unsigned> classes,
                    unsigned infinite_factors, unsigned i) {
  const unsigned t = infinite_factors;
  const std::size_t k = classes.size();
  Exponent inner = u_value(row, classes, t);
  if (i == 0 && t > 0) return nested_tail(row.tail(), inner);
  if (i < t || i > k)
    throw std::invalid_argument("e_exponent: index must be 0 or within [t, k]");
  for (unsigned j = std::max(t, 1u); j <= i; ++j) inner += h_value(row, classes, j);
  return nested_tail(row.tail(), inner);
}

}  // namespace polymult
