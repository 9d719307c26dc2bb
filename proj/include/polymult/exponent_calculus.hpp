// Integer exponent formulas: Moebius, Witt, and the nested compositions
// that appear in the multiplier structure theorems.

#ifndef POLYMULT_EXPONENT_CALCULUS_HPP_
#define POLYMULT_EXPONENT_CALCULUS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace polymult {

/// Arbitrary-precision nonnegative integer. Counts of basic commutators and
/// exponents of p in group orders grow like n^c / c, so 64 bits is not enough.
using Exponent = mpz_class;

/// The class row (c_1, ..., c_s) of a polynilpotent variety.
class ClassRow {
 public:
  /// Throws std::invalid_argument when empty or when some class is zero.
  explicit ClassRow(std::vector<unsigned> classes);

  std::size_t length() const { return classes_.size(); }
  unsigned first() const { return classes_.front(); }
  unsigned operator[](std::size_t k) const { return classes_[k]; }
  std::span<const unsigned> classes() const { return classes_; }
  std::span<const unsigned> tail() const {
    return std::span<const unsigned>(classes_).subspan(1);
  }

  friend bool operator==(const ClassRow&, const ClassRow&) = default;

 private:
  std::vector<unsigned> classes_;
};

int mobius(std::uint64_t d);

/// chi_w(n): number of basic commutators of weight w on n letters.
Exponent witt(unsigned weight, const Exponent& letters);
Exponent witt(unsigned weight, unsigned long letters);

/// chi_{c_s+1}( ... chi_{c_1+1}(letters) ... )
Exponent beta(const ClassRow& row, const Exponent& letters);

/// Applies chi_{c+1} for each c in `tail`, in order. Identity on an empty tail.
Exponent nested_tail(std::span<const unsigned> tail, const Exponent& x);

/// Inner sum sum_{j=1}^{n} chi_{c_1+j}(i) wrapped by the row tail.
/// Requires row.first() >= n >= 1.
Exponent d_exponent(const ClassRow& row, unsigned product_class,
                    const Exponent& letters);

/// sum_{i=1}^{n} chi_{c+i}(letters); requires c >= n >= 1.
Exponent f_exponent(unsigned c, unsigned n, const Exponent& letters);
/// sum_{i=1}^{c} chi_{n+i}(letters); requires n >= c >= 1.
Exponent g_exponent(unsigned c, unsigned n, const Exponent& letters);

// Multiple nilpotent products A_1 *n_1* A_2 *n_2* ... *n_k* A_{k+1}, the
// first t factors infinite. `classes` holds (n_1, ..., n_k); it must be
// nonincreasing with row.first() >= n_1.

/// Free-part inner count u. Zero when t <= 1 (every chi_w(1) with w >= 2
/// vanishes, so the undefined n_0 never matters).
Exponent u_value(const ClassRow& row, std::span<const unsigned> classes,
                 unsigned infinite_factors);

/// h_j = sum_{lambda=1}^{n_j} (chi_{c_1+lambda}(j+1) - chi_{c_1+lambda}(j)),
/// for 1 <= j <= k.
Exponent h_value(const ClassRow& row, std::span<const unsigned> classes,
                 unsigned j);

/// e_0 = tail(u) and e_i = tail(u + sum_{j=t}^{i} h_j) for t <= i <= k.
/// For t = 0 the sum starts at h_0, which is identically zero.
Exponent e_exponent(const ClassRow& row, std::span<const unsigned> classes,
                    unsigned infinite_factors, unsigned i);

/// Throws std::invalid_argument unless classes are nonincreasing, positive
/// and bounded by row.first().
void validate_multiple_classes(const ClassRow& row,
                               std::span<const unsigned> classes);

}  // namespace polymult

#endif  // POLYMULT_EXPONENT_CALCULUS_HPP_
