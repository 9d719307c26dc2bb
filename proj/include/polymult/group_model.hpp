// Symbolic groups (free/cyclic factors joined by nilpotent products),
// polynilpotent varieties, and computed abelian structures.

#ifndef POLYMULT_GROUP_MODEL_HPP_
#define POLYMULT_GROUP_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "polymult/exponent_calculus.hpp"

namespace polymult {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a group violates a structural invariant (ordering of factors,
/// divisibility chain, monotone classes). `condition` names the violation.
class InvariantError : public std::invalid_argument {
 public:
  InvariantError(std::string condition, const std::string& message)
      : std::invalid_argument(message), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// Z when `order` is empty, Z_order otherwise.
struct CyclicFactor {
  std::optional<std::uint64_t> order;

  static CyclicFactor infinite() { return {}; }
  static CyclicFactor finite(std::uint64_t order) { return {order}; }
  bool is_infinite() const { return !order.has_value(); }

  friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

/// All adjacent factors joined by the same nth nilpotent product (n = 1 is
/// the direct sum).
struct UniformClass {
  unsigned n = 1;
  friend bool operator==(const UniformClass&, const UniformClass&) = default;
};

/// One class per adjacent pair: A_1 *n_1* A_2 *n_2* ... *n_k* A_{k+1}.
struct MultipleClasses {
  std::vector<unsigned> n;
  friend bool operator==(const MultipleClasses&, const MultipleClasses&) = default;
};

using ProductClasses = std::variant<UniformClass, MultipleClasses>;

class GroupSpec {
 public:
  /// Drops order-1 factors, validates the invariants and collapses a constant
  /// class list to UniformClass. Throws InvariantError.
  GroupSpec(std::vector<CyclicFactor> factors, ProductClasses classes);

  /// Z^free_rank + Z_{r_1} + ... (direct sum, class 1).
  static GroupSpec abelian(unsigned free_rank, std::vector<std::uint64_t> orders);
  /// Z_{p^{a_1}} *n* ... *n* Z_{p^{a_t}} with a_1 >= a_2 >= ... >= 1.
  static GroupSpec cyclic_p_product(std::uint64_t p, const std::vector<unsigned>& exponents,
                                    unsigned product_class);
  /// Same as above with one class per adjacent pair.
  static GroupSpec cyclic_p_product(std::uint64_t p, const std::vector<unsigned>& exponents,
                                    std::vector<unsigned> classes);

  const std::vector<CyclicFactor>& factors() const { return factors_; }
  const ProductClasses& classes() const { return classes_; }

  unsigned free_rank() const;
  /// Finite orders r_1, r_2, ... in stored (divisibility chain) order.
  std::vector<std::uint64_t> finite_orders() const;
  bool is_uniform() const { return std::holds_alternative<UniformClass>(classes_); }
  /// The uniform class n; throws std::logic_error for a multiple product.
  unsigned uniform_class() const;
  /// One class per adjacent pair, expanding a uniform class.
  std::vector<unsigned> class_list() const;
  bool is_abelian() const { return is_uniform() && uniform_class() == 1; }

  /// The prime p when every factor is finite of p-power order; else nullopt.
  std::optional<std::uint64_t> common_prime() const;
  /// Exponents a_i with |A_i| = p^{a_i}; requires common_prime().
  std::vector<unsigned> prime_exponents() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<CyclicFactor> factors_;
  ProductClasses classes_;
};

/// Parses the ASCII group grammar:
///   sum     := term ("+" term)*
///   product := term ("*" INT "*" term)*
///   term    := "Z" | "Z^" INT | "Z_" INT | "Z_{" INT ("^" INT)? "}"
GroupSpec parse_group(std::string_view text);
/// Canonical text; parse_group(render_group(g)) == g.
std::string render_group(const GroupSpec& g);

struct VarietySpec {
  ClassRow row;
};

/// Parses "2" or "2,1" into a class row.
ClassRow parse_class_row(std::string_view text);
std::string render_class_row(const ClassRow& row);

/// Direct sum Z^(free_rank) + sum of Z_modulus^(multiplicity), canonical
/// when moduli are distinct, stored in decreasing order and every
/// multiplicity is positive.
struct TorsionSummand {
  std::uint64_t modulus;
  Exponent multiplicity;
  friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
};

class AbelianStructure {
 public:
  AbelianStructure() = default;
  AbelianStructure(Exponent free_rank, std::vector<TorsionSummand> torsion);

  const Exponent& free_rank() const { return free_rank_; }
  const std::vector<TorsionSummand>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;

 private:
  Exponent free_rank_ = 0;
  std::vector<TorsionSummand> torsion_;
};

/// "Z^(1) + Z_4^(2) + Z_2^(3)"; the trivial group renders as "0".
std::string render_structure(const AbelianStructure& a);

struct PPowerOrder {
  std::uint64_t p;
  Exponent exponent;
  friend bool operator==(const PPowerOrder&, const PPowerOrder&) = default;
};

/// Order of an abelian structure: infinite, or a finite prime factorization.
class GroupOrder {
 public:
  static GroupOrder infinite() { return GroupOrder(true, {}); }
  static GroupOrder finite(std::vector<PPowerOrder> factorization) {
    return GroupOrder(false, std::move(factorization));
  }

  bool is_infinite() const { return infinite_; }
  bool is_trivial() const { return !infinite_ && factors_.empty(); }
  /// Prime factorization sorted by prime; empty for the trivial group.
  const std::vector<PPowerOrder>& factorization() const { return factors_; }
  /// Some p^e when the order is a prime power (trivial gives nullopt).
  std::optional<PPowerOrder> as_prime_power() const;
  /// Exponent of p in a finite order (0 when p does not divide it).
  Exponent exponent_of(std::uint64_t p) const;

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

 private:
  GroupOrder(bool infinite, std::vector<PPowerOrder> factors)
      : infinite_(infinite), factors_(std::move(factors)) {}
  bool infinite_;
  std::vector<PPowerOrder> factors_;
};

GroupOrder order_of(const AbelianStructure& a);
/// "infinite", "1", "3^5" or "2^3 * 3^1".
std::string render_order(const GroupOrder& order);

// Small number theory helpers shared across modules.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(unsigned bound);
/// (prime, exponent) pairs by trial division, increasing primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace polymult

#endif  // POLYMULT_GROUP_MODEL_HPP_
