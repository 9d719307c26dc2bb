// Structure of polynilpotent multipliers for f.g. abelian groups and
// nilpotent products of cyclic groups, and the extremality verdicts built
// on top of them.

#ifndef POLYMULT_MULTIPLIER_ENGINE_HPP_
#define POLYMULT_MULTIPLIER_ENGINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "polymult/exponent_calculus.hpp"
#include "polymult/group_model.hpp"
#include "polymult/hypotheses.hpp"

namespace polymult {

/// One term of the exponent sequence a theorem used, e.g. d_3 = 20.
struct NamedExponent {
  std::string symbol;  // "b", "beta", "d", "f", "g", "u", "h", "e"
  unsigned index;
  Exponent value;
};

struct MultiplierReport {
  AbelianStructure structure;
  GroupOrder order = GroupOrder::finite({});
  Theorem theorem_used;
  std::vector<NamedExponent> exponents;
  /// Other theorems whose hypotheses also held; each was evaluated and
  /// produced the same structure.
  std::vector<Theorem> cross_checks;
  Checklist hypotheses;
};

// Each of these refuses (HypothesisError) when the theorem's hypotheses fail.

/// Finite abelian chain Z_{n_1} + ... + Z_{n_k}, c-nilpotent multiplier.
MultiplierReport multiplier_abelian_nilpotent(const GroupSpec& g, unsigned c);
/// F.g. abelian Z^m + Z_{n_1} + ... + Z_{n_k}, polynilpotent multiplier.
MultiplierReport multiplier_abelian_polynilpotent(const GroupSpec& g, const ClassRow& row);
/// Uniform nth nilpotent product, c-nilpotent multiplier. `theorem` is one of
/// T2_13, T2_15i, T2_15ii; nullopt picks T2_15ii, then T2_13, then T2_15i.
MultiplierReport multiplier_product_c_nilpotent(const GroupSpec& g, unsigned c,
                                                std::optional<Theorem> theorem = std::nullopt);
/// Uniform nth nilpotent product, polynilpotent multiplier (c_1 >= n).
MultiplierReport multiplier_product_polynilpotent(const GroupSpec& g, const ClassRow& row);
/// A_1 *n_1* ... *n_k* A_{k+1}, polynilpotent multiplier (c_1 >= n_1 >= ...).
MultiplierReport multiplier_multiproduct_polynilpotent(const GroupSpec& g, const ClassRow& row);

/// Evaluates one structure theorem by name.
MultiplierReport multiplier_by_theorem(const GroupSpec& g, const ClassRow& row, Theorem theorem);

/// Evaluates every applicable structure theorem, throws std::logic_error if
/// two of them disagree, and reports the most specific one. Throws
/// HypothesisError (with the checklist of the closest candidate theorem) when
/// none applies.
MultiplierReport compute_multiplier(const GroupSpec& g, const ClassRow& row);

enum class ExtremalStatus { Attains, DoesNotAttain, HypothesesViolated };

std::string_view extremal_status_name(ExtremalStatus s);

struct ExtremalVerdict {
  ExtremalStatus status;
  Theorem theorem;
  Checklist hypotheses;
  // The remaining fields are meaningful unless status is HypothesesViolated.
  std::uint64_t p = 0;
  unsigned total_exponent = 0;           // m = sum of alpha_i
  Exponent actual_exponent = 0;          // |multiplier| = p^actual
  Exponent target_exponent = 0;          // maximal exponent named by the theorem
  bool elementary = false;               // every alpha_i == 1
  /// Engine exponent of the elementary comparator Z_p * ... * Z_p (m copies).
  Exponent comparator_exponent = 0;
  /// Class list used for the elementary comparator (multiple products).
  std::vector<unsigned> comparator_classes;
  /// attains == elementary, the "if and only if" of the theorem.
  bool agrees_with_theorem() const {
    return status == ExtremalStatus::HypothesesViolated ||
           ((status == ExtremalStatus::Attains) == elementary);
  }
};

/// Theorem choice for nullopt: abelian -> C3_4, multiple product -> T3_2,
/// s = 1 and n > c -> T3_3, otherwise T3_1.
ExtremalVerdict is_extremal(const GroupSpec& g, const ClassRow& row,
                            std::optional<Theorem> theorem = std::nullopt);

/// Target exponent e_{m-1} for m copies of Z_p joined by `classes`
/// (length m - 1), written as tail(sum_{j=0}^{m-1} h_j) with n_0 := n_1.
Exponent multiproduct_target_literal(const ClassRow& row, const std::vector<unsigned>& classes);

}  // namespace polymult

#endif  // POLYMULT_MULTIPLIER_ENGINE_HPP_
