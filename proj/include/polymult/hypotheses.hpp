// Hypothesis checklists for the multiplier and extremality theorems.

#ifndef POLYMULT_HYPOTHESES_HPP_
#define POLYMULT_HYPOTHESES_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polymult/group_model.hpp"

namespace polymult {

enum class Theorem {
  T2_7,    // c-nilpotent multiplier of a finite abelian group
  T2_11,   // polynilpotent multiplier of a f.g. abelian group
  T2_13,   // c-nilpotent multiplier of an nth nilpotent product, c >= n
  T2_14,   // polynilpotent multiplier of an nth nilpotent product
  T2_15i,  // c-nilpotent multiplier, n >= c
  T2_15ii, // c-nilpotent multiplier, c >= n
  T2_16,   // polynilpotent multiplier of a multiple nilpotent product
  T3_1,    // extremality for nth nilpotent products of cyclic p-groups
  T3_2,    // extremality for multiple nilpotent products
  T3_3,    // extremality, c-nilpotent, n >= c
  C3_4,    // extremality for abelian p-groups
};

std::string_view theorem_name(Theorem t);
/// Accepts "T2.14", "2.14", "T2.15i", "C3.4", ... (case-insensitive).
std::optional<Theorem> parse_theorem(std::string_view text);
bool is_structure_theorem(Theorem t);

struct Condition {
  std::string name;         // stable identifier, e.g. "gcd(2,9)=1"
  std::string description;  // human-readable statement with values
  bool satisfied;
};

using Checklist = std::vector<Condition>;

bool all_satisfied(const Checklist& checks);
/// First violated condition, if any.
const Condition* first_violation(const Checklist& checks);

/// Evaluates every hypothesis of `theorem` for the group and variety.
Checklist check_hypotheses(const GroupSpec& g, const VarietySpec& v, Theorem theorem);

class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(Theorem theorem, Checklist checks);
  Theorem theorem() const { return theorem_; }
  const Checklist& checks() const { return checks_; }

 private:
  Theorem theorem_;
  Checklist checks_;
};

}  // namespace polymult

#endif  // POLYMULT_HYPOTHESES_HPP_
