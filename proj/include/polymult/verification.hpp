// Brute-force re-verification at desk scale: exhaustive partition sweeps,
// the equality used in the extremality argument, the inequality counterexample,
// bound inequalities and difference monotonicity.

#ifndef POLYMULT_VERIFICATION_HPP_
#define POLYMULT_VERIFICATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polymult/exponent_calculus.hpp"
#include "polymult/hall_oracle.hpp"
#include "polymult/hypotheses.hpp"

namespace polymult {

using Partition = std::vector<unsigned>;

/// Partitions of m as nonincreasing tuples, in reverse lexicographic order:
/// (m), (m-1,1), ..., (1,...,1). m = 0 yields the single empty partition.
class PartitionIterator {
 public:
  explicit PartitionIterator(unsigned m);
  bool done() const { return done_; }
  const Partition& current() const { return current_; }
  void next();

 private:
  Partition current_;
  bool done_ = false;
};

std::vector<Partition> partitions_of(unsigned m);
std::string render_partition(const Partition& alpha);

enum class CheckStatus { Pass, Fail, OutOfHypothesis, Skipped };
std::string_view check_status_name(CheckStatus s);

/// One machine-readable verification record.
struct CheckRecord {
  std::string suite;     // "classify", "equality-I", "counterexample", "bounds", "monotonicity"
  std::string check;     // e.g. "beta-lower"
  std::string input;     // instance description
  std::string relation;  // e.g. "lhs <= rhs"
  std::string lhs;
  std::string rhs;
  CheckStatus status;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::vector<std::string> caps;  // sweep bounds, e.g. "m <= 7"

  std::size_t count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::Fail) == 0; }
  void append(const VerificationReport& other);
  /// One JSON object per record, then a summary object.
  std::string to_json_lines() const;
};

// ---------------------------------------------------------------------------

struct PartitionOrder {
  Partition alpha;
  Exponent exponent;  // multiplier order p^exponent
  Theorem theorem;
};

struct ClassificationReport {
  std::uint64_t p;
  unsigned m;
  ClassRow row;
  std::vector<unsigned> classes;  // product classes (all equal for a uniform product)
  std::vector<PartitionOrder> rows;
  std::vector<Partition> maximizers;
  Exponent max_exponent;
  Exponent target_exponent;  // d_m / beta_m / g_m / e_{m-1}
  Theorem theorem;           // extremality statement being checked
  bool hypotheses_hold = true;
  Checklist hypotheses;

  /// Unique maximizer (1,...,1) whose exponent equals the target.
  bool unique_elementary_maximizer() const;
};

/// Multiplier order of every abelian / nth-product p-group of order p^m.
/// Hypothesis-violating input is reported with hypotheses_hold = false.
ClassificationReport classify_extremal(std::uint64_t p, unsigned m, const ClassRow& row, unsigned product_class);
/// Multiple-product variant: a partition with t parts uses classes n_1..n_{t-1}.
ClassificationReport classify_extremal_multiple(std::uint64_t p, unsigned m, const ClassRow& row,
                                                std::vector<unsigned> classes);

VerificationReport classification_records(const ClassificationReport& report);

struct EqualityICheck {
  Exponent lhs;  // (b_n - b_{n-1}) + ... + (b_{d+1} - b_d)
  Exponent rhs;  // sum_{i=2}^{d} (alpha_i - 1)(b_i - b_{i-1})
  std::size_t lhs_terms;
  Exponent rhs_terms;
  bool holds() const { return lhs == rhs; }
};

/// Both sides with b_i = chi_{c+1}(i) for the abelian p-group of type alpha.
EqualityICheck check_equality_I(unsigned c, const Partition& alpha);

struct InequalityCounterexample {
  unsigned i;
  Exponent lhs;  // i * chi_{c+1}(i)
  Exponent rhs;  // chi_{c+1}(i+1)
};

/// Smallest 1 <= i <= bound with i * chi_{c+1}(i) >= chi_{c+1}(i+1).
std::optional<InequalityCounterexample> find_inequality_counterexample(unsigned c, unsigned bound);

/// Lower/upper exponent bounds over every abelian p-group of order p^n,
/// 1 <= n <= max_total, plus tightness of the upper bound.
VerificationReport check_bounds(std::uint64_t p, unsigned max_total, const ClassRow& row);

/// d_j - d_{j-1} >= d_i - d_{i-1} for 2 <= i <= j <= i_max, from the
/// formula and, within the caps, from nested Hall enumeration.
VerificationReport verify_difference_monotonicity(const ClassRow& row, unsigned product_class, unsigned i_max,
                                                  ResourceCaps caps = {});

}  // namespace polymult

#endif  // POLYMULT_VERIFICATION_HPP_
