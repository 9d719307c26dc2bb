#include "polymult/multiplier_engine.hpp"

#include <algorithm>
#include <array>

namespace polymult {

namespace {

Checklist require(const GroupSpec& g, const ClassRow& row, Theorem theorem) {
  Checklist checks = check_hypotheses(g, VarietySpec{row}, theorem);
  if (!all_satisfied(checks)) throw HypothesisError(theorem, checks);
  return checks;
}

Exponent difference(const Exponent& later, const Exponent& earlier) {
  Exponent d = later - earlier;
  if (d < 0) throw std::logic_error("multiplier exponent sequence decreased");
  return d;
}

/// Z^(seq[0]) + Z_{r_1}^(seq[1]-seq[0]) + ... + Z_{r_t}^(seq[t]-seq[t-1]).
AbelianStructure assemble(const std::vector<Exponent>& seq, const std::vector<std::uint64_t>& orders) {
  std::vector<TorsionSummand> torsion;
  for (std::size_t j = 0; j < orders.size(); ++j)
    torsion.push_back({orders[j], difference(seq[j + 1], seq[j])});
  return AbelianStructure(seq.front(), std::move(torsion));
}

MultiplierReport finish(AbelianStructure structure, Theorem theorem, std::vector<NamedExponent> exponents,
                        Checklist checks) {
  MultiplierReport report;
  report.order = order_of(structure);
  report.structure = std::move(structure);
  report.theorem_used = theorem;
  report.exponents = std::move(exponents);
  report.hypotheses = std::move(checks);
  return report;
}

/// Builds the standard shape from an exponent function x(i) evaluated at
/// i = m, ..., m + t.
template <typename F>
MultiplierReport sequence_multiplier(const GroupSpec& g, Theorem theorem, Checklist checks, const char* symbol,
                                     bool index_from_zero, F&& x) {
  const unsigned m = g.free_rank();
  const auto orders = g.finite_orders();
  std::vector<Exponent> seq;
  std::vector<NamedExponent> named;
  for (unsigned k = 0; k <= orders.size(); ++k) {
    seq.push_back(x(m + k));
    named.push_back({symbol, index_from_zero ? k : m + k, seq.back()});
  }
  return finish(assemble(seq, orders), theorem, std::move(named), std::move(checks));
}

}  // namespace

MultiplierReport multiplier_abelian_nilpotent(const GroupSpec& g, unsigned c) {
  ClassRow row({c});
  Checklist checks = require(g, row, Theorem::T2_7);
  const auto orders = g.finite_orders();
  std::vector<NamedExponent> named;
  std::vector<Exponent> b(orders.size() + 1);
  for (unsigned i = 1; i <= orders.size(); ++i) {
    b[i] = witt(c + 1, i);
    named.push_back({"b", i, b[i]});
  }
  // Z_{n_2}^(b_2) + Z_{n_3}^(b_3 - b_2) + ... + Z_{n_k}^(b_k - b_{k-1})
  std::vector<TorsionSummand> torsion;
  for (unsigned i = 2; i <= orders.size(); ++i)
    torsion.push_back({orders[i - 1], i == 2 ? b[2] : difference(b[i], b[i - 1])});
  return finish(AbelianStructure(0, std::move(torsion)), Theorem::T2_7, std::move(named), std::move(checks));
}

MultiplierReport multiplier_abelian_polynilpotent(const GroupSpec& g, const ClassRow& row) {
  Checklist checks = require(g, row, Theorem::T2_11);
  return sequence_multiplier(g, Theorem::T2_11, std::move(checks), "beta", false,
                             [&](unsigned i) { return beta(row, i); });
}

MultiplierReport multiplier_product_c_nilpotent(const GroupSpec& g, unsigned c, std::optional<Theorem> theorem) {
  ClassRow row({c});
  if (!theorem) {
    for (Theorem t : {Theorem::T2_15ii, Theorem::T2_13, Theorem::T2_15i})
      if (all_satisfied(check_hypotheses(g, VarietySpec{row}, t))) {
        theorem = t;
        break;
      }
    if (!theorem) {
      // Report against the closest candidate.
      bool c_at_least_n = g.is_uniform() && c >= g.uniform_class();
      require(g, row, c_at_least_n || !g.is_uniform() ? Theorem::T2_13 : Theorem::T2_15i);
    }
  }
  if (*theorem != Theorem::T2_13 && *theorem != Theorem::T2_15i && *theorem != Theorem::T2_15ii)
    throw std::invalid_argument("multiplier_product_c_nilpotent: theorem must be T2.13, T2.15i or T2.15ii");
  Checklist checks = require(g, row, *theorem);
  const unsigned n = g.uniform_class();
  if (*theorem == Theorem::T2_15i)
    return sequence_multiplier(g, *theorem, std::move(checks), "g", true,
                               [&](unsigned letters) { return g_exponent(c, n, letters); });
  return sequence_multiplier(g, *theorem, std::move(checks), "f", true,
                             [&](unsigned letters) { return f_exponent(c, n, letters); });
}

MultiplierReport multiplier_product_polynilpotent(const GroupSpec& g, const ClassRow& row) {
  Checklist checks = require(g, row, Theorem::T2_14);
  const unsigned n = g.uniform_class();
  return sequence_multiplier(g, Theorem::T2_14, std::move(checks), "d", false,
                             [&](unsigned i) { return d_exponent(row, n, i); });
}

MultiplierReport multiplier_multiproduct_polynilpotent(const GroupSpec& g, const ClassRow& row) {
  Checklist checks = require(g, row, Theorem::T2_16);
  if (g.factors().empty()) return finish(AbelianStructure(), Theorem::T2_16, {}, std::move(checks));

  const unsigned t = g.free_rank();
  const auto classes = g.class_list();
  const auto k = static_cast<unsigned>(classes.size());
  const auto orders = g.finite_orders();  // m_{t+1}, ..., m_{k+1}

  std::vector<NamedExponent> named;
  named.push_back({"u", 0, u_value(row, classes, t)});
  for (unsigned j = std::max(t, 1u); j <= k; ++j) named.push_back({"h", j, h_value(row, classes, j)});

  // seq = (e_0, e_t, e_{t+1}, ..., e_k)
  std::vector<Exponent> seq;
  seq.push_back(e_exponent(row, classes, t, 0));
  named.push_back({"e", 0, seq.back()});
  for (unsigned i = t; i <= k; ++i) {
    if (i == 0) {
      seq.push_back(seq.front());
      continue;
    }
    seq.push_back(e_exponent(row, classes, t, i));
    named.push_back({"e", i, seq.back()});
  }
  return finish(assemble(seq, orders), Theorem::T2_16, std::move(named), std::move(checks));
}

MultiplierReport multiplier_by_theorem(const GroupSpec& g, const ClassRow& row, Theorem theorem) {
  switch (theorem) {
    case Theorem::T2_7:
      require(g, row, theorem);
      return multiplier_abelian_nilpotent(g, row.first());
    case Theorem::T2_11:
      return multiplier_abelian_polynilpotent(g, row);
    case Theorem::T2_13:
    case Theorem::T2_15i:
    case Theorem::T2_15ii:
      require(g, row, theorem);
      return multiplier_product_c_nilpotent(g, row.first(), theorem);
    case Theorem::T2_14:
      return multiplier_product_polynilpotent(g, row);
    case Theorem::T2_16:
      return multiplier_multiproduct_polynilpotent(g, row);
    default:
      throw std::invalid_argument(std::string(theorem_name(theorem)) + " is not a structure theorem");
  }
}

MultiplierReport compute_multiplier(const GroupSpec& g, const ClassRow& row) {
  // Abelian inputs report the abelian theorems first; the product theorems
  // with n = 1 still run as cross-checks.
  static constexpr std::array kAbelianFirst{Theorem::T2_7,  Theorem::T2_11, Theorem::T2_15ii, Theorem::T2_13,
                                            Theorem::T2_15i, Theorem::T2_14, Theorem::T2_16};
  static constexpr std::array kProductFirst{Theorem::T2_15ii, Theorem::T2_13, Theorem::T2_15i, Theorem::T2_14,
                                            Theorem::T2_16,   Theorem::T2_7,  Theorem::T2_11};
  const bool abelian = g.is_abelian() || g.factors().size() <= 1;
  std::optional<MultiplierReport> chosen;
  for (Theorem t : abelian ? kAbelianFirst : kProductFirst) {
    if (!all_satisfied(check_hypotheses(g, VarietySpec{row}, t))) continue;
    MultiplierReport report = multiplier_by_theorem(g, row, t);
    if (!chosen) {
      chosen = std::move(report);
      continue;
    }
    if (!(report.structure == chosen->structure))
      throw std::logic_error(std::string(theorem_name(t)) + " disagrees with " +
                             std::string(theorem_name(chosen->theorem_used)) + " on " + render_group(g) + ": " +
                             render_structure(report.structure) + " vs " + render_structure(chosen->structure));
    chosen->cross_checks.push_back(t);
  }
  if (chosen) return std::move(*chosen);

  Theorem candidate = Theorem::T2_16;
  if (g.is_abelian() || g.factors().size() <= 1)
    candidate = Theorem::T2_11;
  else if (g.is_uniform() && row.length() == 1)
    candidate = row.first() >= g.uniform_class() ? Theorem::T2_13 : Theorem::T2_15i;
  else if (g.is_uniform())
    candidate = Theorem::T2_14;
  throw HypothesisError(candidate, check_hypotheses(g, VarietySpec{row}, candidate));
}

// ---------------------------------------------------------------------------
// Extremality

std::string_view extremal_status_name(ExtremalStatus s) {
  switch (s) {
    case ExtremalStatus::Attains:
      return "attains";
    case ExtremalStatus::DoesNotAttain:
      return "does-not-attain";
    case ExtremalStatus::HypothesesViolated:
      return "hypotheses-violated";
  }
  return "?";
}

Exponent multiproduct_target_literal(const ClassRow& row, const std::vector<unsigned>& classes) {
  validate_multiple_classes(row, classes);
  const unsigned m = static_cast<unsigned>(classes.size()) + 1;
  const unsigned c1 = row.first();
  // n_0 is not defined for a multiple product; n_0 := n_1 (h_0 vanishes for
  // any choice because chi_w(1) = chi_w(0) = 0 when w >= 2).
  const unsigned n0 = classes.empty() ? 1 : classes.front();
  Exponent sum = 0;
  for (unsigned j = 0; j + 1 <= m; ++j) {
    const unsigned nj = j == 0 ? n0 : classes[j - 1];
    for (unsigned lambda = 1; lambda <= nj; ++lambda) sum += witt(c1 + lambda, j + 1) - witt(c1 + lambda, j);
  }
  return nested_tail(row.tail(), sum);
}

ExtremalVerdict is_extremal(const GroupSpec& g, const ClassRow& row, std::optional<Theorem> theorem) {
  if (!theorem) {
    if (g.is_abelian() || (g.factors().size() <= 1 && g.is_uniform() && g.uniform_class() == 1))
      theorem = Theorem::C3_4;
    else if (!g.is_uniform())
      theorem = Theorem::T3_2;
    else if (row.length() == 1 && g.uniform_class() > row.first())
      theorem = Theorem::T3_3;
    else
      theorem = Theorem::T3_1;
  }
  if (is_structure_theorem(*theorem))
    throw std::invalid_argument(std::string(theorem_name(*theorem)) + " is not an extremality theorem");

  ExtremalVerdict verdict;
  verdict.theorem = *theorem;
  verdict.hypotheses = check_hypotheses(g, VarietySpec{row}, *theorem);
  if (!all_satisfied(verdict.hypotheses)) {
    verdict.status = ExtremalStatus::HypothesesViolated;
    return verdict;
  }

  const std::uint64_t p = *g.common_prime();
  const auto alphas = g.prime_exponents();
  unsigned m = 0;
  for (unsigned a : alphas) m += a;
  verdict.p = p;
  verdict.total_exponent = m;
  verdict.elementary = std::all_of(alphas.begin(), alphas.end(), [](unsigned a) { return a == 1; });

  const std::vector<unsigned> ones(m, 1);
  GroupSpec comparator = GroupSpec::abelian(0, {});
  switch (*theorem) {
    case Theorem::C3_4:
      verdict.actual_exponent = order_of(multiplier_abelian_polynilpotent(g, row).structure).exponent_of(p);
      verdict.target_exponent = beta(row, m);
      comparator = GroupSpec::cyclic_p_product(p, ones, 1u);
      verdict.comparator_exponent =
          order_of(multiplier_abelian_polynilpotent(comparator, row).structure).exponent_of(p);
      break;
    case Theorem::T3_1: {
      const unsigned n = g.uniform_class();
      verdict.actual_exponent = order_of(multiplier_product_polynilpotent(g, row).structure).exponent_of(p);
      verdict.target_exponent = d_exponent(row, n, m);
      comparator = GroupSpec::cyclic_p_product(p, ones, n);
      verdict.comparator_exponent =
          order_of(multiplier_product_polynilpotent(comparator, row).structure).exponent_of(p);
      break;
    }
    case Theorem::T3_3: {
      const unsigned n = g.uniform_class();
      const unsigned c = row.first();
      verdict.actual_exponent =
          order_of(multiplier_product_c_nilpotent(g, c, Theorem::T2_15i).structure).exponent_of(p);
      verdict.target_exponent = g_exponent(c, n, m);
      comparator = GroupSpec::cyclic_p_product(p, ones, n);
      verdict.comparator_exponent =
          order_of(multiplier_product_c_nilpotent(comparator, c, Theorem::T2_15i).structure).exponent_of(p);
      break;
    }
    case Theorem::T3_2: {
      auto classes = g.class_list();
      const unsigned pad = classes.empty() ? (g.is_uniform() ? g.uniform_class() : 1) : classes.back();
      classes.resize(m - 1, pad);
      verdict.comparator_classes = classes;
      verdict.actual_exponent = order_of(multiplier_multiproduct_polynilpotent(g, row).structure).exponent_of(p);
      verdict.target_exponent = e_exponent(row, classes, 0, m - 1);
      if (verdict.target_exponent != multiproduct_target_literal(row, classes))
        throw std::logic_error("e_{m-1}: pipeline and literal sums disagree");
      comparator = GroupSpec::cyclic_p_product(p, ones, classes);
      verdict.comparator_exponent =
          order_of(multiplier_multiproduct_polynilpotent(comparator, row).structure).exponent_of(p);
      break;
    }
    default:
      break;
  }
  verdict.status =
      verdict.actual_exponent == verdict.target_exponent ? ExtremalStatus::Attains : ExtremalStatus::DoesNotAttain;
  return verdict;
}

}  // namespace polymult
