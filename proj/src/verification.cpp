#include "polymult/verification.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "polymult/group_model.hpp"
#include "polymult/multiplier_engine.hpp"

namespace polymult {

// ---------------------------------------------------------------------------
// Partitions

PartitionIterator::PartitionIterator(unsigned m) {
  if (m > 0) current_.push_back(m);
}

void PartitionIterator::next() {
  if (done_) return;
  unsigned ones = 0;
  while (!current_.empty() && current_.back() == 1) {
    current_.pop_back();
    ++ones;
  }
  if (current_.empty()) {
    done_ = true;
    return;
  }
  const unsigned part = --current_.back();
  unsigned remaining = ones + 1;
  while (remaining >= part) {
    current_.push_back(part);
    remaining -= part;
  }
  if (remaining > 0) current_.push_back(remaining);
}

std::vector<Partition> partitions_of(unsigned m) {
  std::vector<Partition> all;
  for (PartitionIterator it(m); !it.done(); it.next()) all.push_back(it.current());
  return all;
}

std::string render_partition(const Partition& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + std::to_string(alpha[i]);
  return out + ")";
}

// ---------------------------------------------------------------------------
// Reports

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::OutOfHypothesis:
      return "out-of-hypothesis";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

void VerificationReport::append(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  for (const auto& cap : other.caps)
    if (std::find(caps.begin(), caps.end(), cap) == caps.end()) caps.push_back(cap);
}

std::string VerificationReport::to_json_lines() const {
  std::ostringstream out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    j["input"] = r.input;
    j["relation"] = r.relation;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["status"] = std::string(check_status_name(r.status));
    out << j.dump() << '\n';
  }
  nlohmann::ordered_json summary;
  summary["summary"] = true;
  summary["pass"] = count(CheckStatus::Pass);
  summary["fail"] = count(CheckStatus::Fail);
  summary["out_of_hypothesis"] = count(CheckStatus::OutOfHypothesis);
  summary["skipped"] = count(CheckStatus::Skipped);
  summary["caps"] = caps;
  out << summary.dump() << '\n';
  return out.str();
}

namespace {

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

std::string row_text(const ClassRow& row) { return "(" + render_class_row(row) + ")"; }

void validate_partition(const Partition& alpha) {
  if (alpha.empty()) throw std::invalid_argument("partition must be nonempty");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) throw std::invalid_argument("partition parts must be >= 1");
    if (i > 0 && alpha[i] > alpha[i - 1]) throw std::invalid_argument("partition parts must be nonincreasing");
  }
}

Theorem structure_theorem_for(Theorem extremal) {
  switch (extremal) {
    case Theorem::C3_4:
      return Theorem::T2_11;
    case Theorem::T3_1:
      return Theorem::T2_14;
    case Theorem::T3_3:
      return Theorem::T2_15i;
    default:
      return Theorem::T2_16;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Exhaustive classification

bool ClassificationReport::unique_elementary_maximizer() const {
  return hypotheses_hold && maximizers.size() == 1 &&
         std::all_of(maximizers.front().begin(), maximizers.front().end(), [](unsigned a) { return a == 1; }) &&
         max_exponent == target_exponent;
}

namespace {

template <typename MakeGroup>
ClassificationReport classify(std::uint64_t p, unsigned m, const ClassRow& row, std::vector<unsigned> classes,
                              const GroupSpec& elementary, std::optional<Theorem> forced, MakeGroup&& make_group) {
  ClassificationReport report{p, m, row, std::move(classes), {}, {}, 0, 0, Theorem::T3_1, true, {}};
  ExtremalVerdict reference = is_extremal(elementary, row, forced);
  report.theorem = reference.theorem;
  report.hypotheses = reference.hypotheses;
  if (reference.status == ExtremalStatus::HypothesesViolated) {
    report.hypotheses_hold = false;
    return report;
  }
  report.target_exponent = reference.target_exponent;
  bool first = true;
  for (const auto& alpha : partitions_of(m)) {
    ExtremalVerdict v = is_extremal(make_group(alpha), row, report.theorem);
    if (v.status == ExtremalStatus::HypothesesViolated)
      throw std::logic_error("hypotheses fail for " + render_partition(alpha) + " but hold for the elementary group");
    report.rows.push_back({alpha, v.actual_exponent, structure_theorem_for(report.theorem)});
    if (first || v.actual_exponent > report.max_exponent) {
      report.max_exponent = v.actual_exponent;
      report.maximizers.clear();
      first = false;
    }
    if (v.actual_exponent == report.max_exponent) report.maximizers.push_back(alpha);
  }
  return report;
}

}  // namespace

ClassificationReport classify_extremal(std::uint64_t p, unsigned m, const ClassRow& row, unsigned product_class) {
  if (m == 0) throw std::invalid_argument("classify_extremal: m must be >= 1");
  if (product_class == 0) throw std::invalid_argument("classify_extremal: product class must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("classify_extremal: " + std::to_string(p) + " is not prime");
  const std::vector<unsigned> ones(m, 1);
  GroupSpec elementary = GroupSpec::cyclic_p_product(p, ones, product_class);
  std::vector<unsigned> classes(m - 1, product_class);
  return classify(p, m, row, classes, elementary, std::nullopt, [&](const Partition& alpha) {
    return GroupSpec::cyclic_p_product(p, alpha, product_class);
  });
}

ClassificationReport classify_extremal_multiple(std::uint64_t p, unsigned m, const ClassRow& row,
                                                std::vector<unsigned> classes) {
  if (m == 0) throw std::invalid_argument("classify_extremal: m must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("classify_extremal: " + std::to_string(p) + " is not prime");
  if (classes.size() != m - 1) throw std::invalid_argument("classify_extremal: need m - 1 product classes");
  const std::vector<unsigned> ones(m, 1);
  GroupSpec elementary = GroupSpec::cyclic_p_product(p, ones, classes);
  auto report = classify(p, m, row, classes, elementary, Theorem::T3_2, [&](const Partition& alpha) {
    std::vector<unsigned> prefix(classes.begin(), classes.begin() + static_cast<std::ptrdiff_t>(alpha.size() - 1));
    return GroupSpec::cyclic_p_product(p, alpha, prefix);
  });
  if (report.hypotheses_hold) report.target_exponent = e_exponent(row, classes, 0, m - 1);
  return report;
}

VerificationReport classification_records(const ClassificationReport& report) {
  VerificationReport out;
  std::string classes;
  for (std::size_t i = 0; i < report.classes.size(); ++i) classes += (i ? "," : "") + std::to_string(report.classes[i]);
  const std::string base = "p=" + std::to_string(report.p) + " m=" + std::to_string(report.m) +
                           " row=" + row_text(report.row) + " classes=(" + classes + ")";
  out.caps.push_back("m = " + std::to_string(report.m));
  if (!report.hypotheses_hold) {
    const Condition* c = first_violation(report.hypotheses);
    out.records.push_back({"classify", std::string(theorem_name(report.theorem)), base, "hypotheses hold",
                           c ? c->name : "", c ? c->description : "", CheckStatus::OutOfHypothesis});
    return out;
  }
  const std::string elementary = render_partition(Partition(report.m, 1));
  for (const auto& r : report.rows) {
    const bool is_elementary = render_partition(r.alpha) == elementary;
    const bool attains = r.exponent == report.target_exponent;
    out.records.push_back({"classify", "attains-iff-elementary", base + " alpha=" + render_partition(r.alpha),
                           is_elementary ? "exponent == target" : "exponent < target", r.exponent.get_str(),
                           report.target_exponent.get_str(), status_of(attains == is_elementary)});
  }
  std::string maximizers;
  for (const auto& a : report.maximizers) maximizers += (maximizers.empty() ? "" : " ") + render_partition(a);
  out.records.push_back({"classify", "unique-elementary-maximizer", base, "maximizers == {" + elementary + "}",
                         maximizers, elementary, status_of(report.unique_elementary_maximizer())});
  return out;
}

// ---------------------------------------------------------------------------
// Equality (I) and the inequality counterexample

EqualityICheck check_equality_I(unsigned c, const Partition& alpha) {
  if (c == 0) throw std::invalid_argument("check_equality_I: c must be >= 1");
  validate_partition(alpha);
  unsigned n = 0;
  for (unsigned a : alpha) n += a;
  const auto d = static_cast<unsigned>(alpha.size());
  auto b = [c](unsigned i) { return witt(c + 1, i); };

  EqualityICheck check{0, 0, n - d, 0};
  for (unsigned i = d + 1; i <= n; ++i) check.lhs += b(i) - b(i - 1);
  for (unsigned i = 2; i <= d; ++i) {
    const unsigned copies = alpha[i - 1] - 1;
    check.rhs += copies * (b(i) - b(i - 1));
    check.rhs_terms += copies;
  }
  return check;
}

std::optional<InequalityCounterexample> find_inequality_counterexample(unsigned c, unsigned bound) {
  if (c == 0) throw std::invalid_argument("find_inequality_counterexample: c must be >= 1");
  if (bound < 2) throw std::invalid_argument("find_inequality_counterexample: search bound must be >= 2");
  for (unsigned i = 1; i <= bound; ++i) {
    Exponent lhs = i * witt(c + 1, i);
    Exponent rhs = witt(c + 1, i + 1);
    if (lhs >= rhs) return InequalityCounterexample{i, lhs, rhs};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bounds

VerificationReport check_bounds(std::uint64_t p, unsigned max_total, const ClassRow& row) {
  if (!is_prime(p)) throw std::invalid_argument("check_bounds: " + std::to_string(p) + " is not prime");
  VerificationReport out;
  out.caps.push_back("abelian p-groups of order p^n, n <= " + std::to_string(max_total));

  auto multiplier_exponent = [&](const Partition& alpha) {
    return order_of(compute_multiplier(GroupSpec::cyclic_p_product(p, alpha, 1u), row).structure).exponent_of(p);
  };
  const bool schur = row.length() == 1 && row.first() == 1;

  for (unsigned n = 1; n <= max_total; ++n) {
    const Exponent elementary_top = multiplier_exponent(Partition(n, 1));
    for (const auto& alpha : partitions_of(n)) {
      const auto d = static_cast<unsigned>(alpha.size());
      const Exponent e = multiplier_exponent(alpha);
      const std::string input =
          "p=" + std::to_string(p) + " n=" + std::to_string(n) + " alpha=" + render_partition(alpha) + " row=" + row_text(row);
      auto add = [&](const std::string& check, const Exponent& lhs, const Exponent& rhs) {
        out.records.push_back({"bounds", check, input, "lhs <= rhs", lhs.get_str(), rhs.get_str(), status_of(lhs <= rhs)});
      };

      // |VM(Z_p^(d))| <= |VM(G)||V(G)| <= |VM(Z_p^(n))| with V(G) = 1.
      add("elementary-comparison-lower", multiplier_exponent(Partition(d, 1)), e);
      add("elementary-comparison-upper", e, elementary_top);
      // p^{beta_d} <= |VM(G)| |gamma(G)| <= p^{beta_n} with gamma(G) = 1.
      add("beta-lower", beta(row, d), e);
      add("beta-upper", e, beta(row, n));
      if (row.length() == 1) {
        add("chi-lower", witt(row.first() + 1, d), e);
        add("chi-upper", e, witt(row.first() + 1, n));
      }
      if (schur) {
        // p^{d(d-1)/2} <= |G'||M(G)| <= p^{n(n-1)/2} with G' = 1.
        add("schur-lower", Exponent(d * (d - 1) / 2), e);
        add("schur-upper", e, Exponent(n * (n - 1) / 2));
      }
      const bool elementary = d == n;
      const bool tight = e == beta(row, n);
      out.records.push_back({"bounds", "upper-tight-iff-elementary", input,
                             elementary ? "exponent == beta_n" : "exponent < beta_n", e.get_str(),
                             beta(row, n).get_str(), status_of(tight == elementary)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Difference monotonicity

VerificationReport verify_difference_monotonicity(const ClassRow& row, unsigned product_class, unsigned i_max,
                                                  ResourceCaps caps) {
  if (product_class == 0 || row.first() < product_class)
    throw std::invalid_argument("verify_difference_monotonicity: requires c_1 >= n >= 1");
  VerificationReport out;
  out.caps.push_back("i <= " + std::to_string(i_max));
  const std::string base = "row=" + row_text(row) + " n=" + std::to_string(product_class);

  auto monotone_pairs = [&](const std::vector<Exponent>& d, const std::string& check) {
    for (unsigned i = 2; i <= i_max; ++i)
      for (unsigned j = i; j <= i_max; ++j) {
        Exponent dj = d[j] - d[j - 1];
        Exponent di = d[i] - d[i - 1];
        out.records.push_back({"monotonicity", check, base + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                               "d_j - d_{j-1} >= d_i - d_{i-1}", dj.get_str(), di.get_str(), status_of(dj >= di)});
      }
  };

  std::vector<Exponent> formula(i_max + 1);
  for (unsigned i = 0; i <= i_max; ++i) formula[i] = d_exponent(row, product_class, i);
  monotone_pairs(formula, "formula");

  std::vector<Exponent> hall(i_max + 1);
  std::vector<unsigned> classes(i_max > 0 ? i_max : 1, product_class);
  for (unsigned i = 1; i <= i_max; ++i) {
    const std::string input = base + " i=" + std::to_string(i);
    try {
      NestedCount count = nested_hall_count_multi(row, classes, i, caps);
      hall[i] = count.total;
      out.records.push_back({"monotonicity", "hall-count", input, "|A_s| == d_i", count.total.get_str(),
                             formula[i].get_str(), status_of(count.total == formula[i])});
      Exponent diff = formula[i] - formula[i - 1];
      out.records.push_back({"monotonicity", "hall-newest-letter", input,
                             "#{alpha in A_s : x_i in alpha} == d_i - d_{i-1}", count.containing_last.get_str(),
                             diff.get_str(), status_of(count.containing_last == diff)});
    } catch (const ResourceLimitError& e) {
      out.records.push_back({"monotonicity", "hall-count", input, "|A_s| == d_i", "", e.what(), CheckStatus::Skipped});
      out.caps.push_back("Hall cross-check limited by resource caps");
      return out;
    }
  }
  monotone_pairs(hall, "hall");
  return out;
}

}  // namespace polymult
