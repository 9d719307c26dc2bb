#include "polymult/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polymult/exponent_calculus.hpp"
#include "polymult/group_model.hpp"
#include "polymult/hall_oracle.hpp"
#include "polymult/hypotheses.hpp"
#include "polymult/multiplier_engine.hpp"
#include "polymult/verification.hpp"

namespace polymult {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxPrintedElements = 200;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool record_format(const std::string& format) { return format == "record"; }

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "record"}));
}

json checklist_json(const Checklist& checks) {
  json list = json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name}, {"description", c.description}, {"satisfied", c.satisfied}});
  return list;
}

void print_checklist(std::ostream& out, const Checklist& checks) {
  for (const auto& c : checks)
    out << "  [" << (c.satisfied ? "ok" : "violated") << "] " << c.name << ": " << c.description << '\n';
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const char* what) {
  std::vector<unsigned> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      values.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
  }
  if (values.empty()) throw UsageError(std::string("empty ") + what);
  return values;
}

ClassRow row_from(const std::string& text) {
  try {
    return parse_class_row(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("invalid class row '") + text + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------

struct WittArgs {
  unsigned weight = 0;
  std::string letters;
  std::string format = "human";
};

int cmd_witt(const WittArgs& a, std::ostream& out) {
  if (a.weight == 0) throw UsageError("weight must be >= 1");
  Exponent letters;
  if (letters.set_str(a.letters, 10) != 0 || letters < 0)
    throw UsageError("letters must be a nonnegative integer");
  Exponent value = witt(a.weight, letters);
  if (record_format(a.format))
    out << json{{"weight", a.weight}, {"letters", letters.get_str()}, {"value", value.get_str()}}.dump() << '\n';
  else
    out << value.get_str() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct MultiplierArgs {
  std::string group;
  std::string row;
  std::string theorem;
  unsigned product_class = 0;
  std::string format = "human";
};

GroupSpec group_from(const std::string& text, unsigned product_class) {
  GroupSpec g = parse_group(text);
  if (product_class == 0) return g;
  if (g.factors().size() > 1)
    throw UsageError("--product-class only applies to single-factor groups; write the product with *n*");
  return GroupSpec(g.factors(), UniformClass{product_class});
}

json structure_json(const AbelianStructure& a) {
  json torsion = json::array();
  for (const auto& s : a.torsion())
    torsion.push_back({{"modulus", s.modulus}, {"multiplicity", s.multiplicity.get_str()}});
  return {{"free_rank", a.free_rank().get_str()}, {"torsion", torsion}};
}

int cmd_multiplier(const MultiplierArgs& a, std::ostream& out, std::ostream& err) {
  GroupSpec g = group_from(a.group, a.product_class);
  ClassRow row = row_from(a.row);
  std::optional<Theorem> theorem;
  if (!a.theorem.empty()) {
    theorem = parse_theorem(a.theorem);
    if (!theorem || !is_structure_theorem(*theorem)) throw UsageError("unknown structure theorem '" + a.theorem + "'");
  }

  MultiplierReport report;
  try {
    report = theorem ? multiplier_by_theorem(g, row, *theorem) : compute_multiplier(g, row);
  } catch (const HypothesisError& e) {
    if (record_format(a.format)) {
      out << json{{"group", render_group(g)},
                  {"row", render_class_row(row)},
                  {"refused", true},
                  {"theorem", std::string(theorem_name(e.theorem()))},
                  {"hypotheses", checklist_json(e.checks())}}
                 .dump()
          << '\n';
    } else {
      err << "computation refused: " << e.what() << '\n';
      print_checklist(err, e.checks());
    }
    return kExitRefused;
  }

  if (record_format(a.format)) {
    json exps = json::array();
    for (const auto& x : report.exponents)
      exps.push_back({{"symbol", x.symbol}, {"index", x.index}, {"value", x.value.get_str()}});
    json cross = json::array();
    for (auto t : report.cross_checks) cross.push_back(std::string(theorem_name(t)));
    out << json{{"group", render_group(g)},
                {"row", render_class_row(row)},
                {"structure", structure_json(report.structure)},
                {"structure_text", render_structure(report.structure)},
                {"order", render_order(report.order)},
                {"theorem", std::string(theorem_name(report.theorem_used))},
                {"cross_checks", cross},
                {"exponents", exps},
                {"hypotheses", checklist_json(report.hypotheses)}}
               .dump()
        << '\n';
    return kExitOk;
  }

  out << render_structure(report.structure) << ", order " << render_order(report.order) << ", "
      << theorem_name(report.theorem_used) << '\n';
  out << "group:      " << render_group(g) << '\n';
  out << "class row:  (" << render_class_row(row) << ")\n";
  if (!report.cross_checks.empty()) {
    out << "agrees with:";
    for (auto t : report.cross_checks) out << ' ' << theorem_name(t);
    out << '\n';
  }
  out << "exponents: ";
  for (const auto& x : report.exponents) out << ' ' << x.symbol << '_' << x.index << '=' << x.value.get_str();
  out << "\nhypotheses:\n";
  print_checklist(out, report.hypotheses);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct HallArgs {
  std::size_t letters = 0;
  unsigned weight = 0;
  std::size_t contains = 0;
  std::string format = "human";
};

int cmd_hall(const HallArgs& a, std::ostream& out) {
  if (a.weight == 0) throw UsageError("weight must be >= 1");
  if (a.contains != 0 && a.contains > a.letters) throw UsageError("--contains must satisfy 1 <= i <= n");
  std::optional<std::size_t> containing;
  if (a.contains != 0) containing = a.contains;
  BasisListing listing = hall_basis(a.letters, a.weight, ResourceCaps::from_environment(), containing);
  if (record_format(a.format)) {
    json j{{"letters", a.letters}, {"weight", a.weight}};
    if (containing) j["contains"] = *containing;
    j["count"] = listing.count;
    j["elements"] = listing.elements;
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < listing.elements.size() && i < kMaxPrintedElements; ++i)
    out << listing.elements[i] << '\n';
  if (listing.elements.size() > kMaxPrintedElements)
    out << "... (" << listing.elements.size() - kMaxPrintedElements << " more not shown)\n";
  out << "count: " << listing.count << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::string row;
  unsigned product_class = 1;
  std::string classes;
  std::string format = "human";
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  if (!is_prime(a.p)) throw UsageError("-p must be prime");
  if (a.m == 0) throw UsageError("-m must be >= 1");
  ClassRow row = row_from(a.row);
  ClassificationReport report = [&] {
    if (a.classes.empty()) return classify_extremal(a.p, a.m, row, a.product_class);
    auto classes = parse_unsigned_list(a.classes, "class list");
    if (classes.size() != a.m - 1) throw UsageError("--classes needs m - 1 entries");
    return classify_extremal_multiple(a.p, a.m, row, classes);
  }();
  const bool ok = report.unique_elementary_maximizer();

  if (record_format(a.format)) {
    out << classification_records(report).to_json_lines();
    return ok ? kExitOk : kExitRefused;
  }
  out << "theorem: " << theorem_name(report.theorem) << "  p=" << a.p << " m=" << a.m << " row=("
      << render_class_row(row) << ")\n";
  if (!report.hypotheses_hold) {
    out << "out of hypothesis:\n";
    print_checklist(out, report.hypotheses);
    return kExitRefused;
  }
  out << std::left << std::setw(20) << "partition" << std::setw(12) << "exponent" << "order\n";
  for (const auto& r : report.rows)
    out << std::left << std::setw(20) << render_partition(r.alpha) << std::setw(12) << r.exponent.get_str() << a.p
        << '^' << r.exponent.get_str() << '\n';
  out << "target: " << a.p << '^' << report.target_exponent.get_str() << '\n';
  out << "maximizers:";
  for (const auto& m : report.maximizers) out << ' ' << render_partition(m);
  out << '\n';
  out << (ok ? "unique maximizer is elementary and attains the target\n"
             : "FAIL: maximizer is not the unique elementary partition attaining the target\n");
  return ok ? kExitOk : kExitRefused;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  unsigned c = 1;
  unsigned bound = 10;
  std::uint64_t p = 2;
  unsigned m = 5;
  std::string row = "1";
  std::string partition;
  unsigned product_class = 1;
  unsigned i_max = 6;
  bool verbose = false;
  std::string format = "human";
};

int emit_report(const VerificationReport& report, const VerifyArgs& a, std::ostream& out) {
  if (record_format(a.format)) {
    out << report.to_json_lines();
  } else {
    for (const auto& r : report.records) {
      if (!a.verbose && r.status == CheckStatus::Pass) continue;
      out << '[' << check_status_name(r.status) << "] " << r.suite << '/' << r.check << "  " << r.input << "  "
          << r.relation << ": " << r.lhs << " vs " << r.rhs << '\n';
    }
    out << "checks: " << report.records.size() << "  pass: " << report.count(CheckStatus::Pass)
        << "  fail: " << report.count(CheckStatus::Fail)
        << "  out-of-hypothesis: " << report.count(CheckStatus::OutOfHypothesis)
        << "  skipped: " << report.count(CheckStatus::Skipped) << '\n';
    for (const auto& cap : report.caps) out << "cap: " << cap << '\n';
    out << (report.all_pass() ? "all pass\n" : "FAILURES present\n");
  }
  return report.all_pass() ? kExitOk : kExitRefused;
}

VerificationReport equality_report(unsigned c, const std::vector<Partition>& partitions) {
  VerificationReport report;
  for (const auto& alpha : partitions) {
    EqualityICheck check = check_equality_I(c, alpha);
    const bool elementary = alpha.front() == 1;
    report.records.push_back({"equality-I", "holds-iff-elementary",
                              "c=" + std::to_string(c) + " alpha=" + render_partition(alpha),
                              elementary ? "lhs == rhs" : "lhs != rhs", check.lhs.get_str(), check.rhs.get_str(),
                              check.holds() == elementary ? CheckStatus::Pass : CheckStatus::Fail});
  }
  return report;
}

VerificationReport counterexample_report(unsigned c, unsigned bound) {
  VerificationReport report;
  report.caps.push_back("i <= " + std::to_string(bound));
  auto found = find_inequality_counterexample(c, bound);
  const std::string input = "c=" + std::to_string(c) + " bound=" + std::to_string(bound);
  if (found)
    report.records.push_back({"counterexample", "i*chi(i) < chi(i+1) fails", input + " i=" + std::to_string(found->i),
                              "i*chi_{c+1}(i) >= chi_{c+1}(i+1)", found->lhs.get_str(), found->rhs.get_str(),
                              CheckStatus::Pass});
  else
    report.records.push_back({"counterexample", "i*chi(i) < chi(i+1) fails", input,
                              "some i <= bound violates the inequality", "", "", CheckStatus::Fail});
  return report;
}

VerificationReport default_suite() {
  VerificationReport all;
  all.append(counterexample_report(1, 10));
  for (unsigned c = 1; c <= 3; ++c) {
    std::vector<Partition> partitions;
    for (unsigned n = 1; n <= 8; ++n)
      for (auto& alpha : partitions_of(n)) partitions.push_back(alpha);
    all.append(equality_report(c, partitions));
  }
  const std::vector<ClassRow> rows{ClassRow({1}), ClassRow({2}), ClassRow({1, 1})};
  for (std::uint64_t p : {2, 3})
    for (const auto& row : rows) {
      all.append(check_bounds(p, 7, row));
      for (unsigned m = 1; m <= 7; ++m) all.append(classification_records(classify_extremal(p, m, row, 1)));
    }
  for (unsigned m = 1; m <= 6; ++m) all.append(classification_records(classify_extremal(5, m, ClassRow({2}), 2)));
  all.append(verify_difference_monotonicity(ClassRow({2}), 2, 6, ResourceCaps::from_environment()));
  all.append(verify_difference_monotonicity(ClassRow({1}), 1, 8, ResourceCaps::from_environment()));
  all.append(verify_difference_monotonicity(ClassRow({2, 1}), 2, 4, ResourceCaps::from_environment()));
  return all;
}

int cmd_verify(const std::string& suite, const VerifyArgs& a, std::ostream& out) {
  if (suite == "counterexample") {
    if (a.bound < 2) throw UsageError("-B must be >= 2");
    VerificationReport report = counterexample_report(a.c, a.bound);
    if (!record_format(a.format)) {
      auto found = find_inequality_counterexample(a.c, a.bound);
      if (found)
        out << "i=" << found->i << ": " << found->lhs.get_str() << " ≥ " << found->rhs.get_str() << '\n';
      else
        out << "none for i <= " << a.bound << '\n';
      return found ? kExitOk : kExitRefused;
    }
    return emit_report(report, a, out);
  }
  if (suite == "bounds") {
    if (!is_prime(a.p)) throw UsageError("-p must be prime");
    return emit_report(check_bounds(a.p, a.m, row_from(a.row)), a, out);
  }
  if (suite == "equality") {
    std::vector<Partition> partitions;
    if (!a.partition.empty()) {
      Partition alpha = parse_unsigned_list(a.partition, "partition");
      for (std::size_t i = 1; i < alpha.size(); ++i)
        if (alpha[i] > alpha[i - 1]) throw UsageError("partition must be nonincreasing");
      partitions.push_back(alpha);
    } else {
      for (unsigned n = 1; n <= a.m; ++n)
        for (auto& alpha : partitions_of(n)) partitions.push_back(alpha);
    }
    return emit_report(equality_report(a.c, partitions), a, out);
  }
  if (suite == "monotonicity") {
    ClassRow row = row_from(a.row);
    if (row.first() < a.product_class) throw UsageError("requires c_1 >= n");
    return emit_report(verify_difference_monotonicity(row, a.product_class, a.i_max, ResourceCaps::from_environment()),
                       a, out);
  }
  if (suite == "all") return emit_report(default_suite(), a, out);
  throw UsageError("unknown verification suite '" + suite + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynilpotent multipliers of abelian groups and nilpotent products of cyclic groups", "polymult"};
  app.require_subcommand(1);

  WittArgs witt_args;
  auto* witt_cmd = app.add_subcommand("witt", "Number of basic commutators chi_w(n)");
  witt_cmd->add_option("-w,--weight", witt_args.weight, "Weight w >= 1")->required();
  witt_cmd->add_option("-n,--letters", witt_args.letters, "Number of letters n >= 0")->required();
  add_format_option(witt_cmd, witt_args.format);

  MultiplierArgs mult_args;
  auto* mult_cmd = app.add_subcommand("multiplier", "Structure of the polynilpotent multiplier");
  mult_cmd->add_option("-g,--group", mult_args.group, "Group expression, e.g. \"Z_9 *2* Z_3\"")->required();
  mult_cmd->add_option("-c,--class-row", mult_args.row, "Class row c_1,...,c_s")->required();
  mult_cmd->add_option("--theorem", mult_args.theorem, "Force a structure theorem (T2.7, T2.11, ...)");
  mult_cmd->add_option("--product-class", mult_args.product_class, "Product class for a single-factor group");
  add_format_option(mult_cmd, mult_args.format);

  HallArgs hall_args;
  auto* hall_cmd = app.add_subcommand("hall", "Basic commutators of a given weight");
  hall_cmd->add_option("-n,--letters", hall_args.letters, "Number of letters")->required();
  hall_cmd->add_option("-w,--weight", hall_args.weight, "Weight >= 1")->required();
  hall_cmd->add_option("--contains", hall_args.contains, "Keep elements involving letter x_i");
  add_format_option(hall_cmd, hall_args.format);

  ClassifyArgs cls_args;
  auto* cls_cmd = app.add_subcommand("classify", "Multiplier order of every p-group of order p^m");
  cls_cmd->add_option("-p", cls_args.p, "Prime p")->required();
  cls_cmd->add_option("-m", cls_args.m, "Total exponent m")->required();
  cls_cmd->add_option("-c,--class-row", cls_args.row, "Class row c_1,...,c_s")->required();
  cls_cmd->add_option("-n,--product-class", cls_args.product_class, "Nilpotent product class n (1 = direct sum)");
  cls_cmd->add_option("--classes", cls_args.classes, "Multiple product classes n_1,...,n_{m-1}");
  add_format_option(cls_cmd, cls_args.format);

  VerifyArgs ver_args;
  std::string suite;
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  ver_cmd->add_option("suite", suite, "counterexample | bounds | equality | monotonicity | all")
      ->required()
      ->check(CLI::IsMember({"counterexample", "bounds", "equality", "monotonicity", "all"}));
  ver_cmd->add_option("-c", ver_args.row, "Class c, or class row c_1,...,c_s");
  ver_cmd->add_option("-B,--bound", ver_args.bound, "Search bound for counterexample");
  ver_cmd->add_option("-p", ver_args.p, "Prime p");
  ver_cmd->add_option("-m", ver_args.m, "Largest total exponent in sweeps");
  ver_cmd->add_option("--partition", ver_args.partition, "Single partition a_1,a_2,... for equality");
  ver_cmd->add_option("-n,--product-class", ver_args.product_class, "Nilpotent product class n");
  ver_cmd->add_option("--imax", ver_args.i_max, "Largest letter count for monotonicity");
  ver_cmd->add_flag("-v,--verbose", ver_args.verbose, "Print passing records too");
  add_format_option(ver_cmd, ver_args.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (witt_cmd->parsed()) return cmd_witt(witt_args, out);
    if (mult_cmd->parsed()) return cmd_multiplier(mult_args, out, err);
    if (hall_cmd->parsed()) return cmd_hall(hall_args, out);
    if (cls_cmd->parsed()) return cmd_classify(cls_args, out);
    if (ver_cmd->parsed()) {
      if (suite == "counterexample" || suite == "equality") {
        auto row = row_from(ver_args.row);
        if (row.length() != 1) throw UsageError("-c must be a single class for this suite");
        ver_args.c = row.first();
      }
      return cmd_verify(suite, ver_args, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "invalid group (" << e.condition() << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisError& e) {
    err << "computation refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const ResourceLimitError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polymult
