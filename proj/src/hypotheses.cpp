#include "polymult/hypotheses.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <utility>

namespace polymult {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 11> kNames{{
    {Theorem::T2_7, "T2.7"},
    {Theorem::T2_11, "T2.11"},
    {Theorem::T2_13, "T2.13"},
    {Theorem::T2_14, "T2.14"},
    {Theorem::T2_15i, "T2.15i"},
    {Theorem::T2_15ii, "T2.15ii"},
    {Theorem::T2_16, "T2.16"},
    {Theorem::T3_1, "T3.1"},
    {Theorem::T3_2, "T3.2"},
    {Theorem::T3_3, "T3.3"},
    {Theorem::C3_4, "C3.4"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

class ChecklistBuilder {
 public:
  ChecklistBuilder(const GroupSpec& g, const ClassRow& row) : g_(g), row_(row) {}

  void add(std::string name, std::string description, bool ok) {
    checks_.push_back({std::move(name), std::move(description), ok});
  }

  void abelian() {
    bool ok = g_.is_abelian() || g_.factors().size() <= 1;
    add("abelian", ok ? "group is a direct sum of cyclic groups"
                      : "group is a nilpotent product of class > 1",
        ok);
  }

  void finite() {
    unsigned m = g_.free_rank();
    add("finite", "free rank " + std::to_string(m) + (m == 0 ? " = 0" : " > 0"), m == 0);
  }

  void single_class_row() {
    add("single-class-row", "class row length s = " + std::to_string(row_.length()) +
                                (row_.length() == 1 ? "" : " (need s = 1)"),
        row_.length() == 1);
  }

  void uniform() {
    add("uniform-product",
        g_.is_uniform() ? "all factors joined by one product class"
                        : "factors joined by different product classes",
        g_.is_uniform());
  }

  void chain() {
    // GroupSpec cannot be constructed without it; listed for completeness.
    add("divisibility-chain", "finite orders form a divisibility chain", true);
  }

  void nonincreasing_classes() {
    auto list = g_.class_list();
    bool ok = std::is_sorted(list.rbegin(), list.rend());
    add("classes-nonincreasing", ok ? "n_1 >= n_2 >= ... >= n_k" : "product classes increase", ok);
  }

  void c1_at_least(unsigned n, const char* n_name) {
    bool ok = row_.first() >= n;
    add(std::string("c1>=") + n_name,
        "c_1 = " + std::to_string(row_.first()) + (ok ? " >= " : " < ") + n_name + " = " + std::to_string(n),
        ok);
  }

  void n_at_least_c(unsigned n) {
    bool ok = n >= row_.first();
    add("n>=c", "n = " + std::to_string(n) + (ok ? " >= " : " < ") + "c = " + std::to_string(row_.first()), ok);
  }

  /// gcd(q, r_1) = 1 for every prime q <= bound (r_1 the largest finite order).
  void coprime_first_order(unsigned bound) {
    auto orders = g_.finite_orders();
    if (orders.empty()) return;
    for (auto q : primes_up_to(bound)) {
      auto d = std::gcd(q, orders.front());
      add("gcd(" + std::to_string(q) + "," + std::to_string(orders.front()) + ")=1",
          "gcd(" + std::to_string(q) + ", r_1 = " + std::to_string(orders.front()) + ") = " + std::to_string(d) +
              (d == 1 ? "" : " != 1") + " (primes <= " + std::to_string(bound) + ")",
          d == 1);
    }
  }

  /// Every factor cyclic of order a power of one prime p, and gcd(q,p)=1 for primes q <= bound.
  void p_group(unsigned bound) {
    auto p = g_.common_prime();
    add("p-group", p ? "every factor is a cyclic " + std::to_string(*p) + "-group"
                     : "factors are not all cyclic groups of p-power order for a single prime p",
        p.has_value());
    if (!p) return;
    for (auto q : primes_up_to(bound)) {
      auto d = std::gcd(q, *p);
      add("gcd(" + std::to_string(q) + "," + std::to_string(*p) + ")=1",
          "gcd(" + std::to_string(q) + ", p = " + std::to_string(*p) + ") = " + std::to_string(d) +
              (d == 1 ? "" : " != 1") + " (primes <= " + std::to_string(bound) + ")",
          d == 1);
    }
  }

  unsigned product_class() const { return g_.is_uniform() ? g_.uniform_class() : 0; }

  unsigned leading_class() const {
    auto list = g_.class_list();
    if (!list.empty()) return list.front();
    return g_.is_uniform() ? g_.uniform_class() : 1;
  }

  Checklist take() { return std::move(checks_); }

 private:
  const GroupSpec& g_;
  const ClassRow& row_;
  Checklist checks_;
};

}  // namespace

std::string_view theorem_name(Theorem t) {
  for (auto [theorem, name] : kNames)
    if (theorem == t) return name;
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view text) {
  std::string key = lower(text);
  if (!key.empty() && key[0] != 't' && key[0] != 'c') key = "t" + key;
  key.erase(std::remove(key.begin(), key.end(), '('), key.end());
  key.erase(std::remove(key.begin(), key.end(), ')'), key.end());
  for (auto [theorem, name] : kNames)
    if (lower(name) == key) return theorem;
  if (key == "t3.4") return Theorem::C3_4;
  return std::nullopt;
}

bool is_structure_theorem(Theorem t) {
  switch (t) {
    case Theorem::T3_1:
    case Theorem::T3_2:
    case Theorem::T3_3:
    case Theorem::C3_4:
      return false;
    default:
      return true;
  }
}

bool all_satisfied(const Checklist& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Condition& c) { return c.satisfied; });
}

const Condition* first_violation(const Checklist& checks) {
  for (const auto& c : checks)
    if (!c.satisfied) return &c;
  return nullptr;
}

Checklist check_hypotheses(const GroupSpec& g, const VarietySpec& v, Theorem theorem) {
  ChecklistBuilder b(g, v.row);
  switch (theorem) {
    case Theorem::T2_7:
      b.abelian();
      b.finite();
      b.single_class_row();
      b.chain();
      break;
    case Theorem::T2_11:
      b.abelian();
      b.chain();
      break;
    case Theorem::T2_13:
    case Theorem::T2_15ii:
      b.uniform();
      b.single_class_row();
      if (g.is_uniform()) {
        b.c1_at_least(b.product_class(), "n");
        b.chain();
        b.coprime_first_order(theorem == Theorem::T2_13 ? b.product_class()
                                                        : b.product_class() + v.row.first());
      }
      break;
    case Theorem::T2_15i:
      b.uniform();
      b.single_class_row();
      if (g.is_uniform()) {
        b.n_at_least_c(b.product_class());
        b.chain();
        b.coprime_first_order(b.product_class() + v.row.first());
      }
      break;
    case Theorem::T2_14:
      b.uniform();
      if (g.is_uniform()) {
        b.c1_at_least(b.product_class(), "n");
        b.chain();
        b.coprime_first_order(b.product_class());
      }
      break;
    case Theorem::T2_16:
      b.nonincreasing_classes();
      b.c1_at_least(b.leading_class(), "n_1");
      b.chain();
      b.coprime_first_order(b.leading_class());
      break;
    case Theorem::T3_1:
      b.uniform();
      if (g.is_uniform()) {
        b.c1_at_least(b.product_class(), "n");
        b.p_group(b.product_class());
      }
      break;
    case Theorem::T3_2:
      b.nonincreasing_classes();
      b.c1_at_least(b.leading_class(), "n_1");
      b.p_group(b.leading_class());
      break;
    case Theorem::T3_3:
      b.uniform();
      b.single_class_row();
      if (g.is_uniform()) {
        b.n_at_least_c(b.product_class());
        b.p_group(b.product_class() + v.row.first());
      }
      break;
    case Theorem::C3_4:
      b.abelian();
      b.p_group(1);
      break;
  }
  return b.take();
}

HypothesisError::HypothesisError(Theorem theorem, Checklist checks)
    : std::runtime_error([&] {
        std::string msg = "hypotheses of " + std::string(theorem_name(theorem)) + " violated";
        if (const auto* c = first_violation(checks)) msg += ": " + c->name + " (" + c->description + ")";
        return msg;
      }()),
      theorem_(theorem),
      checks_(std::move(checks)) {}

}  // namespace polymult
