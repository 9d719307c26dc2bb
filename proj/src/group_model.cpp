#include "polymult/group_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

namespace polymult {

// ---------------------------------------------------------------------------
// Number theory helpers

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q <= n / q; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(unsigned bound) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 2; q <= bound; ++q)
    if (is_prime(q)) primes.push_back(q);
  return primes;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> result;
  for (std::uint64_t q = 2; q <= n / q; ++q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) result.emplace_back(q, e);
  }
  if (n > 1) result.emplace_back(n, 1);
  return result;
}

// ---------------------------------------------------------------------------
// GroupSpec

namespace {

std::string factor_text(const CyclicFactor& f) {
  return f.is_infinite() ? "Z" : "Z_" + std::to_string(*f.order);
}

}  // namespace

GroupSpec::GroupSpec(std::vector<CyclicFactor> factors, ProductClasses classes) {
  if (auto* u = std::get_if<UniformClass>(&classes); u && u->n == 0)
    throw InvariantError("class-positive", "product class must be >= 1");

  std::vector<unsigned> list;
  if (auto* m = std::get_if<MultipleClasses>(&classes)) {
    if (!factors.empty() && m->n.size() + 1 != factors.size())
      throw InvariantError("class-count", "a multiple product needs one class per adjacent pair of factors");
    list = m->n;
  }

  for (const auto& f : factors)
    if (!f.is_infinite() && *f.order == 0)
      throw InvariantError("order-positive", "cyclic factor order must be >= 1");

  // Drop trivial factors together with the class joining them to a neighbour.
  for (std::size_t i = factors.size(); i-- > 0;) {
    if (factors[i].is_infinite() || *factors[i].order != 1) continue;
    factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(i));
    if (!list.empty()) list.erase(list.begin() + static_cast<std::ptrdiff_t>(i > 0 ? i - 1 : 0));
  }

  if (std::holds_alternative<MultipleClasses>(classes)) {
    for (unsigned n : list)
      if (n == 0) throw InvariantError("class-positive", "product class must be >= 1");
    for (std::size_t j = 1; j < list.size(); ++j)
      if (list[j] > list[j - 1])
        throw InvariantError("classes-nonincreasing",
                             "product classes must be nonincreasing (n_" + std::to_string(j) + " = " +
                                 std::to_string(list[j - 1]) + " < n_" + std::to_string(j + 1) + " = " +
                                 std::to_string(list[j]) + ")");
    if (list.empty())
      classes = UniformClass{1};
    else if (std::all_of(list.begin(), list.end(), [&](unsigned n) { return n == list.front(); }))
      classes = UniformClass{list.front()};
    else
      classes = MultipleClasses{list};
  }

  bool seen_finite = false;
  std::optional<std::uint64_t> previous;
  for (const auto& f : factors) {
    if (f.is_infinite()) {
      if (seen_finite)
        throw InvariantError("infinite-first", "infinite factors must precede finite factors");
      continue;
    }
    seen_finite = true;
    if (previous && *previous % *f.order != 0)
      throw InvariantError("divisibility-chain",
                           "divisibility chain violated (" + std::to_string(*f.order) +
                               " does not divide " + std::to_string(*previous) + ")");
    previous = f.order;
  }

  factors_ = std::move(factors);
  classes_ = std::move(classes);
}

GroupSpec GroupSpec::abelian(unsigned free_rank, std::vector<std::uint64_t> orders) {
  std::vector<CyclicFactor> factors(free_rank, CyclicFactor::infinite());
  for (auto r : orders) factors.push_back(CyclicFactor::finite(r));
  return GroupSpec(std::move(factors), UniformClass{1});
}

namespace {

std::vector<CyclicFactor> p_power_factors(std::uint64_t p, const std::vector<unsigned>& exponents) {
  if (!is_prime(p)) throw std::invalid_argument("cyclic_p_product: " + std::to_string(p) + " is not prime");
  std::vector<CyclicFactor> factors;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) throw std::invalid_argument("cyclic_p_product: exponents must be >= 1");
    if (i > 0 && exponents[i] > exponents[i - 1])
      throw InvariantError("exponents-nonincreasing", "cyclic_p_product: exponents must be nonincreasing");
    std::uint64_t order = 1;
    for (unsigned k = 0; k < exponents[i]; ++k) {
      if (order > std::numeric_limits<std::uint64_t>::max() / p)
        throw std::overflow_error("cyclic_p_product: order does not fit in 64 bits");
      order *= p;
    }
    factors.push_back(CyclicFactor::finite(order));
  }
  return factors;
}

}  // namespace

GroupSpec GroupSpec::cyclic_p_product(std::uint64_t p, const std::vector<unsigned>& exponents,
                                      unsigned product_class) {
  return GroupSpec(p_power_factors(p, exponents), UniformClass{product_class});
}

GroupSpec GroupSpec::cyclic_p_product(std::uint64_t p, const std::vector<unsigned>& exponents,
                                      std::vector<unsigned> classes) {
  return GroupSpec(p_power_factors(p, exponents), MultipleClasses{std::move(classes)});
}

unsigned GroupSpec::free_rank() const {
  return static_cast<unsigned>(
      std::count_if(factors_.begin(), factors_.end(), [](const auto& f) { return f.is_infinite(); }));
}

std::vector<std::uint64_t> GroupSpec::finite_orders() const {
  std::vector<std::uint64_t> orders;
  for (const auto& f : factors_)
    if (!f.is_infinite()) orders.push_back(*f.order);
  return orders;
}

unsigned GroupSpec::uniform_class() const {
  if (auto* u = std::get_if<UniformClass>(&classes_)) return u->n;
  throw std::logic_error("uniform_class: group is a multiple nilpotent product");
}

std::vector<unsigned> GroupSpec::class_list() const {
  if (auto* m = std::get_if<MultipleClasses>(&classes_)) return m->n;
  std::size_t pairs = factors_.empty() ? 0 : factors_.size() - 1;
  return std::vector<unsigned>(pairs, std::get<UniformClass>(classes_).n);
}

std::optional<std::uint64_t> GroupSpec::common_prime() const {
  std::optional<std::uint64_t> p;
  for (const auto& f : factors_) {
    if (f.is_infinite()) return std::nullopt;
    auto fac = factorize(*f.order);
    if (fac.size() != 1) return std::nullopt;
    if (p && *p != fac.front().first) return std::nullopt;
    p = fac.front().first;
  }
  return p;
}

std::vector<unsigned> GroupSpec::prime_exponents() const {
  if (!common_prime()) throw std::logic_error("prime_exponents: not a product of cyclic p-groups");
  std::vector<unsigned> exponents;
  for (const auto& f : factors_) exponents.push_back(factorize(*f.order).front().second);
  return exponents;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    skip_space();
    if (at_end()) throw ParseError("empty group expression", pos_);

    struct Term {
      std::vector<CyclicFactor> factors;
      std::size_t position;
    };
    std::vector<Term> terms;
    std::vector<unsigned> ops;  // 0 marks "+"
    std::size_t first_pos = pos_;
    terms.push_back({parse_term(), first_pos});
    enum class Mode { Unknown, Sum, Product } mode = Mode::Unknown;

    while (true) {
      skip_space();
      if (at_end()) break;
      std::size_t op_pos = pos_;
      char ch = text_[pos_];
      if (ch == '+') {
        ++pos_;
        if (mode == Mode::Product) throw ParseError("cannot mix '+' with nilpotent products", op_pos);
        mode = Mode::Sum;
        ops.push_back(0);
      } else if (ch == '*') {
        ++pos_;
        if (mode == Mode::Sum) throw ParseError("cannot mix nilpotent products with '+'", op_pos);
        mode = Mode::Product;
        skip_space();
        std::uint64_t n = parse_int("product class");
        if (n == 0) throw ParseError("product class must be >= 1", op_pos);
        if (n > std::numeric_limits<unsigned>::max()) throw ParseError("product class too large", op_pos);
        skip_space();
        expect('*');
        ops.push_back(static_cast<unsigned>(n));
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
      }
      skip_space();
      std::size_t term_pos = pos_;
      terms.push_back({parse_term(), term_pos});
    }

    std::vector<CyclicFactor> factors;
    if (mode != Mode::Product) {
      for (auto& t : terms) factors.insert(factors.end(), t.factors.begin(), t.factors.end());
      return GroupSpec(std::move(factors), UniformClass{1});
    }

    // Z^k inside a product expands into k factors joined by the class of the
    // following operator (the preceding one for the last term).
    std::vector<unsigned> classes;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].factors.empty())
        throw ParseError("Z^0 is not allowed inside a nilpotent product", terms[i].position);
      unsigned inner = i < ops.size() ? ops[i] : ops[i - 1];
      for (std::size_t j = 0; j < terms[i].factors.size(); ++j) {
        if (j > 0) classes.push_back(inner);
        factors.push_back(terms[i].factors[j]);
      }
      if (i < ops.size()) classes.push_back(ops[i]);
    }
    return GroupSpec(std::move(factors), MultipleClasses{std::move(classes)});
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char ch) {
    skip_space();
    if (at_end() || text_[pos_] != ch) throw ParseError(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }

  std::uint64_t parse_int(const char* what) {
    skip_space();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::invalid_argument) throw ParseError(std::string("expected integer ") + what, start);
    if (ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " out of range", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::vector<CyclicFactor> parse_term() {
    skip_space();
    std::size_t start = pos_;
    if (at_end() || text_[pos_] != 'Z') throw ParseError("expected 'Z'", pos_);
    ++pos_;
    skip_space();
    if (at_end()) return {CyclicFactor::infinite()};
    if (text_[pos_] == '^') {
      ++pos_;
      std::uint64_t k = parse_int("free rank");
      if (k > 100000) throw ParseError("free rank too large", start);
      return std::vector<CyclicFactor>(k, CyclicFactor::infinite());
    }
    if (text_[pos_] != '_') return {CyclicFactor::infinite()};
    ++pos_;
    skip_space();
    std::uint64_t order;
    if (!at_end() && text_[pos_] == '{') {
      ++pos_;
      std::size_t base_pos = pos_;
      std::uint64_t base = parse_int("cyclic order");
      skip_space();
      order = base;
      if (!at_end() && text_[pos_] == '^') {
        ++pos_;
        std::uint64_t e = parse_int("exponent");
        order = 1;
        for (std::uint64_t k = 0; k < e; ++k) {
          if (base != 0 && order > std::numeric_limits<std::uint64_t>::max() / base)
            throw ParseError("cyclic order does not fit in 64 bits", base_pos);
          order *= base;
        }
      }
      expect('}');
    } else {
      order = parse_int("cyclic order");
    }
    if (order == 0) throw ParseError("cyclic order must be >= 1", start);
    return {CyclicFactor::finite(order)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group(std::string_view text) { return GroupParser(text).parse(); }

std::string render_group(const GroupSpec& g) {
  const auto& factors = g.factors();
  if (factors.empty()) return "Z^0";
  std::ostringstream out;
  if (g.is_abelian()) {
    unsigned m = g.free_rank();
    bool first = true;
    if (m > 0) {
      out << (m == 1 ? std::string("Z") : "Z^" + std::to_string(m));
      first = false;
    }
    for (auto r : g.finite_orders()) {
      if (!first) out << " + ";
      out << "Z_" << r;
      first = false;
    }
    return out.str();
  }
  auto classes = g.class_list();
  out << factor_text(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    out << " *" << classes[i - 1] << "* " << factor_text(factors[i]);
  return out.str();
}

ClassRow parse_class_row(std::string_view text) {
  std::vector<unsigned> classes;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected class (positive integer)", pos);
    if (value == 0) throw ParseError("class row entries must be >= 1", pos);
    classes.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in class row", pos);
    ++pos;
  }
  return ClassRow(std::move(classes));
}

std::string render_class_row(const ClassRow& row) {
  std::string out;
  for (std::size_t k = 0; k < row.length(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(row[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// AbelianStructure and orders

AbelianStructure::AbelianStructure(Exponent free_rank, std::vector<TorsionSummand> torsion)
    : free_rank_(std::move(free_rank)) {
  if (free_rank_ < 0) throw std::invalid_argument("free rank must be >= 0");
  std::map<std::uint64_t, Exponent, std::greater<>> merged;
  for (auto& s : torsion) {
    if (s.modulus == 0) throw std::invalid_argument("torsion modulus must be >= 1");
    if (s.multiplicity < 0) throw std::invalid_argument("multiplicity must be >= 0");
    if (s.modulus == 1 || s.multiplicity == 0) continue;
    merged[s.modulus] += s.multiplicity;
  }
  for (auto& [modulus, mult] : merged) {
    if (!torsion_.empty() && torsion_.back().modulus % modulus != 0)
      throw InvariantError("divisibility-chain", "torsion moduli must form a divisibility chain");
    torsion_.push_back({modulus, mult});
  }
}

std::string render_structure(const AbelianStructure& a) {
  if (a.is_trivial()) return "0";
  std::vector<std::string> parts;
  auto power = [](const std::string& base, const Exponent& mult) {
    return mult == 1 ? base : base + "^(" + mult.get_str() + ")";
  };
  if (a.free_rank() > 0) parts.push_back(power("Z", a.free_rank()));
  for (const auto& s : a.torsion()) parts.push_back(power("Z_" + std::to_string(s.modulus), s.multiplicity));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::optional<PPowerOrder> GroupOrder::as_prime_power() const {
  if (infinite_ || factors_.size() != 1) return std::nullopt;
  return factors_.front();
}

Exponent GroupOrder::exponent_of(std::uint64_t p) const {
  if (infinite_) throw std::logic_error("exponent_of: order is infinite");
  for (const auto& f : factors_)
    if (f.p == p) return f.exponent;
  return 0;
}

GroupOrder order_of(const AbelianStructure& a) {
  if (a.free_rank() > 0) return GroupOrder::infinite();
  std::map<std::uint64_t, Exponent> exponents;
  for (const auto& s : a.torsion())
    for (auto [q, e] : factorize(s.modulus)) exponents[q] += s.multiplicity * e;
  std::vector<PPowerOrder> factors;
  for (auto& [q, e] : exponents) factors.push_back({q, e});
  return GroupOrder::finite(std::move(factors));
}

std::string render_order(const GroupOrder& order) {
  if (order.is_infinite()) return "infinite";
  if (order.is_trivial()) return "1";
  std::string out;
  for (const auto& f : order.factorization()) {
    if (!out.empty()) out += " * ";
    out += std::to_string(f.p) + "^" + f.exponent.get_str();
  }
  return out;
}

}  // namespace polymult
