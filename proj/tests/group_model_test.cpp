#include "polymult/group_model.hpp"

#include <random>

#include <gtest/gtest.h>

#include "polymult/hypotheses.hpp"

using namespace polymult;

TEST(ParseGroup, NilpotentProduct) {
  GroupSpec g = parse_group("Z_9 *2* Z_3");
  ASSERT_EQ(g.factors().size(), 2u);
  EXPECT_EQ(g.finite_orders(), (std::vector<std::uint64_t>{9, 3}));
  ASSERT_TRUE(g.is_uniform());
  EXPECT_EQ(g.uniform_class(), 2u);
}

TEST(ParseGroup, DirectSum) {
  GroupSpec g = parse_group("Z^2 + Z_4 + Z_2");
  EXPECT_EQ(g.free_rank(), 2u);
  EXPECT_EQ(g.finite_orders(), (std::vector<std::uint64_t>{4, 2}));
  EXPECT_TRUE(g.is_abelian());
}

TEST(ParseGroup, PrimePowerShorthandAndWhitespace) {
  GroupSpec g = parse_group("  Z_{3^2}*2*Z_{3}  ");
  EXPECT_EQ(g, parse_group("Z_9 *2* Z_3"));
  EXPECT_EQ(parse_group("Z_{2^10}").finite_orders(), (std::vector<std::uint64_t>{1024}));
}

TEST(ParseGroup, MultipleClasses) {
  GroupSpec g = parse_group("Z *2* Z *1* Z_3");
  ASSERT_FALSE(g.is_uniform());
  EXPECT_EQ(g.class_list(), (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(g.free_rank(), 2u);
}

TEST(ParseGroup, FreePowerInsideProduct) {
  GroupSpec g = parse_group("Z^3 *2* Z_5");
  EXPECT_EQ(g.free_rank(), 3u);
  EXPECT_EQ(g.class_list(), (std::vector<unsigned>{2, 2, 2}));
  EXPECT_THROW(parse_group("Z^0 *2* Z_5"), ParseError);
}

TEST(ParseGroup, DivisibilityChainViolation) {
  try {
    parse_group("Z_2 *3* Z_4");
    FAIL() << "expected InvariantError";
  } catch (const InvariantError& e) {
    EXPECT_EQ(e.condition(), "divisibility-chain");
    EXPECT_NE(std::string(e.what()).find("4 does not divide 2"), std::string::npos);
  }
}

TEST(ParseGroup, OtherInvariantViolations) {
  EXPECT_THROW(parse_group("Z_3 + Z"), InvariantError);
  try {
    parse_group("Z_9 *1* Z_3 *2* Z_3");
    FAIL();
  } catch (const InvariantError& e) {
    EXPECT_EQ(e.condition(), "classes-nonincreasing");
  }
}

TEST(ParseGroup, SyntaxErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t position;
  };
  for (auto [text, position] : {Case{"", 0}, Case{"Z_", 2}, Case{"Z_4 + X", 6}, Case{"Z_4 *2 Z_2", 7},
                                Case{"Z_4 + Z_2 *2* Z_2", 10}, Case{"Z_0", 0}, Case{"Z_4 *0* Z_2", 4},
                                Case{"Z_{2^70}", 3}}) {
    try {
      parse_group(text);
      FAIL() << "expected ParseError for '" << text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), position) << text << ": " << e.what();
    }
  }
}

TEST(ParseGroup, TrivialFactorsDropped) {
  EXPECT_EQ(parse_group("Z_4 + Z_1 + Z_2"), parse_group("Z_4 + Z_2"));
  GroupSpec g = parse_group("Z_4 *2* Z_1 *2* Z_2");
  EXPECT_EQ(g, parse_group("Z_4 *2* Z_2"));
  EXPECT_TRUE(parse_group("Z_1").factors().empty());
}

TEST(RenderGroup, RoundTripOnParsedSpecs) {
  std::mt19937 rng(7);
  const std::vector<std::uint64_t> chains[] = {{}, {2}, {8, 4, 2}, {9, 3}, {12, 6, 6, 3}, {25}};
  for (int rep = 0; rep < 300; ++rep) {
    const auto& orders = chains[rng() % std::size(chains)];
    unsigned free_rank = rng() % 3;
    std::size_t factors = free_rank + orders.size();
    if (factors == 0) continue;
    std::string text;
    bool product = rng() % 2 == 0;
    std::vector<unsigned> classes;
    unsigned cls = 1 + rng() % 4;
    for (std::size_t i = 0; i + 1 < factors; ++i) {
      classes.push_back(cls);
      if (rng() % 3 == 0 && cls > 1) --cls;
    }
    for (std::size_t i = 0; i < factors; ++i) {
      if (i > 0) text += product ? " *" + std::to_string(classes[i - 1]) + "* " : " + ";
      text += i < free_rank ? "Z" : "Z_" + std::to_string(orders[i - free_rank]);
    }
    GroupSpec g = parse_group(text);
    EXPECT_EQ(parse_group(render_group(g)), g) << text << " -> " << render_group(g);
    // canonicalisation is idempotent
    EXPECT_EQ(render_group(parse_group(render_group(g))), render_group(g));
  }
}

TEST(GroupSpec, CyclicPProduct) {
  GroupSpec g = GroupSpec::cyclic_p_product(3, {2, 1, 1}, 2u);
  EXPECT_EQ(g.finite_orders(), (std::vector<std::uint64_t>{9, 3, 3}));
  EXPECT_EQ(g.common_prime(), 3u);
  EXPECT_EQ(g.prime_exponents(), (std::vector<unsigned>{2, 1, 1}));
  EXPECT_THROW(GroupSpec::cyclic_p_product(4, {1}, 1u), std::invalid_argument);
  EXPECT_THROW(GroupSpec::cyclic_p_product(3, {1, 2}, 1u), InvariantError);
  EXPECT_FALSE(parse_group("Z_6").common_prime());
  EXPECT_FALSE(parse_group("Z_6 + Z_3").common_prime());
}

TEST(ClassRowParsing, CommaList) {
  EXPECT_EQ(parse_class_row("2,1"), ClassRow({2, 1}));
  EXPECT_EQ(parse_class_row("3"), ClassRow({3}));
  EXPECT_THROW(parse_class_row("2,,1"), ParseError);
  EXPECT_THROW(parse_class_row("0"), ParseError);
  EXPECT_EQ(render_class_row(ClassRow({2, 1})), "2,1");
}

TEST(AbelianStructure, CanonicalForm) {
  AbelianStructure a(0, {{2, 1}, {4, 1}, {2, 2}, {1, 5}, {8, 0}});
  ASSERT_EQ(a.torsion().size(), 2u);
  EXPECT_EQ(a.torsion()[0].modulus, 4u);
  EXPECT_EQ(a.torsion()[1].multiplicity, 3);
  EXPECT_THROW(AbelianStructure(0, {{4, 1}, {3, 1}}), InvariantError);
  EXPECT_EQ(render_structure(AbelianStructure(1, {{4, 2}, {2, 3}})), "Z + Z_4^(2) + Z_2^(3)");
  EXPECT_EQ(render_structure(AbelianStructure()), "0");
}

TEST(OrderOf, Examples) {
  GroupOrder o = order_of(AbelianStructure(0, {{3, 5}}));
  EXPECT_EQ(o.as_prime_power(), (PPowerOrder{3, 5}));
  EXPECT_TRUE(order_of(AbelianStructure(2, {{3, 5}})).is_infinite());
  EXPECT_EQ(order_of(AbelianStructure(0, {{4, 1}, {2, 1}})).as_prime_power(), (PPowerOrder{2, 3}));
  EXPECT_EQ(render_order(order_of(AbelianStructure(0, {{6, 2}}))), "2^2 * 3^2");
}

TEST(OrderOf, TrivialIsPToTheZero) {
  GroupOrder o = order_of(AbelianStructure(0, {{5, 0}, {1, 3}}));
  EXPECT_TRUE(o.is_trivial());
  EXPECT_EQ(o.exponent_of(5), 0);
  EXPECT_EQ(render_order(o), "1");
}

// --- hypothesis checklists -------------------------------------------------

namespace {

const Condition* find(const Checklist& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(CheckHypotheses, CoprimeProductSatisfied) {
  auto checks = check_hypotheses(parse_group("Z_9 *2* Z_3"), VarietySpec{ClassRow({2})}, Theorem::T2_14);
  EXPECT_TRUE(all_satisfied(checks));
  ASSERT_NE(find(checks, "gcd(2,9)=1"), nullptr);
  EXPECT_TRUE(find(checks, "c1>=n")->satisfied);
}

TEST(CheckHypotheses, SharedPrimeViolated) {
  auto checks = check_hypotheses(parse_group("Z_2 *2* Z_2"), VarietySpec{ClassRow({2})}, Theorem::T2_14);
  ASSERT_NE(find(checks, "gcd(2,2)=1"), nullptr);
  EXPECT_FALSE(find(checks, "gcd(2,2)=1")->satisfied);
  EXPECT_EQ(first_violation(checks)->name, "gcd(2,2)=1");
}

TEST(CheckHypotheses, ClassOrderingViolated) {
  auto checks = check_hypotheses(parse_group("Z_3 *2* Z_3"), VarietySpec{ClassRow({1})}, Theorem::T2_14);
  EXPECT_FALSE(find(checks, "c1>=n")->satisfied);
  EXPECT_NE(find(checks, "c1>=n")->description.find("c_1 = 1 < n = 2"), std::string::npos);
}

TEST(CheckHypotheses, CoprimalityBoundDependsOnTheorem) {
  GroupSpec g = parse_group("Z_9 *2* Z_3");
  VarietySpec v{ClassRow({2})};
  EXPECT_TRUE(all_satisfied(check_hypotheses(g, v, Theorem::T2_13)));     // primes <= 2
  EXPECT_FALSE(all_satisfied(check_hypotheses(g, v, Theorem::T2_15ii)));  // primes <= 4
  EXPECT_FALSE(all_satisfied(check_hypotheses(g, v, Theorem::T2_15i)));   // also needs n >= c... and 3
}

TEST(CheckHypotheses, ExtremalityConditions) {
  VarietySpec v{ClassRow({2})};
  EXPECT_TRUE(all_satisfied(check_hypotheses(GroupSpec::cyclic_p_product(5, {2, 1}, 2u), v, Theorem::T3_1)));
  EXPECT_FALSE(all_satisfied(check_hypotheses(GroupSpec::cyclic_p_product(2, {2, 1}, 2u), v, Theorem::T3_1)));
  EXPECT_FALSE(all_satisfied(check_hypotheses(parse_group("Z_6"), v, Theorem::C3_4)));
  EXPECT_FALSE(all_satisfied(check_hypotheses(parse_group("Z *2* Z_5"), v, Theorem::T3_1)));
  EXPECT_TRUE(all_satisfied(check_hypotheses(GroupSpec::cyclic_p_product(7, {1, 1, 1}, std::vector<unsigned>{2, 1}),
                                             v, Theorem::T3_2)));
}

TEST(Theorems, NamesRoundTrip) {
  for (Theorem t : {Theorem::T2_7, Theorem::T2_11, Theorem::T2_13, Theorem::T2_14, Theorem::T2_15i,
                    Theorem::T2_15ii, Theorem::T2_16, Theorem::T3_1, Theorem::T3_2, Theorem::T3_3, Theorem::C3_4})
    EXPECT_EQ(parse_theorem(theorem_name(t)), t);
  EXPECT_EQ(parse_theorem("2.15(ii)"), Theorem::T2_15ii);
  EXPECT_FALSE(parse_theorem("T9.9"));
}
