#include "polymult/exponent_calculus.hpp"

#include <atomic>
#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace polymult;

namespace {

Exponent L(unsigned w, unsigned n) { return Exponent(static_cast<unsigned long>(oracle::lyndon_count(w, n))); }

std::vector<ClassRow> small_rows(unsigned max_class, unsigned max_length) {
  std::vector<ClassRow> rows;
  std::vector<std::vector<unsigned>> frontier{{}};
  for (unsigned s = 1; s <= max_length; ++s) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& prefix : frontier)
      for (unsigned c = 1; c <= max_class; ++c) {
        auto row = prefix;
        row.push_back(c);
        rows.emplace_back(row);
        next.push_back(row);
      }
    frontier = std::move(next);
  }
  return rows;
}

}  // namespace

TEST(ClassRow, RejectsEmptyAndZero) {
  EXPECT_THROW(ClassRow({}), std::invalid_argument);
  EXPECT_THROW(ClassRow({2, 0}), std::invalid_argument);
  ClassRow row({3, 1});
  EXPECT_EQ(row.length(), 2u);
  EXPECT_EQ(row.first(), 3u);
  EXPECT_EQ(row.tail().size(), 1u);
}

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_THROW(mobius(0), std::invalid_argument);
}

TEST(Mobius, MatchesDefiningRecursion) {
  for (std::uint64_t d = 1; d <= 300; ++d) EXPECT_EQ(mobius(d), oracle::mobius_recursive(d)) << d;
}

TEST(Witt, Examples) {
  for (unsigned long n = 0; n <= 12; ++n) {
    EXPECT_EQ(witt(1, n), n);
    EXPECT_EQ(witt(2, n), n * (n > 0 ? n - 1 : 0) / 2);
  }
  EXPECT_EQ(witt(3, 2ul), 2);
  for (unsigned w = 2; w <= 12; ++w) EXPECT_EQ(witt(w, 1ul), 0) << w;
  for (unsigned w = 1; w <= 12; ++w) EXPECT_EQ(witt(w, 0ul), 0) << w;
  EXPECT_THROW(witt(0, 3ul), std::invalid_argument);
  EXPECT_THROW(witt(2, Exponent(-1)), std::invalid_argument);
}

TEST(Witt, MatchesLyndonEnumeration) {
  for (unsigned w = 1; w <= 7; ++w)
    for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(witt(w, n), L(w, n)) << "w=" << w << " n=" << n;
}

TEST(Witt, ExactBeyondSixtyFourBits) {
  Exponent n("1000000000000000000000000000000");
  EXPECT_EQ(witt(2, n), n * (n - 1) / 2);
  // chi_3(n) = (n^3 - n) / 3
  EXPECT_EQ(witt(3, n), (n * n * n - n) / 3);
}

TEST(Witt, MonotoneInLetters) {
  for (unsigned w = 1; w <= 8; ++w)
    for (unsigned long n = 0; n < 40; ++n) EXPECT_LE(witt(w, n), witt(w, n + 1));
}

TEST(Witt, ConcurrentCallsAgree) {
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&] {
      for (int rep = 0; rep < 50; ++rep)
        for (unsigned w = 1; w <= 7; ++w)
          if (witt(w, 3ul) != L(w, 3)) ++mismatches;
    });
  for (auto& th : threads) th.join();
  EXPECT_EQ(mismatches.load(), 0);
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta(ClassRow({1}), 3), L(2, 3));
  EXPECT_EQ(beta(ClassRow({1}), 3), 3);
  // chi_2(chi_2(4)) = chi_2(6)
  EXPECT_EQ(beta(ClassRow({1, 1}), 4), L(2, 6));
  EXPECT_EQ(beta(ClassRow({1, 1}), 4), 15);
  for (const auto& row : small_rows(3, 3)) EXPECT_EQ(beta(row, 1), 0);
}

TEST(Beta, SingleClassIsWitt) {
  for (unsigned c = 1; c <= 5; ++c)
    for (unsigned long i = 0; i <= 10; ++i) EXPECT_EQ(beta(ClassRow({c}), i), witt(c + 1, i));
}

TEST(NestedTail, Examples) {
  EXPECT_EQ(nested_tail({}, 7), 7);
  std::vector<unsigned> one{1}, two{2};
  EXPECT_EQ(nested_tail(one, 3), L(2, 3));
  EXPECT_EQ(nested_tail(two, 2), L(3, 2));
  EXPECT_EQ(nested_tail(two, 2), 2);
}

TEST(DExponent, Examples) {
  EXPECT_EQ(d_exponent(ClassRow({2}), 2, 2), L(3, 2) + L(4, 2));
  EXPECT_EQ(d_exponent(ClassRow({2}), 2, 2), 5);
  EXPECT_EQ(d_exponent(ClassRow({2}), 2, 1), 0);
  EXPECT_EQ(d_exponent(ClassRow({1}), 1, 4), L(2, 4));
  EXPECT_EQ(d_exponent(ClassRow({1}), 1, 4), 6);
  EXPECT_THROW(d_exponent(ClassRow({1}), 2, 3), std::invalid_argument);
  EXPECT_THROW(d_exponent(ClassRow({1}), 0, 3), std::invalid_argument);
}

TEST(DExponent, ProductClassOneIsBeta) {
  for (const auto& row : small_rows(3, 3))
    for (unsigned long i = 0; i <= 8; ++i) EXPECT_EQ(d_exponent(row, 1, i), beta(row, i));
}

TEST(FGExponent, Examples) {
  EXPECT_EQ(f_exponent(2, 2, 2), L(3, 2) + L(4, 2));
  EXPECT_EQ(f_exponent(2, 2, 2), 5);
  EXPECT_EQ(g_exponent(1, 2, 3), L(3, 3));
  EXPECT_EQ(g_exponent(1, 2, 3), 8);
  EXPECT_THROW(f_exponent(1, 2, 3), std::invalid_argument);
  EXPECT_THROW(g_exponent(3, 2, 3), std::invalid_argument);
}

TEST(FGExponent, AgreeOnBoundary) {
  for (unsigned c = 1; c <= 5; ++c)
    for (unsigned long x = 0; x <= 10; ++x) EXPECT_EQ(f_exponent(c, c, x), g_exponent(c, c, x));
}

TEST(MultipleProduct, HValueInstantiated) {
  for (unsigned c1 = 2; c1 <= 4; ++c1) {
    ClassRow row({c1});
    std::vector<unsigned> classes{2, 2};
    Exponent expected = L(c1 + 1, 2) - L(c1 + 1, 1) + L(c1 + 2, 2) - L(c1 + 2, 1);
    EXPECT_EQ(h_value(row, classes, 1), expected);
  }
  std::vector<unsigned> classes{2};
  EXPECT_THROW(h_value(ClassRow({2}), classes, 0), std::invalid_argument);
  EXPECT_THROW(h_value(ClassRow({2}), classes, 2), std::invalid_argument);
}

TEST(MultipleProduct, UValue) {
  const unsigned c1 = 3;
  std::vector<unsigned> classes{2};
  EXPECT_EQ(u_value(ClassRow({c1}), classes, 2), L(c1 + 1, 2) + L(c1 + 2, 2));
  EXPECT_EQ(u_value(ClassRow({c1}), classes, 1), 0);
  EXPECT_EQ(u_value(ClassRow({c1}), classes, 0), 0);
  // t = 3 with classes (3,1): weights c1+1 on 3 letters, c1+2..c1+3 on 2 letters
  std::vector<unsigned> mixed{3, 1};
  EXPECT_EQ(u_value(ClassRow({c1}), mixed, 3), L(c1 + 1, 3) + L(c1 + 2, 2) + L(c1 + 3, 2));
}

TEST(MultipleProduct, RejectsBadClasses) {
  std::vector<unsigned> increasing{1, 2};
  std::vector<unsigned> too_big{3};
  EXPECT_THROW(u_value(ClassRow({3}), increasing, 2), std::invalid_argument);
  EXPECT_THROW(e_exponent(ClassRow({2}), too_big, 0, 1), std::invalid_argument);
}

TEST(MultipleProduct, EZeroIsTailOfU) {
  ClassRow row({2, 1});
  std::vector<unsigned> classes{2, 2, 1};
  for (unsigned t = 1; t <= 4; ++t)
    EXPECT_EQ(e_exponent(row, classes, t, 0), nested_tail(row.tail(), u_value(row, classes, t)));
}

TEST(MultipleProduct, EqualClassesReproduceD) {
  for (const auto& row : small_rows(3, 2))
    for (unsigned n = 1; n <= row.first(); ++n)
      for (unsigned k = 0; k <= 4; ++k) {
        std::vector<unsigned> classes(k, n);
        for (unsigned t = 0; t <= k + 1; ++t) {
          EXPECT_EQ(e_exponent(row, classes, t, 0), d_exponent(row, n, t));
          for (unsigned i = std::max(t, 1u); i <= k; ++i)
            EXPECT_EQ(e_exponent(row, classes, t, i), d_exponent(row, n, i + 1));
        }
      }
}

TEST(MultipleProduct, ERejectsIndexBelowT) {
  std::vector<unsigned> classes{2, 2, 2};
  EXPECT_THROW(e_exponent(ClassRow({2}), classes, 2, 1), std::invalid_argument);
  EXPECT_THROW(e_exponent(ClassRow({2}), classes, 0, 4), std::invalid_argument);
}

TEST(DifferenceMonotonicity, DAndBSequences) {
  for (const auto& row : small_rows(3, 2))
    for (unsigned n = 1; n <= row.first(); ++n) {
      std::vector<Exponent> d;
      for (unsigned long i = 0; i <= 9; ++i) d.push_back(d_exponent(row, n, i));
      for (unsigned i = 2; i <= 9; ++i)
        for (unsigned j = i; j <= 9; ++j) EXPECT_GE(d[j] - d[j - 1], d[i] - d[i - 1]);
    }
}
