// Enumeration of basic commutators (a Hall basis of the free Lie ring) over
// an ordered alphabet. Independent of the Witt formula; used to check it.

#ifndef POLYMULT_HALL_ORACLE_HPP_
#define POLYMULT_HALL_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polymult/exponent_calculus.hpp"

namespace polymult {

/// Bounds on enumeration size. Overridable through the environment variables
/// POLYMULT_MAX_ALPHABET, POLYMULT_MAX_WEIGHT and POLYMULT_MAX_ELEMENTS.
struct ResourceCaps {
  std::size_t max_alphabet = 2000;
  unsigned max_weight = 8;
  std::size_t max_elements = 5'000'000;

  static ResourceCaps from_environment();
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis elements are addressed by index; indices increase with the basis
/// order (ascending weight, then lexicographic in (left, right)).
class HallBasis {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  struct Element {
    std::uint32_t left = kNone;   // kNone for a letter
    std::uint32_t right = kNone;
    std::uint32_t letter = kNone; // 0-based letter for a leaf
    unsigned weight = 1;
    /// Largest tag among the leaves; tags default to letter + 1.
    std::uint32_t max_tag = 0;

    bool is_letter() const { return left == kNone; }
  };

  /// Alphabet of `letters` letters x_1 < ... < x_n tagged 1..n.
  explicit HallBasis(std::size_t letters, ResourceCaps caps = {});
  /// Alphabet whose i-th letter carries tags[i]; max_tag propagates through
  /// brackets, so an alphabet of basis elements remembers original letters.
  explicit HallBasis(std::vector<std::uint32_t> tags, ResourceCaps caps = {});

  std::size_t letters() const { return letters_; }
  unsigned built_weight() const { return built_weight_; }

  /// Stores every basis element of weight <= w.
  void extend_to(unsigned weight);

  /// Visits basis elements of exactly `weight` in basis order as
  /// (left, right) pairs without storing them; weights below must be built
  /// (extend_to(weight - 1)). Letters are visited for weight 1.
  void stream(unsigned weight, const std::function<void(std::uint32_t left, std::uint32_t right)>& visit) const;

  const Element& operator[](std::uint32_t index) const { return elements_[index]; }
  std::size_t size() const { return elements_.size(); }
  /// Indices of stored elements of exactly `weight`.
  std::span<const std::uint32_t> of_weight(unsigned weight) const;

  /// "[[x2,x1],x1]" with 1-based letter names.
  std::string render(std::uint32_t index) const;
  /// Structural Hall condition: left > right, and if left = [a, b] then b <= right.
  bool satisfies_hall_condition(std::uint32_t index) const;

 private:
  std::size_t letters_;
  ResourceCaps caps_;
  unsigned built_weight_ = 0;
  std::vector<Element> elements_;
  std::vector<std::vector<std::uint32_t>> by_weight_;  // by_weight_[w]
};

struct BasisListing {
  std::vector<std::string> elements;  // rendered, basis order
  std::size_t count = 0;
};

/// Every basic commutator of exactly `weight` on `letters` letters; when
/// `containing` is set, only those involving that (1-based) letter.
BasisListing hall_basis(std::size_t letters, unsigned weight, ResourceCaps caps = {},
                        std::optional<std::size_t> containing = std::nullopt);

/// Number of weight-`weight` basis elements on n letters that involve x_letter.
std::uint64_t count_containing(std::size_t letters, unsigned weight, std::size_t letter, ResourceCaps caps = {});

/// |A_s| where A_1 holds the basic commutators of weights c_1+1..c_1+n on
/// x_1..x_i and A_k those of weight c_k+1 on the alphabet A_{k-1}.
/// Throws ResourceLimitError when an alphabet or weight exceeds the caps.
Exponent nested_hall_count(const ClassRow& row, unsigned product_class, std::size_t letters, ResourceCaps caps = {});

struct NestedCount {
  Exponent total;
  /// Elements of A_s whose letters include x_letters (the newest letter).
  Exponent containing_last;
};

/// Generalises nested_hall_count to a multiple product with classes
/// n_1 >= ... : A_1 holds basic commutators of weight c_1+lambda on
/// x_1..x_letters whose largest letter x_l has lambda <= n_{l-1}.
NestedCount nested_hall_count_multi(const ClassRow& row, std::span<const unsigned> classes, std::size_t letters,
                                    ResourceCaps caps = {});

}  // namespace polymult

#endif  // POLYMULT_HALL_ORACLE_HPP_
