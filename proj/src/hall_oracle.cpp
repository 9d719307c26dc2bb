#include "polymult/hall_oracle.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <numeric>

namespace polymult {

namespace {

template <typename T>
void read_cap(const char* name, T& value) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return;
  char* end = nullptr;
  errno = 0;
  unsigned long long parsed = std::strtoull(text, &end, 10);
  if (errno != 0 || *end != '\0' || parsed == 0)
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
  value = static_cast<T>(parsed);
}

}  // namespace

ResourceCaps ResourceCaps::from_environment() {
  ResourceCaps caps;
  read_cap("POLYMULT_MAX_ALPHABET", caps.max_alphabet);
  read_cap("POLYMULT_MAX_WEIGHT", caps.max_weight);
  read_cap("POLYMULT_MAX_ELEMENTS", caps.max_elements);
  return caps;
}

HallBasis::HallBasis(std::size_t letters, ResourceCaps caps) : HallBasis([&] {
  if (letters > caps.max_alphabet)
    throw ResourceLimitError("alphabet of " + std::to_string(letters) + " letters exceeds the cap of " +
                             std::to_string(caps.max_alphabet));
  std::vector<std::uint32_t> tags(letters);
  std::iota(tags.begin(), tags.end(), 1u);
  return tags;
}(), caps) {}

HallBasis::HallBasis(std::vector<std::uint32_t> tags, ResourceCaps caps)
    : letters_(tags.size()), caps_(caps), by_weight_(1) {
  if (letters_ > caps_.max_alphabet)
    throw ResourceLimitError("alphabet of " + std::to_string(letters_) + " letters exceeds the cap of " +
                             std::to_string(caps_.max_alphabet));
  elements_.reserve(letters_);
  by_weight_.emplace_back();
  for (std::size_t i = 0; i < letters_; ++i) {
    Element e;
    e.letter = static_cast<std::uint32_t>(i);
    e.max_tag = tags[i];
    by_weight_[1].push_back(static_cast<std::uint32_t>(elements_.size()));
    elements_.push_back(e);
  }
  built_weight_ = 1;
}

void HallBasis::extend_to(unsigned weight) {
  if (weight > caps_.max_weight)
    throw ResourceLimitError("weight " + std::to_string(weight) + " exceeds the cap of " +
                             std::to_string(caps_.max_weight));
  while (built_weight_ < weight) {
    const unsigned w = built_weight_ + 1;
    std::vector<std::uint32_t> indices;
    stream(w, [&](std::uint32_t left, std::uint32_t right) {
      if (elements_.size() >= caps_.max_elements)
        throw ResourceLimitError("Hall basis enumeration exceeds the cap of " +
                                 std::to_string(caps_.max_elements) + " stored elements");
      Element e;
      e.left = left;
      e.right = right;
      e.weight = w;
      e.max_tag = std::max(elements_[left].max_tag, elements_[right].max_tag);
      indices.push_back(static_cast<std::uint32_t>(elements_.size()));
      elements_.push_back(e);
    });
    by_weight_.push_back(std::move(indices));
    built_weight_ = w;
  }
}

void HallBasis::stream(unsigned weight,
                       const std::function<void(std::uint32_t, std::uint32_t)>& visit) const {
  if (weight < 2) throw std::invalid_argument("stream: weight must be >= 2");
  if (weight > caps_.max_weight)
    throw ResourceLimitError("weight " + std::to_string(weight) + " exceeds the cap of " +
                             std::to_string(caps_.max_weight));
  if (built_weight_ + 1 < weight) throw std::logic_error("stream: lower weights not built");
  // Left factors have weight >= ceil(w/2) since left > right in the basis order.
  for (unsigned wu = (weight + 1) / 2; wu < weight; ++wu) {
    const auto& rights = by_weight_[weight - wu];
    for (std::uint32_t u : by_weight_[wu]) {
      const Element& left = elements_[u];
      auto first = rights.begin();
      if (!left.is_letter()) first = std::lower_bound(rights.begin(), rights.end(), left.right);
      for (auto it = first; it != rights.end() && *it < u; ++it) visit(u, *it);
    }
  }
}

std::span<const std::uint32_t> HallBasis::of_weight(unsigned weight) const {
  if (weight == 0 || weight > built_weight_) return {};
  return by_weight_[weight];
}

std::string HallBasis::render(std::uint32_t index) const {
  const Element& e = elements_[index];
  if (e.is_letter()) return "x" + std::to_string(e.letter + 1);
  return "[" + render(e.left) + "," + render(e.right) + "]";
}

bool HallBasis::satisfies_hall_condition(std::uint32_t index) const {
  const Element& e = elements_[index];
  if (e.is_letter()) return e.weight == 1;
  if (e.left >= elements_.size() || e.right >= elements_.size()) return false;
  const Element& l = elements_[e.left];
  const Element& r = elements_[e.right];
  if (e.weight != l.weight + r.weight) return false;
  // Basis order is weight first, then index.
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::pair{elements_[a].weight, a} < std::pair{elements_[b].weight, b};
  };
  if (!less(e.right, e.left)) return false;
  if (!l.is_letter() && less(e.right, l.right)) return false;
  return satisfies_hall_condition(e.left) && satisfies_hall_condition(e.right);
}

namespace {

bool involves(const HallBasis& basis, std::uint32_t index, std::uint32_t letter) {
  const auto& e = basis[index];
  if (e.is_letter()) return e.letter == letter;
  return involves(basis, e.left, letter) || involves(basis, e.right, letter);
}

}  // namespace

BasisListing hall_basis(std::size_t letters, unsigned weight, ResourceCaps caps,
                        std::optional<std::size_t> containing) {
  if (weight == 0) throw std::invalid_argument("hall_basis: weight must be >= 1");
  if (containing && (*containing == 0 || *containing > letters))
    throw std::out_of_range("hall_basis: letter index must satisfy 1 <= i <= n");
  HallBasis basis(letters, caps);
  basis.extend_to(weight);
  BasisListing listing;
  for (auto idx : basis.of_weight(weight)) {
    if (containing && !involves(basis, idx, static_cast<std::uint32_t>(*containing - 1))) continue;
    listing.elements.push_back(basis.render(idx));
  }
  listing.count = listing.elements.size();
  return listing;
}

std::uint64_t count_containing(std::size_t letters, unsigned weight, std::size_t letter, ResourceCaps caps) {
  if (letter == 0 || letter > letters)
    throw std::out_of_range("count_containing: letter index must satisfy 1 <= i <= n");
  if (weight == 0) throw std::invalid_argument("count_containing: weight must be >= 1");
  HallBasis basis(letters, caps);
  const auto target = static_cast<std::uint32_t>(letter - 1);
  if (weight == 1) return 1;
  basis.extend_to(weight - 1);
  std::uint64_t count = 0;
  basis.stream(weight, [&](std::uint32_t left, std::uint32_t right) {
    if (involves(basis, left, target) || involves(basis, right, target)) ++count;
  });
  return count;
}

NestedCount nested_hall_count_multi(const ClassRow& row, std::span<const unsigned> classes, std::size_t letters,
                                    ResourceCaps caps) {
  validate_multiple_classes(row, classes);
  if (letters >= 2 && classes.size() < letters - 1)
    throw std::invalid_argument("nested_hall_count: need a class for every adjacent pair of letters");
  NestedCount result{0, 0};
  if (letters == 0) return result;
  const unsigned c1 = row.first();
  const unsigned top_class = classes.empty() ? 0 : classes.front();
  const auto newest = static_cast<std::uint32_t>(letters);

  // A_1: weight c_1 + lambda with lambda <= n_{l-1} for the largest letter x_l.
  HallBasis first(letters, caps);
  std::vector<std::uint32_t> alphabet;  // tags of A_1 elements
  if (top_class > 0) first.extend_to(c1 + top_class);
  for (unsigned lambda = 1; lambda <= top_class; ++lambda)
    for (auto idx : first.of_weight(c1 + lambda)) {
      const std::uint32_t l = first[idx].max_tag;
      if (l >= 2 && lambda <= classes[l - 2]) alphabet.push_back(l);
    }

  for (std::size_t k = 1; k < row.length(); ++k) {
    if (alphabet.size() > caps.max_alphabet)
      throw ResourceLimitError("nested alphabet A_" + std::to_string(k) + " has " + std::to_string(alphabet.size()) +
                               " elements, above the cap of " + std::to_string(caps.max_alphabet));
    HallBasis level(alphabet, caps);
    const unsigned w = row[k] + 1;
    level.extend_to(w - 1);
    std::vector<std::uint32_t> next;
    const bool last = k + 1 == row.length();
    level.stream(w, [&](std::uint32_t left, std::uint32_t right) {
      const std::uint32_t tag = std::max(level[left].max_tag, level[right].max_tag);
      if (last) {
        ++result.total;
        if (tag == newest) ++result.containing_last;
      } else {
        if (next.size() >= caps.max_elements)
          throw ResourceLimitError("nested alphabet exceeds the cap of " + std::to_string(caps.max_elements));
        next.push_back(tag);
      }
    });
    if (last) return result;
    alphabet = std::move(next);
  }

  result.total = static_cast<unsigned long>(alphabet.size());
  result.containing_last = static_cast<unsigned long>(std::count(alphabet.begin(), alphabet.end(), newest));
  return result;
}

Exponent nested_hall_count(const ClassRow& row, unsigned product_class, std::size_t letters, ResourceCaps caps) {
  if (product_class == 0 || row.first() < product_class)
    throw std::invalid_argument("nested_hall_count: requires c_1 >= n >= 1");
  std::vector<unsigned> classes(letters > 0 ? letters - 1 : 0, product_class);
  if (letters <= 1) classes.assign(1, product_class);
  return nested_hall_count_multi(row, classes, letters, caps).total;
}

}  // namespace polymult
