#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fuschar {

// A permutation of {1, ..., n}.  Points are stored 0-based internally; all
// textual I/O uses 1-based disjoint cycle notation.  The canonical total
// order on permutations of equal degree is lexicographic on image arrays;
// it is the order used for element lists, class representatives and every
// deterministic tie-break in the library.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(unsigned degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  // Parses 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)"; "()" or an
  // empty string denotes the identity.  Commas and whitespace both separate
  // points.  Throws ParseError on malformed input or points outside 1..degree.
  static Permutation parse_cycles(const std::string& text, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  std::uint32_t apply(std::uint32_t point) const { return img_[point]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  // Composition acts left-to-right on arguments: (a*b)(x) = a(b(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  // g * this * g^{-1}
  Permutation conjugated_by(const Permutation& g) const;
  Permutation power(long long k) const;

  bool is_identity() const;
  std::uint64_t order() const;  // lcm of cycle lengths

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string cycle_string() const;

private:
  std::vector<std::uint32_t> img_;
};

}  // namespace fuschar
