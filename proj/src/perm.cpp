#include "fuschar/perm.hpp"

#include "fuschar/common.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fuschar {

Permutation::Permutation(unsigned degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t v : img_) {
    if (v >= img_.size() || seen[v]) throw DomainError("Permutation: image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::parse_cycles(const std::string& text, unsigned degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_blank();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("cycle notation: expected '(' at \"" + text.substr(i) + "\"");
    ++i;
    std::vector<std::uint32_t> cycle;
    skip_blank();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("cycle notation: expected a point number in \"" + text + "\"");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) throw ParseError("cycle notation: point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (v == 0) throw ParseError("cycle notation: points are 1-based; 0 is not a point");
      std::uint32_t pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt]) throw ParseError("cycle notation: point " + std::to_string(v) + " repeated");
      used[pt] = true;
      cycle.push_back(pt);
      skip_blank();
    }
    if (i >= text.size()) throw ParseError("cycle notation: unbalanced '('");
    ++i;  // consume ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_blank();
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw DomainError("Permutation: degree mismatch in composition");
  std::vector<std::uint32_t> img(img_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = img_[rhs.img_[x]];
  Permutation out;
  out.img_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(img_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[img_[x]] = static_cast<std::uint32_t>(x);
  Permutation out;
  out.img_ = std::move(img);
  return out;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g * (*this) * g.inverse();
}

Permutation Permutation::power(long long k) const {
  const std::uint64_t n = order();
  long long r = k % static_cast<long long>(n);
  if (r < 0) r += static_cast<long long>(n);
  Permutation acc(degree());
  Permutation base = *this;
  std::uint64_t e = static_cast<std::uint64_t>(r);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    std::uint32_t y = static_cast<std::uint32_t>(x);
    while (!seen[y]) {
      seen[y] = true;
      y = img_[y];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) {
      seen[x] = true;
      continue;
    }
    out << '(';
    std::uint32_t y = static_cast<std::uint32_t>(x);
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << (y + 1);
      first = false;
      y = img_[y];
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace fuschar
