#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsl {

/// Upper bound on carrier size for every finite structure in the library.
inline constexpr int kMaxCarrier = 16;

using Element = int;

/// A subset of a dense index carrier {0, ..., n-1}, stored as a bit mask.
///
/// Subsets carry no carrier size; operations that need one (complement,
/// iteration bounds) take it explicitly.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  Subset(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }

  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr Subset singleton(Element e) { return Subset(std::uint32_t{1} << e); }
  static Subset from_elements(const std::vector<Element>& elements) {
    Subset s;
    for (Element e : elements) s.insert(e);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(Element e) { bits_ |= std::uint32_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint32_t{1} << e); }

  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  constexpr Subset complement(int n) const { return Subset(~bits_ & full(n).bits_); }

  /// Smallest element; undefined on the empty set.
  constexpr Element min() const { return std::countr_zero(bits_); }
  constexpr Element max() const { return 31 - std::countl_zero(bits_); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) f(static_cast<Element>(std::countr_zero(b)));
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

  /// "[0,2]"-style rendering used in reports and the CLI.
  std::string to_string() const {
    std::string out = "[";
    bool first = true;
    for_each([&](Element e) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    });
    return out + "]";
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on sorted index lists ("[0,1]" < "[0,2]" < "[1]").
inline bool lex_less(Subset a, Subset b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

/// Every subset of an n-element carrier, in bit-mask order.
inline std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) out.emplace_back(b);
  return out;
}

inline void check_carrier_size(int n) {
  if (n < 1 || n > kMaxCarrier)
    throw std::invalid_argument("carrier size must be in 1.." + std::to_string(kMaxCarrier) +
                                ", got " + std::to_string(n));
}

}  // namespace tsl
