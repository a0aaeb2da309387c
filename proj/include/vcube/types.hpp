#pragma once

// Label sets, ordered label sequences, the fixed ordering of L and the
// (Z/2Z)^L parameters that name sheets of the cover.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vcube {

/// Largest n for which every subset of [n] fits in a TypeSet.
inline constexpr int kMaxLabels = 31;

/// Largest n for which a Parameter (one bit per element of L) fits in 64 bits.
inline constexpr int kMaxParameterLabels = 6;

/// Unordered subset of [n]; bit (i - 1) is set when label i is present.
class TypeSet {
 public:
  constexpr TypeSet() = default;
  constexpr explicit TypeSet(std::uint32_t mask) : mask_(mask) {}

  static TypeSet of(std::initializer_list<int> labels) {
    TypeSet t;
    for (int l : labels) t = t.with(l);
    return t;
  }

  template <typename Range>
  static TypeSet from_labels(const Range& labels) {
    TypeSet t;
    for (int l : labels) t = t.with(l);
    return t;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int label) const {
    return label >= 1 && label <= kMaxLabels && (mask_ >> (label - 1)) & 1u;
  }

  TypeSet with(int label) const {
    if (label < 1 || label > kMaxLabels) throw std::out_of_range("label out of range: " + std::to_string(label));
    return TypeSet(mask_ | (1u << (label - 1)));
  }

  constexpr TypeSet operator&(TypeSet o) const { return TypeSet(mask_ & o.mask_); }
  constexpr TypeSet operator|(TypeSet o) const { return TypeSet(mask_ | o.mask_); }
  constexpr TypeSet minus(TypeSet o) const { return TypeSet(mask_ & ~o.mask_); }

  constexpr bool subset_of(TypeSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool disjoint(TypeSet o) const { return (mask_ & o.mask_) == 0; }
  constexpr bool nested(TypeSet o) const { return subset_of(o) || o.subset_of(*this); }

  /// Member of L: at least two labels.
  constexpr bool in_L() const { return size() >= 2; }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  /// "{1,2,3}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int l : labels()) {
      if (!first) s += ',';
      s += std::to_string(l);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(TypeSet, TypeSet) = default;
  friend constexpr auto operator<=>(TypeSet, TypeSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Neither nested nor disjoint: no midcube of one type can reflect an edge of the other.
constexpr bool strongly_invalid(TypeSet a, TypeSet b) { return !a.nested(b) && !a.disjoint(b); }

/// Sequence of distinct labels, e.g. the depth-first leaf order above an edge.
using OrderedSubset = std::vector<int>;

inline OrderedSubset reversed(OrderedSubset a) {
  std::reverse(a.begin(), a.end());
  return a;
}

inline TypeSet support(const OrderedSubset& a) { return TypeSet::from_labels(a); }

inline bool has_repeats(const OrderedSubset& a) {
  return support(a).size() != static_cast<int>(a.size());
}

/// "(1,2,3)"
inline std::string to_string(const OrderedSubset& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + ")";
}

/// The set L of subsets of [n] with at least two elements, in the fixed
/// order used for parameter bits: by size, then lexicographically on the
/// sorted elements.
class TypeIndex {
 public:
  explicit TypeIndex(int n) : n_(n) {
    if (n < 1 || n > kMaxLabels) throw std::out_of_range("n out of range: " + std::to_string(n));
    for (std::uint32_t m = 0; m < (1u << n); ++m)
      if (std::popcount(m) >= 2) order_.emplace_back(m);
    std::sort(order_.begin(), order_.end(), [](TypeSet a, TypeSet b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.labels() < b.labels();
    });
    position_.assign(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i].mask()] = static_cast<int>(i);
  }

  int n() const { return n_; }
  std::size_t size() const { return order_.size(); }
  TypeSet at(std::size_t i) const { return order_.at(i); }
  const std::vector<TypeSet>& ordering() const { return order_; }

  bool contains(TypeSet t) const {
    return t.mask() < position_.size() && position_[t.mask()] >= 0;
  }

  std::size_t position(TypeSet t) const {
    if (!contains(t)) throw std::invalid_argument("type " + t.to_string() + " is not in L for n=" + std::to_string(n_));
    return static_cast<std::size_t>(position_[t.mask()]);
  }

 private:
  int n_;
  std::vector<TypeSet> order_;
  std::vector<int> position_;
};

/// Element of (Z/2Z)^L. Bit i is the coordinate of TypeIndex::at(i).
class Parameter {
 public:
  constexpr Parameter() = default;
  constexpr explicit Parameter(std::uint64_t bits) : bits_(bits) {}

  static Parameter unit(const TypeIndex& L, TypeSet t) {
    check_width(L);
    return Parameter(std::uint64_t{1} << L.position(t));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }
  bool coordinate(const TypeIndex& L, TypeSet t) const { return (bits_ >> L.position(t)) & 1u; }

  constexpr Parameter operator+(Parameter o) const { return Parameter(bits_ ^ o.bits_); }
  constexpr Parameter& operator+=(Parameter o) {
    bits_ ^= o.bits_;
    return *this;
  }

  /// Lowercase hex, least-significant bit = first type of L, zero-padded to
  /// ceil(|L| / 4) digits.
  std::string to_hex(const TypeIndex& L) const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t digits = std::max<std::size_t>(1, (L.size() + 3) / 4);
    std::string s(digits, '0');
    for (std::size_t i = 0; i < digits; ++i) s[digits - 1 - i] = kDigits[(bits_ >> (4 * i)) & 0xf];
    return s;
  }

  static Parameter from_hex(std::string_view hex, const TypeIndex& L) {
    check_width(L);
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("empty parameter");
    std::uint64_t v = 0;
    for (char c : hex) {
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else throw std::invalid_argument("bad hex digit in parameter: " + std::string(hex));
      if (v >> 60) throw std::invalid_argument("parameter too wide: " + std::string(hex));
      v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    if (L.size() < 64 && (v >> L.size()) != 0)
      throw std::invalid_argument("parameter " + std::string(hex) + " has bits outside L");
    return Parameter(v);
  }

  static void check_width(const TypeIndex& L) {
    if (L.size() > 64)
      throw std::out_of_range("parameters are limited to n <= " + std::to_string(kMaxParameterLabels));
  }

  friend constexpr bool operator==(Parameter, Parameter) = default;
  friend constexpr auto operator<=>(Parameter, Parameter) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// s + 1_l
inline Parameter param_add(Parameter s, TypeSet l, const TypeIndex& L) { return s + Parameter::unit(L, l); }

}  // namespace vcube
