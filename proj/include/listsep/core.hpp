#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace listsep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Vertices are numbered 1..n throughout the public API.
using Vertex = int;

/// Raised when an input lies outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest vertex count for which a dense 2^n table is allowed.
inline constexpr int kMaxVertices = 20;

/// A nonempty subset of [n] stored as a bitmask: bit (v-1) set iff v is a member.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}

  static Subset of(const std::vector<Vertex>& members);
  static constexpr Subset full(int n) { return Subset((n >= 32) ? ~0u : ((1u << n) - 1u)); }
  static constexpr Subset singleton(Vertex v) { return Subset(1u << (v - 1)); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(Vertex v) const { return (mask_ >> (v - 1)) & 1u; }
  constexpr bool includes(Subset other) const { return (mask_ & other.mask_) == other.mask_; }
  constexpr bool meets(Subset other) const { return (mask_ & other.mask_) != 0; }

  /// Ascending member list, 1-based.
  std::vector<Vertex> members() const;
  std::string to_string() const;

  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Total order on subsets: ascending size, then lexicographic on the sorted
/// member sequence.
bool canonical_less(Subset lhs, Subset rhs);

/// All nonempty subsets of [n] in canonical order.
const std::vector<Subset>& canonical_subsets(int n);

/// Nonempty subsets of [n] of exactly `size` members, in lexicographic order.
std::vector<Subset> subsets_of_size(int n, int size);

BigInt binomial(int n, int k);
std::int64_t binomial64(int n, int k);

}  // namespace listsep
