#pragma once

#include <optional>
#include <string>
#include <vector>

#include "listsep/core.hpp"

namespace listsep::kernel {

/// Exact vector in Q^n; index k holds the coefficient of e_{k+1}.
struct RationalVector {
  std::vector<Rational> entries;

  static RationalVector zero(int n) { return {std::vector<Rational>(n)}; }
  static RationalVector unit(int n, int i);

  int size() const { return static_cast<int>(entries.size()); }
  const Rational& operator[](int i) const { return entries.at(i - 1); }
  Rational& operator[](int i) { return entries.at(i - 1); }

  RationalVector& operator+=(const RationalVector& rhs);
  friend RationalVector operator+(RationalVector lhs, const RationalVector& rhs) { return lhs += rhs; }
  friend RationalVector operator-(RationalVector lhs, const RationalVector& rhs);
  friend RationalVector operator*(const Rational& s, RationalVector v);
  friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

Rational dot(const RationalVector& lhs, const RationalVector& rhs);

/// sum_i C(n-1, i-1) e_i: list size of a symmetric assignment.
RationalVector vec_a(int n);
/// sum_{i>=2} C(n-2, i-2) e_i: pair intersection of a symmetric assignment.
RationalVector vec_c(int n);
/// sum_i C(n, i) e_i: amplitude of a symmetric assignment.
RationalVector vec_psi(int n);

RationalVector as(int n, int i);   // e_i - e_{n+1-i}
RationalVector tp(int n, int i);   // e_i + e_{i-1} - C(n, i-1) e_1
RationalVector bn(int n);          // sum e_i - 2^{n-1} e_1
RationalVector asc(int n, int i);  // Delta(i, n) as(1) + as(i)
RationalVector tpc(int n, int i);  // C(n-1, i-2) as(1) + tp(i)
RationalVector bnc(int n);         // 2^{n-2} as(1) + bn

struct NamedVector {
  std::string name;
  RationalVector vec;
};

/// as(1..floor(n/2)), tp(3..ceil(n/2)), bn. Throws if the family does not
/// have n-1 members.
std::vector<NamedVector> basis_ker_a(int n);

/// asc(2..floor(n/2)), tpc(3..ceil(n/2)), bnc. Throws if the family does not
/// have n-2 members.
std::vector<NamedVector> basis_ker_ac(int n);

/// Exact rank via fraction-free elimination.
int rank(const std::vector<RationalVector>& family);

struct ExtremePoints {
  std::optional<RationalVector> x1;  // a >= (n-1)c
  std::optional<RationalVector> x2;  // (n-2)a <= (n-1)c and c <= a
};

ExtremePoints extreme_points(int n, std::int64_t a, std::int64_t c);

}  // namespace listsep::kernel
