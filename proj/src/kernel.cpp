#include "listsep/kernel.hpp"

#include <boost/integer/common_factor.hpp>

namespace listsep::kernel {

RationalVector RationalVector::unit(int n, int i) {
  RationalVector v = zero(n);
  v[i] = 1;
  return v;
}

RationalVector& RationalVector::operator+=(const RationalVector& rhs) {
  if (rhs.size() != size()) throw DomainError("vector length mismatch");
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += rhs.entries[k];
  return *this;
}

RationalVector operator-(RationalVector lhs, const RationalVector& rhs) {
  if (rhs.size() != lhs.size()) throw DomainError("vector length mismatch");
  for (std::size_t k = 0; k < lhs.entries.size(); ++k) lhs.entries[k] -= rhs.entries[k];
  return lhs;
}

RationalVector operator*(const Rational& s, RationalVector v) {
  for (auto& e : v.entries) e *= s;
  return v;
}

Rational dot(const RationalVector& lhs, const RationalVector& rhs) {
  if (rhs.size() != lhs.size()) throw DomainError("vector length mismatch");
  Rational sum = 0;
  for (std::size_t k = 0; k < lhs.entries.size(); ++k) sum += lhs.entries[k] * rhs.entries[k];
  return sum;
}

namespace {

void need(int n, int min_n, const char* what) {
  if (n < min_n || n > 64) throw DomainError(std::string(what) + " needs " + std::to_string(min_n) + " <= n <= 64");
}

Rational pow2(int e) { return Rational(BigInt(1) << e); }

}  // namespace

RationalVector vec_a(int n) {
  need(n, 1, "vec_a");
  RationalVector v = RationalVector::zero(n);
  for (int i = 1; i <= n; ++i) v[i] = Rational(binomial(n - 1, i - 1));
  return v;
}

RationalVector vec_c(int n) {
  need(n, 2, "vec_c");
  RationalVector v = RationalVector::zero(n);
  for (int i = 2; i <= n; ++i) v[i] = Rational(binomial(n - 2, i - 2));
  return v;
}

RationalVector vec_psi(int n) {
  need(n, 1, "vec_psi");
  RationalVector v = RationalVector::zero(n);
  for (int i = 1; i <= n; ++i) v[i] = Rational(binomial(n, i));
  return v;
}

RationalVector as(int n, int i) {
  need(n, 2, "as");
  if (i < 1 || i > n / 2) throw DomainError("as(i) needs 1 <= i <= floor(n/2)");
  return RationalVector::unit(n, i) - RationalVector::unit(n, n + 1 - i);
}

RationalVector tp(int n, int i) {
  need(n, 3, "tp");
  if (i < 3 || i > n) throw DomainError("tp(i) needs 3 <= i <= n");
  RationalVector v = RationalVector::unit(n, i) + RationalVector::unit(n, i - 1);
  v[1] -= Rational(binomial(n, i - 1));
  return v;
}

RationalVector bn(int n) {
  need(n, 2, "bn");
  RationalVector v = RationalVector::zero(n);
  for (int i = 1; i <= n; ++i) v[i] = 1;
  v[1] -= pow2(n - 1);
  return v;
}

RationalVector asc(int n, int i) {
  need(n, 4, "asc");
  if (i < 2 || i > n / 2) throw DomainError("asc(i) needs 2 <= i <= floor(n/2)");
  Rational delta = Rational(binomial(n - 2, i - 2)) - Rational(binomial(n - 2, i - 1));
  return delta * as(n, 1) + as(n, i);
}

RationalVector tpc(int n, int i) {
  need(n, 4, "tpc");
  return Rational(binomial(n - 1, i - 2)) * as(n, 1) + tp(n, i);
}

RationalVector bnc(int n) {
  need(n, 4, "bnc");
  return pow2(n - 2) * as(n, 1) + bn(n);
}

std::vector<NamedVector> basis_ker_a(int n) {
  need(n, 3, "basis_ker_a");
  std::vector<NamedVector> out;
  for (int i = 1; i <= n / 2; ++i) out.push_back({"as(" + std::to_string(i) + ")", as(n, i)});
  for (int i = 3; i <= (n + 1) / 2; ++i) out.push_back({"tp(" + std::to_string(i) + ")", tp(n, i)});
  out.push_back({"bn", bn(n)});
  if (static_cast<int>(out.size()) != n - 1)
    throw std::logic_error("basis_ker_a(" + std::to_string(n) + ") has " + std::to_string(out.size()) + " members");
  return out;
}

std::vector<NamedVector> basis_ker_ac(int n) {
  need(n, 4, "basis_ker_ac");
  std::vector<NamedVector> out;
  for (int i = 2; i <= n / 2; ++i) out.push_back({"asc(" + std::to_string(i) + ")", asc(n, i)});
  for (int i = 3; i <= (n + 1) / 2; ++i) out.push_back({"tpc(" + std::to_string(i) + ")", tpc(n, i)});
  out.push_back({"bnc", bnc(n)});
  if (static_cast<int>(out.size()) != n - 2)
    throw std::logic_error("basis_ker_ac(" + std::to_string(n) + ") has " + std::to_string(out.size()) + " members");
  return out;
}

int rank(const std::vector<RationalVector>& family) {
  if (family.empty()) return 0;
  const std::size_t cols = family[0].entries.size();
  // Clear denominators row by row, then Bareiss elimination over the integers.
  std::vector<std::vector<BigInt>> m;
  for (const auto& v : family) {
    if (v.entries.size() != cols) throw DomainError("vector length mismatch");
    BigInt scale = 1;
    for (const auto& e : v.entries) scale = boost::integer::lcm(scale, BigInt(denominator(e)));
    std::vector<BigInt> row;
    for (const auto& e : v.entries) row.push_back(numerator(e) * (scale / denominator(e)));
    m.push_back(std::move(row));
  }

  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return static_cast<int>(r);
}

ExtremePoints extreme_points(int n, std::int64_t a, std::int64_t c) {
  need(n, 3, "extreme_points");
  if (a < 0 || c < 0) throw DomainError("extreme_points needs a, c >= 0");
  ExtremePoints out;
  if (a >= (n - 1) * c) {
    RationalVector x = RationalVector::zero(n);
    x[1] = a - (n - 1) * c;
    x[2] = c;
    out.x1 = x;
  }
  if ((n - 2) * a <= (n - 1) * c && c <= a) {
    RationalVector x = RationalVector::zero(n);
    x[n - 1] = a - c;
    x[n] = (n - 1) * c - (n - 2) * a;
    out.x2 = x;
  }
  return out;
}

}  // namespace listsep::kernel
