#pragma once

// Exact integer, rational and integer-matrix primitives. Nothing in the
// correctness path of this library touches floating point.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shortbasis {

using Int = boost::multiprecision::cpp_int;

// Decimal I/O. parse_int accepts an optional sign followed by digits only.
Int parse_int(std::string_view text);
std::string to_decimal(const Int& value);

// Representative of a in [0, |n|).
Int floor_mod(const Int& a, const Int& n);
// Quotient rounded toward -infinity.
Int floor_div(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);

// Bitlength of |x|; 0 for x = 0.
std::size_t bit_length(const Int& x);

// x in [1, n) with a*x = 1 (mod n). Throws kNotInvertible when gcd(a, n) != 1.
Int mod_inv(const Int& a, const Int& n);
Int mod_pow(const Int& base, const Int& exponent, const Int& modulus);

// Floor of the square root of n >= 0.
Int isqrt(const Int& n);
// s >= 0 with s*s = n; throws kNotASquare otherwise (including n < 0).
Int exact_sqrt(const Int& n);
bool is_square(const Int& n);

bool is_prime(const Int& n);
// Prime factorisation with multiplicities, primes ascending. |n| >= 1.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);
Int largest_prime_factor(const Int& n);

// Legendre symbol (a / p) for odd prime p: -1, 0 or 1.
int legendre(const Int& a, const Int& p);
// A square root of a modulo the prime p, or nullopt when a is a non-residue.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

// Uniform in [0, bound).
Int random_below(std::mt19937_64& rng, const Int& bound);
// Uniform in [lo, hi].
Int random_between(std::mt19937_64& rng, const Int& lo, const Int& hi);
// A uniformly chosen prime in [lo, hi]; the interval must contain one.
Int random_prime(std::mt19937_64& rng, const Int& lo, const Int& hi);

// Rational number kept in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(const Int& value) : num_(value), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rat(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rat(const Int& num, const Int& den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const { return Rat(-num_, den_); }
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  std::string to_string() const;

 private:
  Int num_;
  Int den_;
};

Rat abs(const Rat& x);
Int floor(const Rat& x);
// Nearest integer; exact halves round toward +infinity.
Int round_nearest(const Rat& x);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const Int> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::vector<Int> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  void set_row(std::size_t i, std::span<const Int> values);
  void swap_rows(std::size_t i, std::size_t j);

  // Bareiss fraction-free elimination. Requires a square matrix.
  Int determinant() const;
  Int max_abs_entry() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Int dot(std::span<const Int> a, std::span<const Int> b);

}  // namespace shortbasis
