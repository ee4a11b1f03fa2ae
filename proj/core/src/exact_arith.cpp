#include "shortbasis/exact_arith.hpp"

#include <algorithm>
#include <cctype>

#include <boost/multiprecision/miller_rabin.hpp>

#include "shortbasis/error.hpp"

namespace shortbasis {

Int parse_int(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw MathError(ErrorCode::kInvalidArgument,
                    "not a decimal integer: '" + std::string(text) + "'");
  }
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw MathError(ErrorCode::kInvalidArgument,
                      "not a decimal integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? Int(-value) : value;
}

std::string to_decimal(const Int& value) { return value.str(); }

Int floor_mod(const Int& a, const Int& n) {
  const Int m = n < 0 ? Int(-n) : n;
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

std::size_t bit_length(const Int& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(abs(x)) + 1;
}

Int mod_inv(const Int& a, const Int& n) {
  if (n <= 1) {
    throw MathError(ErrorCode::kInvalidArgument, "modulus must exceed 1");
  }
  Int old_r = floor_mod(a, n), r = n;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw MathError(ErrorCode::kNotInvertible,
                    to_decimal(a) + " mod " + to_decimal(n));
  }
  return floor_mod(old_s, n);
}

Int mod_pow(const Int& base, const Int& exponent, const Int& modulus) {
  if (exponent < 0) {
    return boost::multiprecision::powm(mod_inv(base, modulus), -exponent, modulus);
  }
  return boost::multiprecision::powm(floor_mod(base, modulus), exponent, modulus);
}

Int isqrt(const Int& n) {
  if (n < 0) throw MathError(ErrorCode::kNotASquare, "negative argument");
  return boost::multiprecision::sqrt(n);
}

Int exact_sqrt(const Int& n) {
  if (n < 0) {
    throw MathError(ErrorCode::kNotASquare, to_decimal(n) + " is negative");
  }
  Int s = isqrt(n);
  if (s * s != n) {
    throw MathError(ErrorCode::kNotASquare, to_decimal(n));
  }
  return s;
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  const Int s = isqrt(n);
  return s * s == n;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static constexpr unsigned kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Fixed seed keeps the answer reproducible; the first 12 prime bases make
  // the test deterministic below 3.3e24.
  static thread_local std::mt19937_64 rng(0x5eed);
  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto witness = [&](const Int& a) {
    Int x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) return false;
    }
    return true;
  };
  for (unsigned p : kSmall) {
    if (witness(Int(p))) return false;
  }
  if (bit_length(n) <= 80) return true;
  return boost::multiprecision::miller_rabin_test(n, 16, rng);
}

namespace {

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(x - y, n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor(const Int& n) {
  Int m = abs(n);
  if (m == 0) {
    throw MathError(ErrorCode::kInvalidArgument, "cannot factor 0");
  }
  std::vector<Int> primes;
  for (unsigned p = 2; p < 1000 && Int(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, unsigned>> result;
  for (const Int& p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1);
    }
  }
  return result;
}

Int largest_prime_factor(const Int& n) {
  const auto f = factor(n);
  if (f.empty()) {
    throw MathError(ErrorCode::kInvalidArgument, "no prime factor of 1");
  }
  return f.back().first;
}

int legendre(const Int& a, const Int& p) {
  const Int r = floor_mod(a, p);
  if (r == 0) return 0;
  const Int e = boost::multiprecision::powm(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p) {
  const Int n = floor_mod(a, p);
  if (n == 0) return Int(0);
  if (p == 2) return n;
  if (legendre(n, p) != 1) return std::nullopt;
  if (p % 4 == 3) return boost::multiprecision::powm(n, (p + 1) / 4, p);
  // Tonelli-Shanks.
  Int q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Int z = 2;
  while (legendre(z, p) != -1) ++z;
  Int m = s;
  Int c = boost::multiprecision::powm(z, q, p);
  Int t = boost::multiprecision::powm(n, q, p);
  Int r = boost::multiprecision::powm(n, (q + 1) / 2, p);
  while (t != 1) {
    Int i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Int b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

Int random_below(std::mt19937_64& rng, const Int& bound) {
  if (bound <= 0) {
    throw MathError(ErrorCode::kInvalidArgument, "random bound must be positive");
  }
  const std::size_t bits = bit_length(bound);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t excess = words * 64 - bits;
  for (;;) {
    Int candidate = 0;
    for (std::size_t i = 0; i < words; ++i) {
      candidate <<= 64;
      candidate += rng();
    }
    candidate >>= excess;
    if (candidate < bound) return candidate;
  }
}

Int random_between(std::mt19937_64& rng, const Int& lo, const Int& hi) {
  return lo + random_below(rng, hi - lo + 1);
}

Int random_prime(std::mt19937_64& rng, const Int& lo, const Int& hi) {
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    Int candidate = random_between(rng, lo, hi);
    if (is_prime(candidate)) return candidate;
  }
  throw MathError(ErrorCode::kInvalidArgument,
                  "no prime found in [" + to_decimal(lo) + ", " + to_decimal(hi) + "]");
}

// --- Rat ---------------------------------------------------------------

Rat::Rat(const Int& num, const Int& den) : num_(num), den_(den) {
  if (den_ == 0) {
    throw MathError(ErrorCode::kInvalidArgument, "zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const Int g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) throw MathError(ErrorCode::kInvalidArgument, "division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const Int lhs = a.num_ * b.den_;
  const Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::to_string() const {
  if (den_ == 1) return to_decimal(num_);
  return to_decimal(num_) + "/" + to_decimal(den_);
}

Rat abs(const Rat& x) { return x.num() < 0 ? -x : x; }

Int floor(const Rat& x) { return floor_div(x.num(), x.den()); }

Int round_nearest(const Rat& x) {
  // floor(x + 1/2) sends exact halves upward.
  return floor_div(2 * x.num() + x.den(), 2 * x.den());
}

// --- IntMatrix ---------------------------------------------------------

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw MathError(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw MathError(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    m.set_row(i, rows[i]);
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::set_row(std::size_t i, std::span<const Int> values) {
  if (values.size() != cols_) {
    throw MathError(ErrorCode::kDimensionMismatch, "row length");
  }
  std::copy(values.begin(), values.end(), data_.begin() + i * cols_);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap_ranges(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_,
                   data_.begin() + j * cols_);
}

Int IntMatrix::determinant() const {
  if (!is_square()) {
    throw MathError(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  }
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Int IntMatrix::max_abs_entry() const {
  Int best = 0;
  for (const Int& v : data_) best = std::max(best, abs(v));
  return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw MathError(ErrorCode::kDimensionMismatch, "matrix product shapes");
  }
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) {
    throw MathError(ErrorCode::kDimensionMismatch, "dot product lengths");
  }
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace shortbasis
