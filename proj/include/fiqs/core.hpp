#pragma once

// Exact integer / rational arithmetic and the small integer linear algebra
// kernel shared by every other module.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fiqs {

__extension__ typedef __int128 Int;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_mul(Int x, Int y);
Int checked_neg(Int x);

// Narrowing that throws instead of truncating.
std::int64_t to_int64(Int x);

std::string to_string(Int x);

/// Parses an optionally signed decimal integer; throws std::invalid_argument
/// on malformed input and OverflowError when out of 128-bit range.
Int parse_int(std::string_view text);

Int abs_value(Int x);
Int gcd2(Int x, Int y);

/// Nonnegative gcd of all values. The gcd of an all-zero list is 0.
Int gcd_list(std::span<const Int> values);
inline Int gcd_list(std::initializer_list<Int> values) {
  return gcd_list(std::span<const Int>(values.begin(), values.size()));
}

/// Least common multiple of two positive integers.
Int lcm2(Int x, Int y);

/// Floor / ceiling division with a positive or negative divisor.
Int floor_div(Int num, Int den);
Int ceil_div(Int num, Int den);

/// Reduced fraction with positive denominator. Equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Int floor() const { return floor_div(num_, den_); }
  Int ceil() const { return ceil_div(num_, den_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  /// "num/den"; integers are still written with "/1".
  std::string str() const;
  /// Accepts "n" or "n/d".
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors.
  static IntMatrix from_columns(std::initializer_list<std::initializer_list<Int>> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Diagonal of the Smith normal form, d1 | d2 | ..., min(rows, cols) entries.
/// The cokernel of the column span is Z^rows / im = (+) Z/d_i (+) Z^(rows - rank).
struct SmithForm {
  std::vector<Int> invariant_factors;
  std::size_t rank = 0;

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

Int det3(const IntMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

/// Solves u . col_j(m) = rhs_j, i.e. m^T u = rhs, exactly.
std::array<Rational, 3> solve3(const IntMatrix& m, const std::array<Int, 3>& rhs);

}  // namespace fiqs
