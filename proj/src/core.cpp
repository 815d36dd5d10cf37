#include "fiqs/core.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace fiqs {

namespace {

constexpr Int kIntMax = static_cast<Int>((static_cast<unsigned __int128>(1) << 127) - 1);
constexpr Int kIntMin = -kIntMax - 1;

[[noreturn]] void overflow(const char* what) {
  throw OverflowError(std::string("integer overflow in ") + what);
}

}  // namespace

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) overflow("add");
  return r;
}

Int checked_sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) overflow("sub");
  return r;
}

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) overflow("mul");
  return r;
}

Int checked_neg(Int x) {
  if (x == kIntMin) overflow("neg");
  return -x;
}

std::int64_t to_int64(Int x) {
  if (x > INT64_MAX || x < INT64_MIN) overflow("narrowing to int64");
  return static_cast<std::int64_t>(x);
}

std::string to_string(Int x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  // Work in the negative range so that kIntMin is representable.
  Int v = neg ? x : -x;
  std::string out;
  while (v != 0) {
    int digit = static_cast<int>(-(v % 10));
    out.push_back(static_cast<char>('0' + digit));
    v /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int parse_int(std::string_view text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  Int v = 0;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch < '0' || ch > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    v = checked_sub(checked_mul(v, 10), ch - '0');
  }
  return neg ? v : checked_neg(v);
}

Int abs_value(Int x) { return x < 0 ? checked_neg(x) : x; }

Int gcd2(Int x, Int y) {
  x = abs_value(x);
  y = abs_value(y);
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

Int gcd_list(std::span<const Int> values) {
  if (values.empty()) throw std::invalid_argument("gcd_list: empty list");
  Int g = 0;
  for (Int v : values) g = gcd2(g, v);
  return g;
}

Int lcm2(Int x, Int y) {
  if (x <= 0 || y <= 0) throw std::invalid_argument("lcm2: arguments must be positive");
  return checked_mul(x / gcd2(x, y), y);
}

Int floor_div(Int num, Int den) {
  if (den == 0) throw std::domain_error("division by zero");
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Int ceil_div(Int num, Int den) {
  if (den == 0) throw std::domain_error("division by zero");
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  Int g = gcd2(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  Int g = gcd2(den_, o.den_);
  Int l = den_ / g;
  Int n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, l));
  *this = Rational(n, checked_mul(l, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-cancel first to keep intermediates small.
  Int g1 = gcd2(num_, o.den_);
  Int g2 = gcd2(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  Int n = checked_mul(num_ / g1, o.num_ / g2);
  Int d = checked_mul(den_ / g2, o.den_ / g1);
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  Int lhs = checked_mul(x.num_, y.den_);
  Int rhs = checked_mul(y.num_, x.den_);
  return lhs <=> rhs;
}

std::string Rational::str() const { return to_string(num_) + "/" + to_string(den_); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::initializer_list<std::initializer_list<Int>> cols) {
  IntMatrix t(cols);
  return t.transpose();
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

// ---------------------------------------------------------------------------
// Linear algebra

Int det3(const IntMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("det3: matrix must be 3x3");
  auto minor = [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
    return checked_sub(checked_mul(m(r1, c1), m(r2, c2)), checked_mul(m(r1, c2), m(r2, c1)));
  };
  Int t0 = checked_mul(m(0, 0), minor(1, 2, 1, 2));
  Int t1 = checked_mul(m(0, 1), minor(1, 2, 0, 2));
  Int t2 = checked_mul(m(0, 2), minor(1, 2, 0, 1));
  return checked_add(checked_sub(t0, t1), t2);
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_dst -= q * row_src
void sub_row(IntMatrix& a, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) = checked_sub(a(dst, c), checked_mul(q, a(src, c)));
}

void sub_col(IntMatrix& a, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) = checked_sub(a(r, dst), checked_mul(q, a(r, src)));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t n = std::min(a.rows(), a.cols());
  SmithForm out;
  out.invariant_factors.assign(n, 0);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      bool found = false;
      std::size_t pr = t, pc = t;
      Int best = 0;
      for (std::size_t r = t; r < a.rows(); ++r)
        for (std::size_t c = t; c < a.cols(); ++c)
          if (a(r, c) != 0 && (!found || abs_value(a(r, c)) < best)) {
            found = true;
            best = abs_value(a(r, c));
            pr = r;
            pc = c;
          }
      if (!found) break;
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        sub_row(a, r, t, a(r, t) / a(t, t));
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        sub_col(a, c, t, a(t, c) / a(t, t));
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t r = t + 1; r < a.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < a.cols(); ++c)
          if (a(r, c) % a(t, t) != 0) {
            for (std::size_t k = 0; k < a.cols(); ++k) a(t, k) = checked_add(a(t, k), a(r, k));
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.invariant_factors[t] = abs_value(a(t, t));
    if (a(t, t) != 0) ++out.rank;
  }
  return out;
}

std::array<Rational, 3> solve3(const IntMatrix& m, const std::array<Int, 3>& rhs) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("solve3: matrix must be 3x3");
  const IntMatrix mt = m.transpose();
  const Int d = det3(mt);
  if (d == 0) throw std::domain_error("solve3: singular matrix");
  std::array<Rational, 3> u;
  for (std::size_t k = 0; k < 3; ++k) {
    IntMatrix mk = mt;
    for (std::size_t r = 0; r < 3; ++r) mk(r, k) = rhs[r];
    u[k] = Rational(det3(mk), d);
  }
  return u;
}

}  // namespace fiqs
