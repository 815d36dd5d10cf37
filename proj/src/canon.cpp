#include "fiqs/canon.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fiqs {

namespace {

using I64 = std::int64_t;

I64 add(I64 x, I64 y) { return to_int64(checked_add(x, y)); }
I64 sub(I64 x, I64 y) { return to_int64(checked_sub(x, y)); }
I64 mul(I64 x, I64 y) { return to_int64(checked_mul(x, y)); }
I64 neg(I64 x) { return to_int64(checked_neg(x)); }

std::size_t columns(int rho) { return static_cast<std::size_t>(rho) + 3; }

// Column indices of each arm.
std::vector<std::vector<std::size_t>> arms(int rho) {
  switch (rho) {
    case 1: return {{0, 1}, {2}, {3}};
    case 2: return {{0, 1}, {2, 3}, {4}};
    case 3: return {{0, 1}, {2, 3}, {4, 5}};
  }
  check_rho(rho);
  return {};
}

bool swappable(int rho, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) return false;
  if (i > j) std::swap(i, j);
  switch (rho) {
    case 1: return i == 1 && j == 2;
    case 2: return i == 0 && j == 1;
    default: return true;
  }
}

std::vector<I64> swap_blocks(int rho, std::vector<I64> row, int i, int j) {
  auto a = arms(rho);
  for (std::size_t k = 0; k < a[i].size(); ++k) std::swap(row[a[i][k]], row[a[j][k]]);
  return row;
}

void require(bool cond, std::vector<std::string>& out, const char* what) {
  if (!cond) out.emplace_back(what);
}

}  // namespace

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::string s;
  for (const auto& v : violations) s += (s.empty() ? "" : "; ") + v;
  return s;
}

ValidationReport validate(const DefiningMatrix& m) {
  ValidationReport r;
  auto& v = r.violations;
  const Int a = m.a, b = m.b, c = m.c, d = m.d;
  switch (m.rho) {
    case 1:
      require(b <= -2, v, "b <= -2");
      require(0 <= a, v, "0 <= a");
      require(a <= -b - 2, v, "a <= -b-2");
      require(c == 0 && d == 0, v, "c = d = 0 (unused for rho 1)");
      break;
    case 2:
      require(b < a, v, "b < a");
      require(c < 0, v, "c < 0");
      require(a >= 0, v, "a >= 0");
      require(b + c <= -1, v, "b+c <= -1");
      require(a - b <= -c, v, "a-b <= -c");
      require(a <= -b - c - 1, v, "a <= -b-c-1");
      require(d == 0, v, "d = 0 (unused for rho 2)");
      break;
    case 3:
      require(a > b, v, "a > b");
      require(0 > c, v, "0 > c");
      require(0 > d, v, "0 > d");
      require(a - b >= -c, v, "a-b >= -c");
      require(-c >= -d, v, "-c >= -d");
      require(b + c + d < 0, v, "b+c+d < 0");
      require(0 < a, v, "0 < a");
      require(a <= -b - c - d, v, "a <= -b-c-d");
      break;
    default:
      v.emplace_back("rho in {1,2,3}");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Operations

AdmissibleOp AdmissibleOp::add_row(int row, std::int64_t multiplier) {
  AdmissibleOp op;
  op.kind = OpKind::add_row;
  op.row = row;
  op.multiplier = multiplier;
  return op;
}

AdmissibleOp AdmissibleOp::swap_within_arm(int arm) {
  AdmissibleOp op;
  op.kind = OpKind::swap_within_arm;
  op.arm = arm;
  return op;
}

AdmissibleOp AdmissibleOp::swap_arms(int arm, int other_arm) {
  AdmissibleOp op;
  op.kind = OpKind::swap_arms;
  op.arm = arm;
  op.other_arm = other_arm;
  return op;
}

AdmissibleOp AdmissibleOp::negate_last_row() { return AdmissibleOp{}; }

std::string AdmissibleOp::str() const {
  std::ostringstream os;
  switch (kind) {
    case OpKind::add_row: os << "add_row(" << row << ',' << multiplier << ')'; break;
    case OpKind::swap_within_arm: os << "swap_within_arm(" << arm << ')'; break;
    case OpKind::swap_arms: os << "swap_arms(" << arm << ',' << other_arm << ')'; break;
    case OpKind::negate_last_row: os << "negate_last_row"; break;
  }
  return os.str();
}

void RawMatrix::check() const {
  check_rho(rho);
  if (third_row.size() != columns(rho))
    throw std::invalid_argument("third row must have " + std::to_string(columns(rho)) + " entries");
  auto odd = [](I64 x) { return x % 2 != 0; };
  if (rho == 1 && (!odd(third_row[2]) || !odd(third_row[3])))
    throw std::invalid_argument("entries 3 and 4 of the third row must be odd for rho 1");
  if (rho == 2 && !odd(third_row[4]))
    throw std::invalid_argument("entry 5 of the third row must be odd for rho 2");
}

RawMatrix to_raw(const DefiningMatrix& m) { return RawMatrix{m.rho, m.third_row()}; }

RawMatrix apply_op(const RawMatrix& m, const AdmissibleOp& op) {
  m.check();
  RawMatrix out = m;
  auto& row = out.third_row;
  switch (op.kind) {
    case OpKind::add_row: {
      if (op.row != 1 && op.row != 2) throw std::invalid_argument("add_row: row must be 1 or 2");
      const auto src = leading_rows(m.rho)[op.row - 1];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = add(row[j], mul(op.multiplier, src[j]));
      break;
    }
    case OpKind::swap_within_arm: {
      if (op.arm < 0 || op.arm > 2) throw std::invalid_argument("swap_within_arm: arm out of range");
      const auto arm = arms(m.rho)[op.arm];
      if (arm.size() != 2) throw std::invalid_argument("swap_within_arm: arm has a single column");
      std::swap(row[arm[0]], row[arm[1]]);
      break;
    }
    case OpKind::swap_arms:
      if (!swappable(m.rho, op.arm, op.other_arm))
        throw std::invalid_argument("swap_arms: arms " + std::to_string(op.arm) + " and " +
                                    std::to_string(op.other_arm) + " cannot be exchanged for rho " +
                                    std::to_string(m.rho));
      row = swap_blocks(m.rho, row, op.arm, op.other_arm);
      break;
    case OpKind::negate_last_row:
      for (auto& x : row) x = neg(x);
      break;
  }
  return out;
}

DefiningMatrix reduce_raw(const RawMatrix& raw) {
  raw.check();
  auto r = raw.third_row;
  for (const auto& arm : arms(raw.rho)) {
    if (arm.size() != 2) continue;
    if (r[arm[0]] == r[arm[1]]) throw std::invalid_argument("duplicate columns in defining matrix");
    if (r[arm[0]] < r[arm[1]]) std::swap(r[arm[0]], r[arm[1]]);
  }
  DefiningMatrix m;
  m.rho = raw.rho;
  I64 x = 0, y = 0;
  switch (raw.rho) {
    case 1:
      x = sub(1, r[2]) / 2;
      y = sub(1, r[3]) / 2;
      break;
    case 2:
      x = neg(r[2]);
      y = sub(1, r[4]) / 2;
      m.c = add(r[3], x);
      break;
    case 3:
      x = neg(r[2]);
      y = neg(r[4]);
      m.c = add(r[3], x);
      m.d = add(r[5], y);
      break;
  }
  m.a = sub(sub(r[0], x), y);
  m.b = sub(sub(r[1], x), y);
  return m;
}

DefiningMatrix slope_order(const DefiningMatrix& m) {
  DefiningMatrix out = m;
  if (m.rho >= 2) {
    if (out.c == 0) throw std::invalid_argument("duplicate columns in defining matrix");
    if (out.c > 0) {
      out.a = add(out.a, out.c);
      out.b = add(out.b, out.c);
      out.c = neg(out.c);
    }
  }
  if (m.rho == 3) {
    if (out.d == 0) throw std::invalid_argument("duplicate columns in defining matrix");
    if (out.d > 0) {
      out.a = add(out.a, out.d);
      out.b = add(out.b, out.d);
      out.d = neg(out.d);
    }
  }
  if (out.a == out.b) throw std::invalid_argument("duplicate columns in defining matrix");
  if (out.a < out.b) std::swap(out.a, out.b);
  return out;
}

std::vector<DefiningMatrix> orbit_generators(const DefiningMatrix& m) {
  const I64 a = m.a, b = m.b, c = m.c, d = m.d;
  std::vector<DefiningMatrix> g;
  switch (m.rho) {
    case 1:
      g.push_back({1, sub(neg(b), 2), sub(neg(a), 2), 0, 0});
      break;
    case 2:
      g.push_back({2, a, add(a, c), sub(b, a), 0});
      g.push_back({2, sub(sub(neg(b), c), 1), sub(sub(neg(a), c), 1), c, 0});
      break;
    case 3:
      g.push_back({3, a, b, d, c});
      g.push_back({3, a, add(a, c), sub(b, a), d});
      g.push_back({3, sub(sub(neg(b), c), d), sub(sub(neg(a), c), d), c, d});
      break;
    default:
      check_rho(m.rho);
  }
  for (auto& x : g) x = slope_order(x);
  return g;
}

std::vector<DefiningMatrix> orbit(const DefiningMatrix& m) {
  const DefiningMatrix start = slope_order(m);
  std::set<DefiningMatrix> seen{start};
  std::deque<DefiningMatrix> todo{start};
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.pop_front();
    for (const auto& nxt : orbit_generators(cur))
      if (seen.insert(nxt).second) todo.push_back(nxt);
  }
  return {seen.begin(), seen.end()};
}

DefiningMatrix canonicalize(const RawMatrix& m) {
  std::vector<DefiningMatrix> hits;
  for (const auto& x : orbit(reduce_raw(m)))
    if (validate(x).ok()) hits.push_back(x);
  if (hits.size() != 1) {
    std::ostringstream os;
    os << "canonicalize: " << hits.size() << " normal forms in the orbit of third row";
    for (auto v : m.third_row) os << ' ' << v;
    throw std::runtime_error(os.str());
  }
  return hits.front();
}

SeriesKey classify(const DefiningMatrix& m) {
  auto report = validate(m);
  if (!report.ok()) throw std::invalid_argument("classify: not in normal form: " + report.str());
  SeriesKey key;
  key.series.rho = m.rho;
  int kp = 1, km = 1;
  switch (m.rho) {
    case 1:
      if (m.a % 2 == 0) {
        key.iota_plus = m.a + 1;
      } else {
        kp = 2;
        key.iota_plus = 2 * m.a + 2;
      }
      if (m.b % 2 == 0) {
        key.iota_minus = -m.b - 1;
      } else {
        km = 2;
        key.iota_minus = -2 * m.b - 2;
      }
      break;
    case 2: {
      const I64 p = add(mul(2, m.a), 1);
      const I64 s = neg(add(mul(2, add(m.b, m.c)), 1));
      if (p % 3 == 0) kp = 2;
      if (s % 3 == 0) km = 2;
      key.iota_plus = kp == 1 ? p : p / 3;
      key.iota_minus = km == 1 ? s : s / 3;
      key.c = m.c;
      break;
    }
    case 3: {
      const I64 s = neg(add(add(m.b, m.c), m.d));
      if (m.a % 2 == 0) kp = 2;
      if (s % 2 == 0) km = 2;
      key.iota_plus = kp == 1 ? m.a : m.a / 2;
      key.iota_minus = km == 1 ? s : s / 2;
      key.c = m.c;
      key.d = m.d;
      break;
    }
  }
  key.series.tag = make_tag(kp, km);
  if (!in_series(key) || !(matrix_from_eta_unchecked(key) == m))
    throw std::logic_error("classify: no series matches " + m.str());
  return key;
}

DefiningMatrix arm_swap_via_matrix(const DefiningMatrix& m, int arm, int other_arm) {
  if (!swappable(m.rho, arm, other_arm)) throw std::invalid_argument("arm_swap_via_matrix: arms not exchangeable");
  const IntMatrix p = m.expand();
  const std::size_t n = p.cols();
  const auto blocks = arms(m.rho);

  // Column permutation exchanging the two blocks.
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;
  for (std::size_t k = 0; k < blocks[arm].size(); ++k) std::swap(perm[blocks[arm][k]], perm[blocks[other_arm][k]]);
  IntMatrix q(3, n);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t j = 0; j < n; ++j) q(r, j) = p(r, perm[j]);

  // T with T * (rows 1-2 of q) = standard rows, from two independent columns.
  const auto std_rows = leading_rows(m.rho);
  bool found = false;
  Int t[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t j = 0; j < n && !found; ++j)
    for (std::size_t k = j + 1; k < n && !found; ++k) {
      const Int det = q(0, j) * q(1, k) - q(0, k) * q(1, j);
      if (det == 0) continue;
      // inverse of [[q0j, q0k], [q1j, q1k]] is adj / det
      const Int adj[2][2] = {{q(1, k), -q(0, k)}, {-q(1, j), q(0, j)}};
      bool integral = true;
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          const Int num = std_rows[r][j] * adj[0][s] + std_rows[r][k] * adj[1][s];
          if (num % det != 0) integral = false;
          t[r][s] = num / det;
        }
      if (!integral) throw std::logic_error("arm_swap_via_matrix: no integral row transformation");
      found = true;
    }
  if (!found) throw std::logic_error("arm_swap_via_matrix: first two rows have rank < 2");
  const Int det_t = t[0][0] * t[1][1] - t[0][1] * t[1][0];
  if (det_t != 1 && det_t != -1) throw std::logic_error("arm_swap_via_matrix: row transformation not unimodular");
  for (int r = 0; r < 2; ++r)
    for (std::size_t j = 0; j < n; ++j)
      if (t[r][0] * q(0, j) + t[r][1] * q(1, j) != std_rows[r][j])
        throw std::logic_error("arm_swap_via_matrix: row transformation does not restore the first rows");

  RawMatrix raw{m.rho, std::vector<I64>(n)};
  for (std::size_t j = 0; j < n; ++j) raw.third_row[j] = to_int64(q(2, j));
  return slope_order(reduce_raw(raw));
}

AdmissibleOp random_op(int rho, std::mt19937_64& rng) {
  check_rho(rho);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> mult(-3, 3);
  std::uniform_int_distribution<int> pick2(0, 1);
  std::uniform_int_distribution<int> pick3(0, 2);
  switch (kind(rng)) {
    case 0: return AdmissibleOp::add_row(1 + pick2(rng), mult(rng));
    case 1:
      if (rho == 1) return AdmissibleOp::swap_within_arm(0);
      if (rho == 2) return AdmissibleOp::swap_within_arm(pick2(rng));
      return AdmissibleOp::swap_within_arm(pick3(rng));
    case 2:
      if (rho == 1) return AdmissibleOp::swap_arms(1, 2);
      if (rho == 2) return AdmissibleOp::swap_arms(0, 1);
      {
        const int i = pick3(rng);
        return AdmissibleOp::swap_arms(i, (i + 1 + pick2(rng)) % 3);
      }
    default: return AdmissibleOp::negate_last_row();
  }
}

}  // namespace fiqs
