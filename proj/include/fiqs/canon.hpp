#pragma once

// Normal-form validation, admissible operations on raw defining matrices,
// canonicalization and classification back to (series, eta).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fiqs/series.hpp"

namespace fiqs {

struct ValidationReport {
  std::vector<std::string> violations;  // one entry per failed inequality

  bool ok() const { return violations.empty(); }
  std::string str() const;
};

ValidationReport validate(const DefiningMatrix& m);

enum class OpKind : std::uint8_t { add_row, swap_within_arm, swap_arms, negate_last_row };

/// Arms are numbered 0..2: rho=1 {v1,v2},{v3},{v4}; rho=2 {v1,v2},{v3,v4},{v5};
/// rho=3 {v1,v2},{v3,v4},{v5,v6}.
struct AdmissibleOp {
  OpKind kind = OpKind::negate_last_row;
  int row = 0;                  // add_row: 1 or 2
  std::int64_t multiplier = 0;  // add_row
  int arm = 0;                  // swap_within_arm, first arm of swap_arms
  int other_arm = 0;            // swap_arms

  static AdmissibleOp add_row(int row, std::int64_t multiplier);
  static AdmissibleOp swap_within_arm(int arm);
  static AdmissibleOp swap_arms(int arm, int other_arm);
  static AdmissibleOp negate_last_row();

  std::string str() const;
};

/// Defining matrix with fixed first two rows and an arbitrary third row.
struct RawMatrix {
  int rho = 1;
  std::vector<std::int64_t> third_row;

  /// Throws std::invalid_argument on wrong length or non-primitive columns.
  void check() const;
  friend bool operator==(const RawMatrix&, const RawMatrix&) = default;
};

RawMatrix to_raw(const DefiningMatrix& m);

/// Throws std::invalid_argument if the op does not fit the arm structure of rho.
/// Arm swaps permute the third row blockwise; the matching unimodular change of
/// the first two rows restores them to the standard pattern.
RawMatrix apply_op(const RawMatrix& m, const AdmissibleOp& op);

/// Slope-orders each two-column arm and row-reduces so that the designated
/// third-row entries are canonical. The result need not pass validate.
DefiningMatrix reduce_raw(const RawMatrix& m);

/// Puts 0 > c (> d) and a > b by within-arm swaps followed by re-reduction.
/// Throws std::invalid_argument when two columns coincide.
DefiningMatrix slope_order(const DefiningMatrix& m);

/// Closed-form arm swaps and negation on the parameters, each slope ordered.
std::vector<DefiningMatrix> orbit_generators(const DefiningMatrix& m);
std::vector<DefiningMatrix> orbit(const DefiningMatrix& m);

/// Throws std::runtime_error unless exactly one orbit element passes validate.
DefiningMatrix canonicalize(const RawMatrix& m);

/// Throws std::invalid_argument if m fails validate.
SeriesKey classify(const DefiningMatrix& m);

/// Matrix-level arm swap: permutes the column blocks of the expanded matrix,
/// solves for T in GL2(Z) restoring the first two rows and re-reduces.
DefiningMatrix arm_swap_via_matrix(const DefiningMatrix& m, int arm, int other_arm);

/// Uniform random admissible op for rho; multipliers in [-3, 3].
AdmissibleOp random_op(int rho, std::mt19937_64& rng);

}  // namespace fiqs
