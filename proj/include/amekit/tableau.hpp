#pragma once

#include <complex>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "amekit/pauli.hpp"

namespace amekit {

enum class RowRole { Stabilizer, LogicalX, LogicalZ, EncodedInput };

struct TableRow {
  PauliOperator op;
  RowRole role = RowRole::Stabilizer;
  int logical_index = 0;  // meaningful for LogicalX / LogicalZ rows
};

/// An ordered list of tagged Pauli generators over a shared qudit register.
/// Stabilizer and encoded-input rows must pairwise commute; logical rows
/// commute with everything except their own partner, with which they satisfy
/// Z_L X_L = omega X_L Z_L. All rows are linearly independent over Z_d, which
/// rules out any nontrivial phase times identity in the generated group.
class StabilizerTable {
 public:
  StabilizerTable(int dim, int n_qudits, std::vector<TableRow> rows);

  static StabilizerTable from_ops(int dim, int n_qudits,
                                  std::vector<PauliOperator> ops);

  int dim() const { return dim_; }
  int n_qudits() const { return n_qudits_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const TableRow& row(int i) const { return rows_[i]; }
  const std::vector<TableRow>& rows() const { return rows_; }
  std::vector<PauliOperator> row_ops() const;

  /// Rows acting as state stabilizers (Stabilizer or EncodedInput role).
  int state_row_count() const;
  bool is_pure_state() const { return state_row_count() == n_qudits_ && state_row_count() == row_count(); }

  void validate() const;

 private:
  int dim_;
  int n_qudits_;
  std::vector<TableRow> rows_;
};

/// Rank of the symplectic exponent matrix over Z_d; phases are ignored.
int rank(std::span<const PauliOperator> rows);
bool is_independent(std::span<const PauliOperator> rows);

/// Reduced row echelon form of the exponent matrix, the column scan following
/// `column_order` (each id in [0, 2N): even ids are X columns, odd Z). Row
/// operations are group multiplications, so phases stay consistent and the
/// generated group is unchanged. pivot_cols[i] is the pivot column of row i;
/// rows past the pivots reduced to identity exponents are dropped only if
/// `drop_trivial`.
struct RrefResult {
  std::vector<PauliOperator> rows;
  std::vector<int> pivot_cols;
};
RrefResult rref(std::vector<PauliOperator> rows,
                std::span<const int> column_order, bool drop_trivial = false);

/// Column order helpers.
std::vector<int> canonical_column_order(int n_qudits);  // X block then Z block
std::vector<int> qudit_block_column_order(std::span<const int> qudit_order);

/// Row-equivalent table in reduced echelon form under the given qudit order
/// (X and Z columns interleaved per qudit).
StabilizerTable gauss_jordan(const StabilizerTable& table,
                             std::span<const int> qudit_order);

/// Deterministic canonical form: reduced echelon form with X columns before Z
/// columns, pivots scaled to one. Two tables generate the same exponent group
/// iff their canonical forms have identical exponent matrices; the phases of
/// the canonical rows are fixed by the group, so they match iff the groups
/// coincide as subgroups of the Pauli group.
StabilizerTable canonical_form(const StabilizerTable& table);

struct GroupEquality {
  bool same_group = false;    // canonical exponent matrices identical
  bool phases_match = false;  // canonical phases identical as well
};
GroupEquality group_equal(const StabilizerTable& a, const StabilizerTable& b);

struct Membership {
  bool in_group_mod_phase = false;
  int phase_residue = 0;  // unit exponent g differs from the group element by
  bool in_group() const { return in_group_mod_phase && phase_residue == 0; }
};
Membership membership(const StabilizerTable& table, const PauliOperator& g);

struct MeasureOptions {
  bool sample = false;
  int outcome = 0;                   // postselected outcome exponent
  std::mt19937_64* rng = nullptr;    // required when sample is true
};

struct MeasureResult {
  StabilizerTable table;
  bool deterministic = false;
  int outcome = 0;
};

/// Projective measurement of a Pauli observable with the three-case generator
/// update: (a) observable already generated, table unchanged and the outcome
/// forced; (b) commuting but independent, appended with the outcome phase;
/// (c) anticommuting with some rows, the first such row is replaced by the
/// phased observable and every other anticommuting row is multiplied by the
/// power of the removed row that restores commutation.
MeasureResult measure(const StabilizerTable& table,
                      const PauliOperator& observable,
                      const MeasureOptions& options = {});

/// Removes the given qudits. Requires a generating set in which every row is
/// either trivial on the set or supported entirely inside it; rows inside are
/// deleted, the rest keep their support with the columns erased.
StabilizerTable trace_out(const StabilizerTable& table,
                          const std::vector<int>& qudits);

/// Row-equivalent generating set in which register qudit k[j] carries exactly
/// one X^1-acting row and one Z^1-acting row (trivial on the other register
/// qudits) while every remaining row is trivial on the whole register. Exists
/// iff the state is maximally mixed on the register.
struct LocalizedRegister {
  std::vector<PauliOperator> x_rows;  // x_rows[j] acts as X on k[j]
  std::vector<PauliOperator> z_rows;  // z_rows[j] acts as Z on k[j]
  std::vector<PauliOperator> rest;    // trivial on the register
};
LocalizedRegister localize_register(const StabilizerTable& table,
                                    const std::vector<int>& k);

/// The unit vector stabilised by every row (d^N <= 2^20), as amplitudes over
/// the computational basis with qudit 0 the most significant digit. Test
/// oracle; not a simulation path.
std::vector<std::complex<double>> dense_state_vector(const StabilizerTable& table);

}  // namespace amekit
