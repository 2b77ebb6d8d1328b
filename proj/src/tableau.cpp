#include "amekit/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace amekit {

namespace {

int col_entry(const PauliOperator& p, int col) {
  return col % 2 == 0 ? p.x_exp(col / 2) : p.z_exp(col / 2);
}

}  // namespace

StabilizerTable::StabilizerTable(int dim, int n_qudits,
                                 std::vector<TableRow> rows)
    : dim_(dim), n_qudits_(n_qudits), rows_(std::move(rows)) {
  validate();
}

StabilizerTable StabilizerTable::from_ops(int dim, int n_qudits,
                                          std::vector<PauliOperator> ops) {
  std::vector<TableRow> rows;
  rows.reserve(ops.size());
  for (auto& op : ops) rows.push_back({std::move(op), RowRole::Stabilizer, 0});
  return StabilizerTable(dim, n_qudits, std::move(rows));
}

std::vector<PauliOperator> StabilizerTable::row_ops() const {
  std::vector<PauliOperator> ops;
  ops.reserve(rows_.size());
  for (const auto& r : rows_) ops.push_back(r.op);
  return ops;
}

int StabilizerTable::state_row_count() const {
  int c = 0;
  for (const auto& r : rows_) {
    if (r.role == RowRole::Stabilizer || r.role == RowRole::EncodedInput) ++c;
  }
  return c;
}

void StabilizerTable::validate() const {
  if (!is_prime(dim_)) {
    fail(ErrorKind::InvalidArgument, "table dimension must be prime");
  }
  if (n_qudits_ <= 0) {
    fail(ErrorKind::InvalidArgument, "table needs at least one qudit");
  }
  std::set<std::pair<bool, int>> logical_seen;
  for (const auto& r : rows_) {
    if (r.op.dim() != dim_ || r.op.n_qudits() != n_qudits_) {
      fail(ErrorKind::Shape, "row shape does not match the table");
    }
    if (r.role == RowRole::LogicalX || r.role == RowRole::LogicalZ) {
      auto key = std::make_pair(r.role == RowRole::LogicalX, r.logical_index);
      if (!logical_seen.insert(key).second) {
        fail(ErrorKind::InvalidArgument, "duplicate logical row tag");
      }
    }
  }
  const int n_rows = row_count();
  for (int i = 0; i < n_rows; ++i) {
    for (int j = i + 1; j < n_rows; ++j) {
      const auto& a = rows_[i];
      const auto& b = rows_[j];
      int s = symplectic_product(a.op, b.op);
      bool a_logical = a.role == RowRole::LogicalX || a.role == RowRole::LogicalZ;
      bool b_logical = b.role == RowRole::LogicalX || b.role == RowRole::LogicalZ;
      if (a_logical && b_logical && a.logical_index == b.logical_index &&
          a.role != b.role) {
        int expect = a.role == RowRole::LogicalZ ? 1 : dim_ - 1;
        if (s != expect) {
          fail(ErrorKind::InvalidArgument,
               "logical pair does not satisfy the omega commutation relation");
        }
      } else if (s != 0) {
        fail(ErrorKind::InvalidArgument, "rows do not commute");
      }
    }
  }
  auto ops = row_ops();
  if (!is_independent(ops)) {
    fail(ErrorKind::InvalidArgument, "rows are not linearly independent");
  }
  if (state_row_count() > n_qudits_) {
    fail(ErrorKind::InvalidArgument, "more stabilizer rows than qudits");
  }
}

RrefResult rref(std::vector<PauliOperator> rows,
                std::span<const int> column_order, bool drop_trivial) {
  RrefResult out;
  if (rows.empty()) return out;
  const int d = rows.front().dim();
  size_t next = 0;
  std::vector<int> pivot_of_row(rows.size(), -1);
  for (int col : column_order) {
    if (next == rows.size()) break;
    size_t src = next;
    while (src < rows.size() && col_entry(rows[src], col) == 0) ++src;
    if (src == rows.size()) continue;
    std::swap(rows[next], rows[src]);
    int pivot = col_entry(rows[next], col);
    if (pivot != 1) rows[next] = power(rows[next], mod_inverse(pivot, d));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == next) continue;
      int c = col_entry(rows[i], col);
      if (c != 0) rows[i] = multiply(rows[i], power(rows[next], d - c));
    }
    pivot_of_row[next] = col;
    ++next;
  }
  if (drop_trivial) {
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end());
  }
  out.rows = std::move(rows);
  out.pivot_cols.assign(pivot_of_row.begin(), pivot_of_row.begin() + next);
  return out;
}

std::vector<int> canonical_column_order(int n_qudits) {
  std::vector<int> order;
  order.reserve(2 * n_qudits);
  for (int q = 0; q < n_qudits; ++q) order.push_back(2 * q);
  for (int q = 0; q < n_qudits; ++q) order.push_back(2 * q + 1);
  return order;
}

std::vector<int> qudit_block_column_order(std::span<const int> qudit_order) {
  std::vector<int> order;
  order.reserve(2 * qudit_order.size());
  for (int q : qudit_order) {
    order.push_back(2 * q);
    order.push_back(2 * q + 1);
  }
  return order;
}

int rank(std::span<const PauliOperator> rows) {
  if (rows.empty()) return 0;
  std::vector<PauliOperator> copy(rows.begin(), rows.end());
  auto res = rref(std::move(copy), canonical_column_order(rows.front().n_qudits()));
  return static_cast<int>(res.pivot_cols.size());
}

bool is_independent(std::span<const PauliOperator> rows) {
  return rank(rows) == static_cast<int>(rows.size());
}

StabilizerTable gauss_jordan(const StabilizerTable& table,
                             std::span<const int> qudit_order) {
  if (static_cast<int>(qudit_order.size()) != table.n_qudits()) {
    fail(ErrorKind::InvalidArgument, "qudit order must be a permutation");
  }
  std::vector<bool> seen(table.n_qudits(), false);
  for (int q : qudit_order) {
    if (q < 0 || q >= table.n_qudits() || seen[q]) {
      fail(ErrorKind::InvalidArgument, "qudit order must be a permutation");
    }
    seen[q] = true;
  }
  auto res = rref(table.row_ops(), qudit_block_column_order(qudit_order));
  return StabilizerTable::from_ops(table.dim(), table.n_qudits(),
                                   std::move(res.rows));
}

StabilizerTable canonical_form(const StabilizerTable& table) {
  auto res = rref(table.row_ops(), canonical_column_order(table.n_qudits()));
  return StabilizerTable::from_ops(table.dim(), table.n_qudits(),
                                   std::move(res.rows));
}

GroupEquality group_equal(const StabilizerTable& a, const StabilizerTable& b) {
  GroupEquality eq;
  if (a.dim() != b.dim() || a.n_qudits() != b.n_qudits() ||
      a.row_count() != b.row_count()) {
    return eq;
  }
  StabilizerTable ca = canonical_form(a);
  StabilizerTable cb = canonical_form(b);
  eq.same_group = true;
  eq.phases_match = true;
  for (int i = 0; i < ca.row_count(); ++i) {
    const auto& ra = ca.row(i).op;
    const auto& rb = cb.row(i).op;
    if (ra.x_exps() != rb.x_exps() || ra.z_exps() != rb.z_exps()) {
      eq.same_group = false;
      eq.phases_match = false;
      return eq;
    }
    if (ra.phase_exp() != rb.phase_exp()) eq.phases_match = false;
  }
  return eq;
}

Membership membership(const StabilizerTable& table, const PauliOperator& g) {
  if (g.dim() != table.dim() || g.n_qudits() != table.n_qudits()) {
    fail(ErrorKind::Shape, "operator shape does not match the table");
  }
  Membership m;
  auto res = rref(table.row_ops(), canonical_column_order(table.n_qudits()),
                  /*drop_trivial=*/true);
  PauliOperator r = g;
  const int d = table.dim();
  for (size_t i = 0; i < res.rows.size(); ++i) {
    int c = col_entry(r, res.pivot_cols[i]);
    if (c != 0) r = multiply(r, power(res.rows[i], d - c));
  }
  if (!r.exponents_trivial()) return m;
  m.in_group_mod_phase = true;
  // r = g * h^{-1} for the matching group element h, so the residue is r's phase.
  m.phase_residue = r.phase_exp();
  return m;
}

namespace {

void check_measurable_table(const StabilizerTable& table) {
  for (const auto& r : table.rows()) {
    if (r.role == RowRole::LogicalX || r.role == RowRole::LogicalZ) {
      fail(ErrorKind::InvalidArgument,
           "measurement needs a state table, not a code table");
    }
  }
}

}  // namespace

MeasureResult measure(const StabilizerTable& table,
                      const PauliOperator& observable,
                      const MeasureOptions& options) {
  check_measurable_table(table);
  if (observable.dim() != table.dim() ||
      observable.n_qudits() != table.n_qudits()) {
    fail(ErrorKind::Shape, "observable shape does not match the table");
  }
  const int d = table.dim();
  if (!power(observable, d).is_identity()) {
    fail(ErrorKind::InvalidArgument,
         "observable must have order d with unit eigenvalue phases");
  }
  if (options.sample && options.rng == nullptr) {
    fail(ErrorKind::InvalidArgument, "sampling measurement needs an RNG");
  }
  const int units = observable.omega_units();

  std::vector<TableRow> rows = table.rows();
  std::vector<int> syms(rows.size());
  int first_anti = -1;
  for (size_t i = 0; i < rows.size(); ++i) {
    syms[i] = symplectic_product(rows[i].op, observable);
    if (syms[i] != 0 && first_anti < 0) first_anti = static_cast<int>(i);
  }

  if (first_anti < 0) {
    Membership m = membership(table, observable);
    if (m.in_group_mod_phase) {
      // case (a): the outcome is fixed by the group
      int det = m.phase_residue / units % d;
      if (m.phase_residue % units != 0) {
        fail(ErrorKind::InvalidArgument,
             "observable phase is inconsistent with a projective outcome");
      }
      if (!options.sample && options.outcome != det) {
        fail(ErrorKind::Contradiction,
             "requested outcome contradicts a deterministic measurement");
      }
      return {table, true, det};
    }
    // case (b): independent and commuting
    int outcome = options.sample
                      ? static_cast<int>((*options.rng)() % d)
                      : options.outcome;
    rows.push_back({observable.with_phase(observable.phase_exp() - outcome * units),
                    RowRole::Stabilizer, 0});
    return {StabilizerTable(d, table.n_qudits(), std::move(rows)), false, outcome};
  }

  // case (c): replace the first anticommuting row, repair the others
  int outcome = options.sample ? static_cast<int>((*options.rng)() % d)
                               : options.outcome;
  PauliOperator removed = rows[first_anti].op;
  int s_star = syms[first_anti];
  int s_star_inv = mod_inverse(s_star, d);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(i) == first_anti || syms[i] == 0) continue;
    int e = (d - syms[i] * s_star_inv % d) % d;
    rows[i].op = multiply(rows[i].op, power(removed, e));
  }
  rows[first_anti] = {
      observable.with_phase(observable.phase_exp() - outcome * units),
      RowRole::Stabilizer, 0};
  return {StabilizerTable(d, table.n_qudits(), std::move(rows)), false, outcome};
}

LocalizedRegister localize_register(const StabilizerTable& table,
                                    const std::vector<int>& k) {
  const int n = table.n_qudits();
  const int m = static_cast<int>(k.size());
  std::vector<bool> in_k(n, false);
  for (int q : k) {
    if (q < 0 || q >= n || in_k[q]) {
      fail(ErrorKind::InvalidArgument, "register must be distinct valid qudits");
    }
    in_k[q] = true;
  }

  std::vector<int> order;  // register columns first so pivots land there
  for (int q : k) {
    order.push_back(2 * q);
    order.push_back(2 * q + 1);
  }
  for (int q = 0; q < n; ++q) {
    if (!in_k[q]) {
      order.push_back(2 * q);
      order.push_back(2 * q + 1);
    }
  }
  auto res = rref(table.row_ops(), order, /*drop_trivial=*/true);

  LocalizedRegister loc;
  loc.x_rows.assign(m, PauliOperator::identity(table.dim(), n));
  loc.z_rows.assign(m, PauliOperator::identity(table.dim(), n));
  std::vector<bool> have_x(m, false), have_z(m, false);
  for (size_t i = 0; i < res.rows.size(); ++i) {
    int col = res.pivot_cols[i];
    int q = col / 2;
    if (!in_k[q]) {
      loc.rest.push_back(res.rows[i]);
      continue;
    }
    int j = static_cast<int>(std::find(k.begin(), k.end(), q) - k.begin());
    if (col % 2 == 0) {
      loc.x_rows[j] = res.rows[i];
      have_x[j] = true;
    } else {
      loc.z_rows[j] = res.rows[i];
      have_z[j] = true;
    }
  }
  for (int j = 0; j < m; ++j) {
    if (!have_x[j] || !have_z[j]) {
      fail(ErrorKind::NotAme,
           "state is not maximally mixed on the requested register");
    }
  }
  return loc;
}

StabilizerTable trace_out(const StabilizerTable& table,
                          const std::vector<int>& qudits) {
  check_measurable_table(table);
  const int n = table.n_qudits();
  std::vector<bool> dropped(n, false);
  for (int q : qudits) {
    if (q < 0 || q >= n || dropped[q]) {
      fail(ErrorKind::InvalidArgument, "trace set must be distinct valid qudits");
    }
    dropped[q] = true;
  }
  if (qudits.empty()) return table;
  if (static_cast<int>(qudits.size()) == n) {
    fail(ErrorKind::InvalidArgument, "cannot trace out every qudit");
  }

  std::vector<int> order;  // traced qudits first, so their rows localise
  for (int q : qudits) order.push_back(q);
  std::vector<int> kept;
  for (int q = 0; q < n; ++q) {
    if (!dropped[q]) {
      order.push_back(q);
      kept.push_back(q);
    }
  }
  auto res = rref(table.row_ops(), qudit_block_column_order(order),
                  /*drop_trivial=*/true);

  std::vector<PauliOperator> survivors;
  for (size_t i = 0; i < res.rows.size(); ++i) {
    bool leads_inside = dropped[res.pivot_cols[i] / 2];
    const auto& row = res.rows[i];
    bool inside_only = true;
    bool outside_only = true;
    for (int q = 0; q < n; ++q) {
      bool acts = row.x_exp(q) != 0 || row.z_exp(q) != 0;
      if (!acts) continue;
      if (dropped[q]) outside_only = false;
      else inside_only = false;
    }
    if (leads_inside) {
      if (!inside_only) {
        fail(ErrorKind::Entangled,
             "traced qudits are still entangled with the rest");
      }
      continue;  // supported inside the traced set; deleted with it
    }
    if (!outside_only) {
      fail(ErrorKind::Entangled,
           "traced qudits are still entangled with the rest");
    }
    std::vector<int> x, z;
    for (int q : kept) {
      x.push_back(row.x_exp(q));
      z.push_back(row.z_exp(q));
    }
    survivors.emplace_back(table.dim(), std::move(x), std::move(z),
                           row.phase_exp());
  }
  return StabilizerTable::from_ops(table.dim(), n - static_cast<int>(qudits.size()),
                                   std::move(survivors));
}

}  // namespace amekit
