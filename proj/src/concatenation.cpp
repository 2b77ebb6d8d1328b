#include "amekit/concatenation.hpp"

#include <algorithm>

namespace amekit {

void SwapPlan::validate() const {
  if (left.dim() != right.dim()) {
    fail(ErrorKind::Shape, "swap states must share the qudit dimension");
  }
  if (!left.is_pure_state() || !right.is_pure_state()) {
    fail(ErrorKind::InvalidArgument, "swap needs pure-state tables");
  }
  // The right state must stay localisable at the paired qudits, which caps
  // the pair count at floor(N_R/2); the left side only needs distinct qudits
  // (teleporting a single-qudit state uses one pair on a one-qudit left).
  const int bound = std::min(left.n_qudits(), right.n_qudits() / 2);
  if (pairs.empty() || static_cast<int>(pairs.size()) > bound) {
    fail(ErrorKind::InvalidArgument,
         "pair count must lie in [1, min(N_L, floor(N_R/2))]");
  }
  std::vector<bool> l_used(left.n_qudits(), false), r_used(right.n_qudits(), false);
  for (auto [l, r] : pairs) {
    if (l < 0 || l >= left.n_qudits() || r < 0 || r >= right.n_qudits()) {
      fail(ErrorKind::InvalidArgument, "pair index out of range");
    }
    if (l_used[l] || r_used[r]) {
      fail(ErrorKind::InvalidArgument, "pairs must be disjoint");
    }
    l_used[l] = r_used[r] = true;
  }
  if (!is_ame(right)) {
    fail(ErrorKind::NotAme, "right state of a swap plan must be AME");
  }
}

StabilizerTable entanglement_swap(const SwapPlan& plan,
                                  const SwapOptions& options) {
  plan.validate();
  if (!options.outcomes.empty() &&
      options.outcomes.size() != plan.pairs.size()) {
    fail(ErrorKind::InvalidArgument, "outcome list must match the pair list");
  }
  const int d = plan.left.dim();
  const int n_l = plan.left.n_qudits();
  const int n_r = plan.right.n_qudits();
  const int n = n_l + n_r;

  std::vector<int> right_register;
  for (auto [l, r] : plan.pairs) right_register.push_back(r);
  LocalizedRegister loc = localize_register(plan.right, right_register);

  auto extend_left = [&](const PauliOperator& op) {
    std::vector<int> x(n, 0), z(n, 0);
    for (int q = 0; q < n_l; ++q) {
      x[q] = op.x_exp(q);
      z[q] = op.z_exp(q);
    }
    return PauliOperator(d, std::move(x), std::move(z), op.phase_exp());
  };
  auto extend_right = [&](const PauliOperator& op) {
    std::vector<int> x(n, 0), z(n, 0);
    for (int q = 0; q < n_r; ++q) {
      x[n_l + q] = op.x_exp(q);
      z[n_l + q] = op.z_exp(q);
    }
    return PauliOperator(d, std::move(x), std::move(z), op.phase_exp());
  };

  std::vector<TableRow> rows;
  for (const auto& r : plan.left.rows()) {
    rows.push_back({extend_left(r.op), r.role, r.logical_index});
  }
  for (size_t j = 0; j < plan.pairs.size(); ++j) {
    rows.push_back({extend_right(loc.z_rows[j]), RowRole::Stabilizer, 0});
    rows.push_back({extend_right(loc.x_rows[j]), RowRole::Stabilizer, 0});
  }
  for (const auto& r : loc.rest) {
    rows.push_back({extend_right(r), RowRole::Stabilizer, 0});
  }
  StabilizerTable joint(d, n, std::move(rows));

  std::vector<int> traced;
  for (size_t j = 0; j < plan.pairs.size(); ++j) {
    auto [l, r] = plan.pairs[j];
    int rq = n_l + r;
    std::pair<int, int> outcome{0, 0};
    if (!options.outcomes.empty()) outcome = options.outcomes[j];

    PauliOperator xx = multiply(PauliOperator::single_site(d, n, l, 1, 0),
                                PauliOperator::single_site(d, n, rq, 1, 0));
    PauliOperator zz = multiply(PauliOperator::single_site(d, n, l, 0, 1),
                                PauliOperator::single_site(d, n, rq, 0, d - 1));

    MeasureOptions mo;
    mo.sample = options.sample;
    mo.rng = options.rng;
    mo.outcome = outcome.first;
    joint = measure(joint, xx, mo).table;
    mo.outcome = outcome.second;
    joint = measure(joint, zz, mo).table;

    traced.push_back(l);
    traced.push_back(rq);
  }
  return trace_out(joint, traced);
}

StabilizerTable encode_qudits(const StabilizerTable& table, const CodeSpec& code,
                              const std::vector<std::pair<int, int>>& qudit_to_slot) {
  code.validate();
  if (table.dim() != code.dim) {
    fail(ErrorKind::Shape, "table and code dimensions differ");
  }
  const int d = table.dim();
  const int n_old = table.n_qudits();
  std::vector<bool> consumed(n_old, false);
  std::vector<bool> slot_used(code.k_logical, false);
  for (auto [q, slot] : qudit_to_slot) {
    if (q < 0 || q >= n_old || consumed[q]) {
      fail(ErrorKind::InvalidArgument, "encoded qudits must be distinct");
    }
    if (slot < 0 || slot >= code.k_logical || slot_used[slot]) {
      fail(ErrorKind::InvalidArgument, "logical slots must be distinct");
    }
    consumed[q] = true;
    slot_used[slot] = true;
  }
  std::vector<int> kept;
  for (int q = 0; q < n_old; ++q) {
    if (!consumed[q]) kept.push_back(q);
  }
  const int n_keep = static_cast<int>(kept.size());
  const int n_new = n_keep + code.n_physical;

  auto extend_code_op = [&](const PauliOperator& op) {
    std::vector<int> x(n_new, 0), z(n_new, 0);
    for (int q = 0; q < code.n_physical; ++q) {
      x[n_keep + q] = op.x_exp(q);
      z[n_keep + q] = op.z_exp(q);
    }
    return PauliOperator(d, std::move(x), std::move(z), op.phase_exp());
  };

  std::vector<std::pair<int, int>> sorted = qudit_to_slot;
  std::sort(sorted.begin(), sorted.end());

  std::vector<TableRow> rows;
  for (const auto& r : table.rows()) {
    std::vector<int> x(n_new, 0), z(n_new, 0);
    for (int i = 0; i < n_keep; ++i) {
      x[i] = r.op.x_exp(kept[i]);
      z[i] = r.op.z_exp(kept[i]);
    }
    PauliOperator image(d, std::move(x), std::move(z), r.op.phase_exp());
    for (auto [q, slot] : sorted) {
      int a = r.op.x_exp(q);
      int b = r.op.z_exp(q);
      if (a != 0) {
        image = multiply(image,
                         extend_code_op(power(code.logical_pairs[slot].first, a)));
      }
      if (b != 0) {
        image = multiply(image,
                         extend_code_op(power(code.logical_pairs[slot].second, b)));
      }
    }
    rows.push_back({std::move(image), r.role, r.logical_index});
  }
  for (const auto& g : code.stabilizer_gens) {
    rows.push_back({extend_code_op(g), RowRole::Stabilizer, 0});
  }
  return StabilizerTable(d, n_new, std::move(rows));
}

StabilizerTable encode_through(const CodeSpec& code, const StabilizerTable& input,
                               const std::vector<int>& embedding) {
  for (const auto& r : input.rows()) {
    if (r.role == RowRole::LogicalX || r.role == RowRole::LogicalZ) {
      fail(ErrorKind::InvalidArgument, "encoded input must be a state table");
    }
  }
  std::vector<int> slots = embedding;
  if (slots.empty()) {
    slots.resize(input.n_qudits());
    for (size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
  }
  if (static_cast<int>(slots.size()) != input.n_qudits()) {
    fail(ErrorKind::InvalidArgument, "embedding must map every input qudit");
  }
  std::vector<std::pair<int, int>> map;
  for (int q = 0; q < input.n_qudits(); ++q) map.emplace_back(q, slots[q]);
  StabilizerTable encoded = encode_qudits(input, code, map);

  // generators first, then the encoded input rows
  std::vector<TableRow> rows;
  for (int i = input.row_count(); i < encoded.row_count(); ++i) {
    rows.push_back(encoded.row(i));
  }
  for (int i = 0; i < input.row_count(); ++i) {
    rows.push_back({encoded.row(i).op, RowRole::EncodedInput, 0});
  }
  return StabilizerTable(code.dim, code.n_physical, std::move(rows));
}

PauliOperator propagate_operator(const CodeSpec& code,
                                 const PauliOperator& logical_op) {
  if (logical_op.dim() != code.dim || logical_op.n_qudits() != code.k_logical) {
    fail(ErrorKind::Shape, "operator must act on the logical register");
  }
  PauliOperator image =
      PauliOperator::identity(code.dim, code.n_physical).with_phase(
          logical_op.phase_exp());
  for (int j = 0; j < code.k_logical; ++j) {
    int a = logical_op.x_exp(j);
    int b = logical_op.z_exp(j);
    if (a != 0) image = multiply(image, power(code.logical_pairs[j].first, a));
    if (b != 0) image = multiply(image, power(code.logical_pairs[j].second, b));
  }
  return image;
}

}  // namespace amekit
