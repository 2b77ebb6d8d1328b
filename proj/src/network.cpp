#include "amekit/network.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace amekit {

void TensorNetwork::validate() const {
  if (nodes.empty()) fail(ErrorKind::InvalidArgument, "network has no nodes");
  std::map<int, const Node*> by_id;
  for (const auto& node : nodes) {
    if (node.template_table.dim() != dim) {
      fail(ErrorKind::Shape, "node template dimension mismatch");
    }
    if (!node.template_table.is_pure_state()) {
      fail(ErrorKind::InvalidArgument, "node templates must be pure states");
    }
    if (!by_id.emplace(node.id, &node).second) {
      fail(ErrorKind::InvalidArgument, "duplicate node id");
    }
  }
  auto leg_valid = [&](const LegRef& ref) {
    auto it = by_id.find(ref.node);
    return it != by_id.end() && ref.leg >= 0 &&
           ref.leg < it->second->template_table.n_qudits();
  };

  std::set<LegRef> seen;
  auto claim = [&](const LegRef& ref) {
    if (!leg_valid(ref)) fail(ErrorKind::InvalidArgument, "leg out of range");
    if (!seen.insert(ref).second) {
      fail(ErrorKind::InvalidArgument, "leg used more than once");
    }
  };
  std::map<int, int> in_count, out_count;
  for (const auto& e : edges) {
    claim(e.from);
    claim(e.to);
    if (e.from.node == e.to.node) {
      fail(ErrorKind::InvalidArgument, "self-loop edge");
    }
    ++out_count[e.from.node];
    ++in_count[e.to.node];
  }
  for (const auto& ref : logical_legs) {
    claim(ref);
    ++in_count[ref.node];
  }
  for (const auto& ref : boundary_legs) {
    claim(ref);
    ++out_count[ref.node];
  }
  for (const auto& node : nodes) {
    int total = node.template_table.n_qudits();
    int ins = in_count[node.id];
    int outs = out_count[node.id];
    if (ins + outs != total) {
      fail(ErrorKind::InvalidArgument, "node has unassigned legs");
    }
    if (ins > outs) {
      fail(ErrorKind::InvalidArgument,
           "node violates the isometry condition (inputs exceed outputs)");
    }
  }

  // edge directions must admit a topological order
  std::map<int, int> indegree;
  for (const auto& node : nodes) indegree[node.id] = 0;
  for (const auto& e : edges) ++indegree[e.to.node];
  std::vector<int> ready;
  for (auto [id, deg] : indegree) {
    if (deg == 0) ready.push_back(id);
  }
  size_t processed = 0;
  while (!ready.empty()) {
    int id = ready.back();
    ready.pop_back();
    ++processed;
    for (const auto& e : edges) {
      if (e.from.node == id && --indegree[e.to.node] == 0) {
        ready.push_back(e.to.node);
      }
    }
  }
  if (processed != nodes.size()) {
    fail(ErrorKind::InvalidArgument, "edge directions contain a cycle");
  }
}

StabilizerTable ame6_state() {
  static const char* kRows[] = {"XZZX11", "1XZZX1", "X1XZZ1",
                                "ZX1XZ1", "XXXXXX", "ZZZZZZ"};
  std::vector<PauliOperator> rows;
  for (const char* r : kRows) rows.push_back(parse_pauli(r, 2, 6));
  return StabilizerTable::from_ops(2, 6, std::move(rows));
}

TensorNetwork build_pentagon_network(int layers) {
  if (layers != 1 && layers != 2) {
    fail(ErrorKind::Unsupported, "pentagon network supports 1 or 2 layers");
  }
  TensorNetwork net;
  net.dim = 2;
  net.nodes.push_back({0, ame6_state()});
  if (layers == 1) {
    for (int leg = 0; leg < 5; ++leg) net.boundary_legs.push_back({0, leg});
    net.logical_legs.push_back({0, 5});
    net.validate();
    return net;
  }
  // Outer pentagon k receives the centre's planar leg k-1 on its template leg
  // 5 and carries its own logical leg on template leg 4; template legs 0..3
  // are its boundary block, numbered 4(k-1)+1..4k around the circle. Slots
  // 2 and 3 sit on pentagons 3 and 2: this is the assignment that matches the
  // published boundary list, with the centre slot last.
  for (int k = 1; k <= 5; ++k) {
    net.nodes.push_back({k, ame6_state()});
    net.edges.push_back({{0, k - 1}, {k, 5}});
  }
  for (int k : {1, 3, 2, 4, 5}) net.logical_legs.push_back({k, 4});
  net.logical_legs.push_back({0, 5});
  for (int k = 1; k <= 5; ++k) {
    for (int leg = 0; leg < 4; ++leg) net.boundary_legs.push_back({k, leg});
  }
  net.validate();
  return net;
}

namespace {

struct ContractionState {
  std::vector<TableRow> rows;
  std::vector<LegRef> legs;
};

}  // namespace

CodeSpec contract(const TensorNetwork& network) {
  network.validate();

  // Kahn order with ascending ids for determinism.
  std::map<int, int> indegree;
  std::map<int, const TensorNetwork::Node*> by_id;
  for (const auto& node : network.nodes) {
    indegree[node.id] = 0;
    by_id[node.id] = &node;
  }
  for (const auto& e : network.edges) ++indegree[e.to.node];
  std::vector<int> order;
  std::set<int> ready;
  for (auto [id, deg] : indegree) {
    if (deg == 0) ready.insert(id);
  }
  while (!ready.empty()) {
    int id = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(id);
    for (const auto& e : network.edges) {
      if (e.from.node == id && --indegree[e.to.node] == 0) {
        ready.insert(e.to.node);
      }
    }
  }

  const int d = network.dim;
  std::vector<LegRef> legs;
  StabilizerTable current(d, 1, {});
  bool started = false;

  for (int id : order) {
    const auto& node = *by_id[id];
    const int n_t = node.template_table.n_qudits();

    std::vector<int> register_positions;       // template legs used as inputs
    std::vector<LegRef> consumed_legs;         // live legs feeding them
    for (const auto& e : network.edges) {
      if (e.to.node == id) {
        register_positions.push_back(e.to.leg);
        consumed_legs.push_back(e.from);
      }
    }
    std::vector<std::pair<int, int>> logical_slots;  // (template leg, slot)
    for (size_t s = 0; s < network.logical_legs.size(); ++s) {
      if (network.logical_legs[s].node == id) {
        register_positions.push_back(network.logical_legs[s].leg);
        logical_slots.emplace_back(network.logical_legs[s].leg,
                                   static_cast<int>(s));
      }
    }

    std::vector<int> out_positions;
    {
      std::vector<bool> used(n_t, false);
      for (int p : register_positions) used[p] = true;
      for (int p = 0; p < n_t; ++p) {
        if (!used[p]) out_positions.push_back(p);
      }
    }

    if (register_positions.empty()) {
      // a free state node: its rows join the table unencoded
      std::vector<TableRow> rows = started ? current.rows() : std::vector<TableRow>{};
      const int n_old = started ? current.n_qudits() : 0;
      std::vector<TableRow> extended;
      for (auto& r : rows) {
        std::vector<int> x(n_old + n_t, 0), z(n_old + n_t, 0);
        for (int q = 0; q < n_old; ++q) {
          x[q] = r.op.x_exp(q);
          z[q] = r.op.z_exp(q);
        }
        extended.push_back({PauliOperator(d, std::move(x), std::move(z),
                                          r.op.phase_exp()),
                            r.role, r.logical_index});
      }
      for (const auto& r : node.template_table.rows()) {
        std::vector<int> x(n_old + n_t, 0), z(n_old + n_t, 0);
        for (int q = 0; q < n_t; ++q) {
          x[n_old + q] = r.op.x_exp(q);
          z[n_old + q] = r.op.z_exp(q);
        }
        extended.push_back({PauliOperator(d, std::move(x), std::move(z),
                                          r.op.phase_exp()),
                            RowRole::Stabilizer, 0});
      }
      current = StabilizerTable(d, n_old + n_t, std::move(extended));
      started = true;
      for (int p : out_positions) legs.push_back({id, p});
      continue;
    }

    CodeSpec code = extract_code(node.template_table, register_positions);

    if (!started && consumed_legs.empty()) {
      std::vector<TableRow> rows;
      for (const auto& g : code.stabilizer_gens) {
        rows.push_back({g, RowRole::Stabilizer, 0});
      }
      int slot_in_code = static_cast<int>(consumed_legs.size());
      for (auto [leg, global_slot] : logical_slots) {
        rows.push_back({code.logical_pairs[slot_in_code].first,
                        RowRole::LogicalX, global_slot});
        rows.push_back({code.logical_pairs[slot_in_code].second,
                        RowRole::LogicalZ, global_slot});
        ++slot_in_code;
      }
      current = StabilizerTable(d, code.n_physical, std::move(rows));
      started = true;
      for (int p : out_positions) legs.push_back({id, p});
      continue;
    }

    // consume the live legs feeding this node
    std::vector<std::pair<int, int>> qudit_to_slot;
    for (size_t i = 0; i < consumed_legs.size(); ++i) {
      auto it = std::find(legs.begin(), legs.end(), consumed_legs[i]);
      if (it == legs.end()) {
        fail(ErrorKind::InvalidArgument, "edge source leg is not live");
      }
      qudit_to_slot.emplace_back(static_cast<int>(it - legs.begin()),
                                 static_cast<int>(i));
    }
    StabilizerTable next = encode_qudits(current, code, qudit_to_slot);

    // surviving legs keep their ascending-column order, new legs append
    std::vector<bool> gone(legs.size(), false);
    for (auto [col, slot] : qudit_to_slot) gone[col] = true;
    std::vector<LegRef> new_legs;
    for (size_t i = 0; i < legs.size(); ++i) {
      if (!gone[i]) new_legs.push_back(legs[i]);
    }
    for (int p : out_positions) new_legs.push_back({id, p});
    legs = std::move(new_legs);

    // logical rows for this node's own input slots
    std::vector<TableRow> rows = next.rows();
    int slot_in_code = static_cast<int>(consumed_legs.size());
    const int n_new = next.n_qudits();
    const int offset = n_new - code.n_physical;
    auto extend_code_op = [&](const PauliOperator& op) {
      std::vector<int> x(n_new, 0), z(n_new, 0);
      for (int q = 0; q < code.n_physical; ++q) {
        x[offset + q] = op.x_exp(q);
        z[offset + q] = op.z_exp(q);
      }
      return PauliOperator(d, std::move(x), std::move(z), op.phase_exp());
    };
    for (auto [leg, global_slot] : logical_slots) {
      rows.push_back({extend_code_op(code.logical_pairs[slot_in_code].first),
                      RowRole::LogicalX, global_slot});
      rows.push_back({extend_code_op(code.logical_pairs[slot_in_code].second),
                      RowRole::LogicalZ, global_slot});
      ++slot_in_code;
    }
    current = StabilizerTable(d, n_new, std::move(rows));
  }

  // permute columns into boundary order
  if (legs.size() != network.boundary_legs.size()) {
    fail(ErrorKind::InvalidArgument, "contraction did not end on the boundary");
  }
  std::vector<int> source(network.boundary_legs.size());
  for (size_t p = 0; p < network.boundary_legs.size(); ++p) {
    auto it = std::find(legs.begin(), legs.end(), network.boundary_legs[p]);
    if (it == legs.end()) {
      fail(ErrorKind::InvalidArgument, "boundary leg missing after contraction");
    }
    source[p] = static_cast<int>(it - legs.begin());
  }
  auto permute = [&](const PauliOperator& op) {
    std::vector<int> x(source.size()), z(source.size());
    for (size_t p = 0; p < source.size(); ++p) {
      x[p] = op.x_exp(source[p]);
      z[p] = op.z_exp(source[p]);
    }
    return PauliOperator(d, std::move(x), std::move(z), op.phase_exp());
  };

  CodeSpec out;
  out.dim = d;
  out.n_physical = network.boundary_size();
  out.k_logical = network.logical_count();
  out.logical_pairs.assign(
      out.k_logical,
      {PauliOperator::identity(d, out.n_physical),
       PauliOperator::identity(d, out.n_physical)});
  std::vector<bool> have_x(out.k_logical, false), have_z(out.k_logical, false);
  for (const auto& r : current.rows()) {
    switch (r.role) {
      case RowRole::Stabilizer:
      case RowRole::EncodedInput:
        out.stabilizer_gens.push_back(permute(r.op));
        break;
      case RowRole::LogicalX:
        out.logical_pairs[r.logical_index].first = permute(r.op);
        have_x[r.logical_index] = true;
        break;
      case RowRole::LogicalZ:
        out.logical_pairs[r.logical_index].second = permute(r.op);
        have_z[r.logical_index] = true;
        break;
    }
  }
  for (int j = 0; j < out.k_logical; ++j) {
    if (!have_x[j] || !have_z[j]) {
      fail(ErrorKind::InvalidArgument, "missing logical pair after contraction");
    }
  }
  out.column_permutation.resize(out.n_physical);
  for (int i = 0; i < out.n_physical; ++i) out.column_permutation[i] = i;
  out.validate();
  return out;
}

StabilizerTable contract_with_input(const TensorNetwork& network,
                                    const StabilizerTable& input) {
  if (input.n_qudits() != network.logical_count()) {
    fail(ErrorKind::Shape, "input must cover the logical slots");
  }
  return encode_through(contract(network), input);
}

InputFamily input_family_from_string(std::string_view name) {
  if (name == "ame") return InputFamily::Ame;
  if (name == "ghz") return InputFamily::Ghz;
  if (name == "singlet") return InputFamily::Singlet;
  if (name == "product") return InputFamily::Product;
  fail(ErrorKind::InvalidArgument,
       "unknown input family '" + std::string(name) +
           "' (expected ame, ghz, singlet or product)");
}

std::string to_string(InputFamily family) {
  switch (family) {
    case InputFamily::Ame: return "ame";
    case InputFamily::Ghz: return "ghz";
    case InputFamily::Singlet: return "singlet";
    case InputFamily::Product: return "product";
  }
  fail(ErrorKind::InvalidArgument, "invalid input family");
}

StabilizerTable input_family(InputFamily family) {
  static const char* kGhz[] = {"XXXXXX", "ZZ1111", "1ZZ111",
                               "11ZZ11", "111ZZ1", "1111ZZ"};
  static const char* kSinglet[] = {"111XX1", "111ZZ1", "X11111",
                                   "1X1111", "11X111", "11111X"};
  static const char* kProduct[] = {"X11111", "1X1111", "11X111",
                                   "111X11", "1111X1", "11111X"};
  const char** rows = nullptr;
  switch (family) {
    case InputFamily::Ame: return ame6_state();
    case InputFamily::Ghz: rows = kGhz; break;
    case InputFamily::Singlet: rows = kSinglet; break;
    case InputFamily::Product: rows = kProduct; break;
  }
  std::vector<PauliOperator> ops;
  for (int i = 0; i < 6; ++i) ops.push_back(parse_pauli(rows[i], 2, 6));
  return StabilizerTable::from_ops(2, 6, std::move(ops));
}

SpreadResult spread_operator(const TensorNetwork& network, int slot,
                             const PauliOperator& op) {
  if (slot < 0 || slot >= network.logical_count()) {
    fail(ErrorKind::InvalidArgument, "logical slot out of range");
  }
  if (op.n_qudits() != 1 || op.dim() != network.dim) {
    fail(ErrorKind::Shape, "spread takes a single-qudit operator");
  }
  CodeSpec code = contract(network);
  PauliOperator embedded =
      PauliOperator::single_site(network.dim, network.logical_count(), slot,
                                 op.x_exp(0), op.z_exp(0))
          .with_phase(op.phase_exp());
  return {propagate_operator(code, embedded), std::move(code)};
}

}  // namespace amekit
