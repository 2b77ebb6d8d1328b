#include "amekit/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace amekit {

namespace {

std::vector<bool> region_mask(const StabilizerTable& table,
                              const std::vector<int>& b) {
  std::vector<bool> in_b(table.n_qudits(), false);
  for (int q : b) {
    if (q < 0 || q >= table.n_qudits() || in_b[q]) {
      fail(ErrorKind::InvalidArgument, "region must be distinct valid qudits");
    }
    in_b[q] = true;
  }
  return in_b;
}

}  // namespace

int supported_subgroup_rank(const StabilizerTable& table,
                            const std::vector<int>& b) {
  auto in_b = region_mask(table, b);
  // dependencies among the rows truncated to the complement are exactly the
  // group elements supported inside B
  std::vector<int> kept;
  for (int q = 0; q < table.n_qudits(); ++q) {
    if (!in_b[q]) kept.push_back(q);
  }
  if (kept.empty()) return table.row_count();
  std::vector<PauliOperator> truncated;
  for (const auto& r : table.rows()) {
    std::vector<int> x, z;
    for (int q : kept) {
      x.push_back(r.op.x_exp(q));
      z.push_back(r.op.z_exp(q));
    }
    truncated.emplace_back(table.dim(), std::move(x), std::move(z), 0);
  }
  return table.row_count() - rank(truncated);
}

int stabilizer_entropy_units(const StabilizerTable& table,
                             const std::vector<int>& b) {
  if (!table.is_pure_state()) {
    fail(ErrorKind::InvalidArgument, "entropy needs a pure-state table");
  }
  if (b.empty() || static_cast<int>(b.size()) >= table.n_qudits()) {
    fail(ErrorKind::InvalidArgument, "region must be a nonempty proper subset");
  }
  return static_cast<int>(b.size()) - supported_subgroup_rank(table, b);
}

double stabilizer_entropy(const StabilizerTable& table,
                          const std::vector<int>& b) {
  return stabilizer_entropy_units(table, b) * std::log2(table.dim());
}

std::vector<PauliOperator> project_rows(const StabilizerTable& table,
                                        const std::vector<int>& b) {
  auto in_b = region_mask(table, b);
  (void)in_b;
  std::vector<PauliOperator> projected;
  for (const auto& r : table.rows()) {
    std::vector<int> x, z;
    for (int q : b) {
      x.push_back(r.op.x_exp(q));
      z.push_back(r.op.z_exp(q));
    }
    projected.emplace_back(table.dim(), std::move(x), std::move(z), 0);
  }
  return projected;
}

bool same_span(const std::vector<PauliOperator>& a,
               const std::vector<PauliOperator>& b) {
  std::vector<PauliOperator> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  int ra = rank(a);
  return ra == rank(b) && ra == rank(joint);
}

int fattal_pairing_count(const StabilizerTable& table, const std::vector<int>& b) {
  if (table.dim() != 2) {
    fail(ErrorKind::Unsupported, "pairing count is a qubit cross-check");
  }
  if (!table.is_pure_state()) {
    fail(ErrorKind::InvalidArgument, "entropy needs a pure-state table");
  }
  std::vector<PauliOperator> proj = project_rows(table, b);
  std::vector<bool> active(proj.size(), true);
  int pairs = 0;
  while (true) {
    int first = -1, second = -1;
    for (size_t i = 0; i < proj.size() && first < 0; ++i) {
      if (!active[i]) continue;
      for (size_t j = i + 1; j < proj.size(); ++j) {
        if (!active[j]) continue;
        if (symplectic_product(proj[i], proj[j]) != 0) {
          first = static_cast<int>(i);
          second = static_cast<int>(j);
          break;
        }
      }
    }
    if (first < 0) break;
    for (size_t k = 0; k < proj.size(); ++k) {
      if (!active[k] || static_cast<int>(k) == first ||
          static_cast<int>(k) == second) {
        continue;
      }
      if (symplectic_product(proj[k], proj[first]) != 0) {
        proj[k] = multiply(proj[k], proj[second]);
      }
      if (symplectic_product(proj[k], proj[second]) != 0) {
        proj[k] = multiply(proj[k], proj[first]);
      }
    }
    active[first] = active[second] = false;
    ++pairs;
  }
  return pairs;
}

RegionCut contiguous_cut(int boundary_size, int s_b) {
  if (s_b < 2 || s_b > boundary_size) {
    fail(ErrorKind::InvalidArgument, "arc start must lie in [2, boundary size]");
  }
  RegionCut cut;
  for (int q = s_b; q <= boundary_size; ++q) cut.b.push_back(q - 1);
  return cut;
}

bool is_cyclic_arc(const std::vector<int>& b, int boundary_size) {
  if (b.empty() || static_cast<int>(b.size()) >= boundary_size) return false;
  std::vector<bool> in_b(boundary_size, false);
  for (int q : b) {
    if (q < 0 || q >= boundary_size || in_b[q]) return false;
    in_b[q] = true;
  }
  // an arc has exactly one cyclic transition into the region
  int starts = 0;
  for (int q = 0; q < boundary_size; ++q) {
    int prev = (q + boundary_size - 1) % boundary_size;
    if (in_b[q] && !in_b[prev]) ++starts;
  }
  return starts == 1;
}

void validate_cut(const RegionCut& cut, int boundary_size) {
  if (!is_cyclic_arc(cut.b, boundary_size)) {
    fail(ErrorKind::InvalidArgument,
         "region must be a nonempty proper arc of the boundary");
  }
}

CutWitness min_cut(const TensorNetwork& network, const RegionCut& cut,
                   CutObjective objective) {
  network.validate();
  validate_cut(cut, network.boundary_size());

  std::vector<bool> terminal_in_b(network.boundary_size(), false);
  for (int q : cut.b) terminal_in_b[q] = true;

  std::map<int, int> index_of;
  for (const auto& node : network.nodes) {
    int next = static_cast<int>(index_of.size());
    index_of[node.id] = next;
  }
  const int n_nodes = static_cast<int>(network.nodes.size());
  if (n_nodes > 24) fail(ErrorKind::Limit, "cut enumeration capped at 24 nodes");

  CutWitness best;
  bool have_best = false;
  for (std::uint32_t mask = 0; mask < (1u << n_nodes); ++mask) {
    auto on_b = [&](int node_id) {
      return (mask >> index_of[node_id] & 1u) != 0;
    };
    int gamma = 0;
    for (const auto& e : network.edges) {
      if (on_b(e.from.node) != on_b(e.to.node)) ++gamma;
    }
    for (int p = 0; p < network.boundary_size(); ++p) {
      if (on_b(network.boundary_legs[p].node) != terminal_in_b[p]) ++gamma;
    }
    // The rank bound holds with the input count of either side's isometry,
    // and the two reductions of a pure state have equal entropy, so the
    // tight correction takes the smaller side.
    int p_a = 0, p_b = 0;
    for (const auto& leg : network.logical_legs) {
      if (on_b(leg.node)) ++p_b;
      else ++p_a;
    }
    int p_count = std::min(p_a, p_b);
    int value = objective == CutObjective::Gamma ? gamma : gamma + p_count;
    if (!have_best || value < best.value) {
      have_best = true;
      best.value = value;
      best.gamma = gamma;
      best.p_count = p_count;
      best.node_on_b_side.assign(n_nodes, false);
      best.cut_boundary.clear();
      best.cut_edges.clear();
      for (int i = 0; i < n_nodes; ++i) {
        best.node_on_b_side[i] = (mask >> i & 1u) != 0;
      }
      for (size_t i = 0; i < network.edges.size(); ++i) {
        const auto& e = network.edges[i];
        if (on_b(e.from.node) != on_b(e.to.node)) {
          best.cut_edges.push_back(static_cast<int>(i));
        }
      }
      for (int p = 0; p < network.boundary_size(); ++p) {
        if (on_b(network.boundary_legs[p].node) != terminal_in_b[p]) {
          best.cut_boundary.push_back(network.boundary_legs[p]);
        }
      }
    }
  }
  return best;
}

EntropyReport rt_check(const TensorNetwork& network, InputFamily input,
                       const RegionCut& cut) {
  StabilizerTable boundary = contract_with_input(network, input_family(input));
  validate_cut(cut, network.boundary_size());

  EntropyReport report;
  report.input = to_string(input);
  report.b = cut.b;
  report.entropy_units = stabilizer_entropy_units(boundary, cut.b);
  const double log2d = std::log2(network.dim);
  report.entropy_bits = report.entropy_units * log2d;
  CutWitness g = min_cut(network, cut, CutObjective::Gamma);
  CutWitness gp = min_cut(network, cut, CutObjective::GammaPlusP);
  report.min_gamma = g.value;
  report.min_gamma_plus_p = gp.value;
  report.product_bound_bits = g.value * log2d;
  report.general_bound_bits = gp.value * log2d;
  report.saturated = report.entropy_units == gp.value;
  return report;
}

std::vector<EntropyReport> entropy_scan(const TensorNetwork& network,
                                        const std::vector<InputFamily>& inputs,
                                        int s_b_min, int s_b_max) {
  if (s_b_min < 2 || s_b_max > network.boundary_size() || s_b_min > s_b_max) {
    fail(ErrorKind::InvalidArgument, "arc range out of bounds");
  }
  CodeSpec code = contract(network);
  const double log2d = std::log2(network.dim);

  std::vector<EntropyReport> reports;
  for (InputFamily family : inputs) {
    StabilizerTable boundary = encode_through(code, input_family(family));
    for (int s_b = s_b_min; s_b <= s_b_max; ++s_b) {
      RegionCut cut = contiguous_cut(network.boundary_size(), s_b);
      EntropyReport report;
      report.input = to_string(family);
      report.s_b = s_b;
      report.b = cut.b;
      report.entropy_units = stabilizer_entropy_units(boundary, cut.b);
      report.entropy_bits = report.entropy_units * log2d;
      CutWitness g = min_cut(network, cut, CutObjective::Gamma);
      CutWitness gp = min_cut(network, cut, CutObjective::GammaPlusP);
      report.min_gamma = g.value;
      report.min_gamma_plus_p = gp.value;
      report.product_bound_bits = g.value * log2d;
      report.general_bound_bits = gp.value * log2d;
      report.saturated = report.entropy_units == gp.value;
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

namespace {

std::string format_bits(double bits) {
  double rounded = std::round(bits);
  if (std::abs(bits - rounded) < 1e-9) {
    return std::to_string(static_cast<long long>(rounded));
  }
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << bits;
  return out.str();
}

}  // namespace

std::string entropy_scan_csv(const std::vector<EntropyReport>& reports) {
  std::ostringstream out;
  out << "input,s_B,entropy_bits,min_gamma,min_gamma_plus_P,bound_bits,saturated\n";
  for (const auto& r : reports) {
    out << r.input << ',' << r.s_b << ',' << format_bits(r.entropy_bits) << ','
        << r.min_gamma << ',' << r.min_gamma_plus_p << ','
        << format_bits(r.general_bound_bits) << ','
        << (r.saturated ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace amekit
