#pragma once

#include <string>
#include <vector>

#include "amekit/network.hpp"
#include "amekit/tableau.hpp"

namespace amekit {

/// Rank of the subgroup of the generated group supported entirely inside B.
int supported_subgroup_rank(const StabilizerTable& table,
                            const std::vector<int>& b);

/// Entanglement entropy of the reduction onto B, as the integer multiple of
/// log2(d): |B| minus the rank of the subgroup supported inside B.
int stabilizer_entropy_units(const StabilizerTable& table,
                             const std::vector<int>& b);
double stabilizer_entropy(const StabilizerTable& table,
                          const std::vector<int>& b);  // bits

/// Qubit-only cross-check: pairs up generators whose projections onto B fail
/// to commute, multiplying the rest until only the pairs remain; the pair
/// count equals the entropy in bits.
int fattal_pairing_count(const StabilizerTable& table, const std::vector<int>& b);

/// Exponent projections of the rows onto B (phases dropped).
std::vector<PauliOperator> project_rows(const StabilizerTable& table,
                                        const std::vector<int>& b);

/// Same symplectic span over Z_d.
bool same_span(const std::vector<PauliOperator>& a,
               const std::vector<PauliOperator>& b);

/// A boundary region, stored as 0-based boundary positions; must be a
/// nonempty proper arc of the cyclic boundary order.
struct RegionCut {
  std::vector<int> b;
};
RegionCut contiguous_cut(int boundary_size, int s_b);  // B = {s_b..size}, 1-based
bool is_cyclic_arc(const std::vector<int>& b, int boundary_size);
void validate_cut(const RegionCut& cut, int boundary_size);

enum class CutObjective { Gamma, GammaPlusP };

/// A bulk cut as a side assignment of the nodes: legs crossing the assignment
/// are cut, and p_count counts the logical legs of the smaller side (the
/// entropy bound holds with either side's input count, so the smaller one is
/// the tight correction).
struct CutWitness {
  int gamma = 0;
  int p_count = 0;
  int value = 0;
  std::vector<bool> node_on_b_side;   // indexed like network.nodes
  std::vector<LegRef> cut_boundary;   // boundary legs crossed
  std::vector<int> cut_edges;         // indices into network.edges
};

/// Exact minimisation over all node side assignments.
CutWitness min_cut(const TensorNetwork& network, const RegionCut& cut,
                   CutObjective objective);

struct EntropyReport {
  std::string input;
  int s_b = 0;  // 1-based arc start when the cut is {s_b..boundary_size}
  std::vector<int> b;
  int entropy_units = 0;
  double entropy_bits = 0.0;
  int min_gamma = 0;
  int min_gamma_plus_p = 0;
  double product_bound_bits = 0.0;
  double general_bound_bits = 0.0;
  bool saturated = false;
};

EntropyReport rt_check(const TensorNetwork& network, InputFamily input,
                       const RegionCut& cut);

/// Reports for B = {s_b..boundary_size} over the requested range of s_b.
std::vector<EntropyReport> entropy_scan(const TensorNetwork& network,
                                        const std::vector<InputFamily>& inputs,
                                        int s_b_min, int s_b_max);

std::string entropy_scan_csv(const std::vector<EntropyReport>& reports);

}  // namespace amekit
