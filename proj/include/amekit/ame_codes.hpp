#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "amekit/tableau.hpp"

namespace amekit {

/// Weighted-graph adjacency matrix over Z_d: symmetric with zero diagonal.
struct AdjacencyMatrix {
  int dim = 2;
  std::vector<std::vector<int>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  void validate() const;
};

/// Graph-state generators g_i = X_i prod_j Z_j^{A_ij}.
StabilizerTable graph_state(const AdjacencyMatrix& a);

/// True iff every reduction to floor(N/2) qudits is maximally mixed; checking
/// that size suffices for all smaller ones.
bool is_ame(const StabilizerTable& table);

/// A bipartition witnessing failure (the non-maximally-mixed B), if any.
std::optional<std::vector<int>> ame_witness(const StabilizerTable& table);

/// Independence of the rows {A_i / K}_{i in K} with the K columns removed.
bool truncated_independence(const AdjacencyMatrix& a, const std::vector<int>& k);

/// Stabilizer generators and logical pairs of a code carved out of an AME
/// state by designating output qudits. symplectic_product(Z_L, X_L) = 1 for
/// every pair; logicals commute with everything else.
struct CodeSpec {
  int dim = 2;
  int n_physical = 0;
  int k_logical = 0;
  std::vector<PauliOperator> stabilizer_gens;
  std::vector<std::pair<PauliOperator, PauliOperator>> logical_pairs;  // (X_L, Z_L)
  std::vector<int> column_permutation;  // result position -> source qudit

  void validate() const;
  /// Gens plus tagged logical rows as one table on the physical qudits.
  StabilizerTable as_table() const;
};

/// Localises the generator list at the output qudits (one X-acting and one
/// Z-acting row per output qudit, everything else trivial there), truncates,
/// and pairs the logicals. `output_qudits` is an ordered set; its order fixes
/// the logical slot numbering. Fails when the input is not maximally mixed on
/// the output set, i.e. not AME.
CodeSpec extract_code(const StabilizerTable& ame_table,
                      const std::vector<int>& output_qudits);

struct SearchBudget {
  std::uint64_t max_tries = 1u << 20;
  std::uint64_t seed = 1;
};

/// Searches adjacency matrices for a graph state passing is_ame; exhaustive
/// when the space fits in the budget, seeded random sampling otherwise.
std::optional<AdjacencyMatrix> find_small_ame(int dim, int n_qudits,
                                              const SearchBudget& budget = {});

}  // namespace amekit
