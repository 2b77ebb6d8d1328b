#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "amekit/ame_codes.hpp"
#include "amekit/concatenation.hpp"

namespace amekit {

struct LegRef {
  int node = 0;
  int leg = 0;
  auto operator<=>(const LegRef&) const = default;
};

/// A directed contraction network of AME templates. Every template leg shows
/// up exactly once: as an edge endpoint, a logical input leg, or a boundary
/// leg. Edge directions point away from the origin and must form a DAG; at
/// each node the inputs (incoming edges plus logical legs) cannot outnumber
/// the outputs, so every node acts as an isometry.
struct TensorNetwork {
  struct Node {
    int id = 0;
    StabilizerTable template_table;
  };
  struct Edge {
    LegRef from;
    LegRef to;
  };

  int dim = 2;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<LegRef> logical_legs;   // slot order
  std::vector<LegRef> boundary_legs;  // cyclic order

  int boundary_size() const { return static_cast<int>(boundary_legs.size()); }
  int logical_count() const { return static_cast<int>(logical_legs.size()); }
  void validate() const;
};

/// The 6-qubit AME generator list used as the pentagon template.
StabilizerTable ame6_state();

/// One pentagon (5 boundary legs, central logical leg), or the two-layer
/// tiling: a central pentagon whose five planar legs each feed an outer
/// pentagon, for 20 boundary legs and 6 logical slots with the centre last.
TensorNetwork build_pentagon_network(int layers);

/// Contracts the network in topological order, selecting each node's code
/// from its input/output leg counts, and returns the boundary code with one
/// logical pair per network input slot.
CodeSpec contract(const TensorNetwork& network);

/// Boundary state with the input state encoded into the logical slots.
StabilizerTable contract_with_input(const TensorNetwork& network,
                                    const StabilizerTable& input);

enum class InputFamily : int { Ame, Ghz, Singlet, Product };
InputFamily input_family_from_string(std::string_view name);
std::string to_string(InputFamily family);

/// The four 6-qubit input states used with the two-layer network.
StabilizerTable input_family(InputFamily family);

struct SpreadResult {
  PauliOperator boundary_op;
  CodeSpec boundary_code;  // spread operators are defined modulo its gens
};

/// Image of a single-slot operator on the boundary.
SpreadResult spread_operator(const TensorNetwork& network, int slot,
                             const PauliOperator& op);

}  // namespace amekit
