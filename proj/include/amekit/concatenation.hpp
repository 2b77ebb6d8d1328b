#pragma once

#include <random>
#include <utility>
#include <vector>

#include "amekit/ame_codes.hpp"
#include "amekit/tableau.hpp"

namespace amekit {

/// Entanglement swapping between an arbitrary left state and an AME right
/// state over disjoint qudit pairs.
struct SwapPlan {
  StabilizerTable left;
  StabilizerTable right;
  std::vector<std::pair<int, int>> pairs;  // (left qudit, right qudit)

  void validate() const;
};

struct SwapOptions {
  /// Per-pair (X-type, Z-type) outcome exponents; empty means all zero, the
  /// postselected "+1" convention.
  std::vector<std::pair<int, int>> outcomes;
  bool sample = false;
  std::mt19937_64* rng = nullptr;
};

/// Measures X otimes X and Z otimes Z^{-1} on every pair, then traces the
/// measured qudits out. Remaining qudits keep their original order, left
/// block first.
StabilizerTable entanglement_swap(const SwapPlan& plan,
                                  const SwapOptions& options = {});

/// Substitutes code logicals for the listed qudits of a table: the action
/// X^a Z^b on a consumed qudit becomes X_L^a Z_L^b on the code block, which is
/// appended after the surviving qudits; the code generators join the row list.
StabilizerTable encode_qudits(const StabilizerTable& table, const CodeSpec& code,
                              const std::vector<std::pair<int, int>>& qudit_to_slot);

/// Encodes an input state through the code: generators of the code first,
/// then the logical-substitution image of every input row. `embedding` maps
/// input qudit i to a logical slot (identity when empty); unmapped slots stay
/// unconstrained logical legs.
StabilizerTable encode_through(const CodeSpec& code, const StabilizerTable& input,
                               const std::vector<int>& embedding = {});

/// Logical-substitution image of an operator on the code's logical register,
/// defined modulo the stabilizer generators.
PauliOperator propagate_operator(const CodeSpec& code,
                                 const PauliOperator& logical_op);

}  // namespace amekit
