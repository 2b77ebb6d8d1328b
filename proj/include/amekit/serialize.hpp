#pragma once

#include <string>
#include <string_view>

#include "amekit/ame_codes.hpp"
#include "amekit/entropy.hpp"
#include "amekit/network.hpp"
#include "amekit/tableau.hpp"

namespace amekit {

// Table text format: a `d=<p> n=<N>` header, then one Pauli string per line
// with an optional `# role` suffix (stabilizer, logical_X(j), logical_Z(j)
// with 1-based j, or encoded_input). Adjacency files share the header and
// carry N integer rows instead.

std::string render_table(const StabilizerTable& table);
StabilizerTable parse_table(std::string_view text);

std::string render_adjacency(const AdjacencyMatrix& a);
AdjacencyMatrix parse_adjacency(std::string_view text);

/// Accepts either format; adjacency input is turned into its graph state.
StabilizerTable parse_state_file(std::string_view text);

std::string render_code(const CodeSpec& code);
CodeSpec parse_code(std::string_view text);

std::string table_to_json(const StabilizerTable& table);
std::string code_to_json(const CodeSpec& code);
std::string reports_to_json(const std::vector<EntropyReport>& reports);
std::string reports_to_text(const std::vector<EntropyReport>& reports);

std::string network_to_json(const TensorNetwork& network);
TensorNetwork parse_network_json(std::string_view text);

}  // namespace amekit
