#include "amekit/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <sstream>

namespace amekit {

namespace {

using nlohmann::json;

struct Header {
  int dim = 0;
  int n = 0;
};

std::string strip(const std::string& line) {
  size_t a = line.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = line.find_last_not_of(" \t\r");
  return line.substr(a, b - a + 1);
}

Header parse_header(const std::string& line) {
  Header h;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind("d=", 0) == 0) h.dim = std::stoi(tok.substr(2));
    else if (tok.rfind("n=", 0) == 0) h.n = std::stoi(tok.substr(2));
    else fail(ErrorKind::Parse, "unexpected header token: " + tok);
  }
  if (h.dim <= 0 || h.n <= 0) {
    fail(ErrorKind::Parse, "header must provide d=<p> and n=<N>");
  }
  return h;
}

std::string role_suffix(const TableRow& row) {
  switch (row.role) {
    case RowRole::Stabilizer: return "";
    case RowRole::LogicalX:
      return "  # logical_X(" + std::to_string(row.logical_index + 1) + ")";
    case RowRole::LogicalZ:
      return "  # logical_Z(" + std::to_string(row.logical_index + 1) + ")";
    case RowRole::EncodedInput: return "  # encoded_input";
  }
  return "";
}

TableRow parse_row(const std::string& body, const std::string& role_text,
                   int dim, int n) {
  TableRow row{parse_pauli(body, dim, n), RowRole::Stabilizer, 0};
  std::string role = strip(role_text);
  if (role.empty() || role == "stabilizer") return row;
  if (role == "encoded_input") {
    row.role = RowRole::EncodedInput;
    return row;
  }
  for (auto [name, tag] : {std::pair{std::string("logical_X("), RowRole::LogicalX},
                           std::pair{std::string("logical_Z("), RowRole::LogicalZ}}) {
    if (role.rfind(name, 0) == 0 && role.back() == ')') {
      row.role = tag;
      row.logical_index =
          std::stoi(role.substr(name.size(), role.size() - name.size() - 1)) - 1;
      if (row.logical_index < 0) fail(ErrorKind::Parse, "bad logical index");
      return row;
    }
  }
  fail(ErrorKind::Parse, "unknown row role: " + role);
}

std::vector<std::string> content_lines(std::string_view text,
                                       std::vector<std::string>* roles) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    std::string role;
    size_t hash = s.find('#');
    if (hash != std::string::npos) {
      role = strip(s.substr(hash + 1));
      s = strip(s.substr(0, hash));
    }
    lines.push_back(s);
    if (roles) roles->push_back(role);
  }
  return lines;
}

bool all_integer_rows(const std::vector<std::string>& lines, int n) {
  if (static_cast<int>(lines.size()) != n) return false;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string tok;
    int count = 0;
    while (in >> tok) {
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      }
      ++count;
    }
    if (count != n) return false;
  }
  return true;
}

}  // namespace

std::string render_table(const StabilizerTable& table) {
  std::ostringstream out;
  out << "d=" << table.dim() << " n=" << table.n_qudits() << "\n";
  for (const auto& row : table.rows()) {
    out << render_pauli(row.op) << role_suffix(row) << "\n";
  }
  return out.str();
}

StabilizerTable parse_table(std::string_view text) {
  std::vector<std::string> roles;
  std::vector<std::string> lines = content_lines(text, &roles);
  if (lines.empty()) fail(ErrorKind::Parse, "empty table file");
  Header h = parse_header(lines.front());
  std::vector<TableRow> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    rows.push_back(parse_row(lines[i], roles[i], h.dim, h.n));
  }
  return StabilizerTable(h.dim, h.n, std::move(rows));
}

std::string render_adjacency(const AdjacencyMatrix& a) {
  std::ostringstream out;
  out << "d=" << a.dim << " n=" << a.size() << "\n";
  for (const auto& row : a.entries) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << "\n";
  }
  return out.str();
}

AdjacencyMatrix parse_adjacency(std::string_view text) {
  std::vector<std::string> lines = content_lines(text, nullptr);
  if (lines.empty()) fail(ErrorKind::Parse, "empty adjacency file");
  Header h = parse_header(lines.front());
  if (static_cast<int>(lines.size()) != h.n + 1) {
    fail(ErrorKind::Parse, "adjacency needs exactly n rows");
  }
  AdjacencyMatrix a;
  a.dim = h.dim;
  for (int i = 0; i < h.n; ++i) {
    std::istringstream in(lines[i + 1]);
    std::vector<int> row;
    int v;
    while (in >> v) row.push_back(v);
    if (static_cast<int>(row.size()) != h.n) {
      fail(ErrorKind::Parse, "adjacency row has the wrong length");
    }
    a.entries.push_back(std::move(row));
  }
  a.validate();
  return a;
}

StabilizerTable parse_state_file(std::string_view text) {
  std::vector<std::string> lines = content_lines(text, nullptr);
  if (lines.empty()) fail(ErrorKind::Parse, "empty state file");
  Header h = parse_header(lines.front());
  std::vector<std::string> body(lines.begin() + 1, lines.end());
  if (all_integer_rows(body, h.n)) {
    return graph_state(parse_adjacency(text));
  }
  return parse_table(text);
}

std::string render_code(const CodeSpec& code) {
  std::ostringstream out;
  out << "d=" << code.dim << " n=" << code.n_physical << "\n";
  out << "# columns:";
  for (int q : code.column_permutation) out << ' ' << q + 1;
  out << "\n";
  StabilizerTable t = code.as_table();
  for (const auto& row : t.rows()) {
    out << render_pauli(row.op) << role_suffix(row) << "\n";
  }
  return out.str();
}

CodeSpec parse_code(std::string_view text) {
  StabilizerTable t = parse_table(text);
  CodeSpec code;
  code.dim = t.dim();
  code.n_physical = t.n_qudits();

  // optional "# columns:" comment recording the extraction reordering
  std::vector<int> columns;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::string s = strip(line);
      if (s.rfind("# columns:", 0) == 0) {
        std::istringstream cols(s.substr(10));
        int v;
        while (cols >> v) columns.push_back(v - 1);
        break;
      }
    }
  }
  int max_index = -1;
  for (const auto& row : t.rows()) {
    if (row.role == RowRole::LogicalX || row.role == RowRole::LogicalZ) {
      max_index = std::max(max_index, row.logical_index);
    }
  }
  code.k_logical = max_index + 1;
  code.logical_pairs.assign(code.k_logical,
                            {PauliOperator::identity(code.dim, code.n_physical),
                             PauliOperator::identity(code.dim, code.n_physical)});
  for (const auto& row : t.rows()) {
    switch (row.role) {
      case RowRole::Stabilizer:
      case RowRole::EncodedInput:
        code.stabilizer_gens.push_back(row.op);
        break;
      case RowRole::LogicalX:
        code.logical_pairs[row.logical_index].first = row.op;
        break;
      case RowRole::LogicalZ:
        code.logical_pairs[row.logical_index].second = row.op;
        break;
    }
  }
  if (!columns.empty()) {
    code.column_permutation = std::move(columns);
  } else {
    code.column_permutation.resize(code.n_physical);
    for (int i = 0; i < code.n_physical; ++i) code.column_permutation[i] = i;
  }
  code.validate();
  return code;
}

namespace {

json table_json(const StabilizerTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows()) {
    json r;
    r["op"] = render_pauli(row.op);
    switch (row.role) {
      case RowRole::Stabilizer: r["role"] = "stabilizer"; break;
      case RowRole::EncodedInput: r["role"] = "encoded_input"; break;
      case RowRole::LogicalX:
        r["role"] = "logical_X";
        r["index"] = row.logical_index + 1;
        break;
      case RowRole::LogicalZ:
        r["role"] = "logical_Z";
        r["index"] = row.logical_index + 1;
        break;
    }
    rows.push_back(std::move(r));
  }
  return json{{"dim", table.dim()}, {"n_qudits", table.n_qudits()}, {"rows", rows}};
}

}  // namespace

std::string table_to_json(const StabilizerTable& table) {
  return table_json(table).dump(2) + "\n";
}

std::string code_to_json(const CodeSpec& code) {
  json j = table_json(code.as_table());
  json cols = json::array();
  for (int q : code.column_permutation) cols.push_back(q + 1);
  j["columns"] = std::move(cols);
  j["k_logical"] = code.k_logical;
  return j.dump(2) + "\n";
}

std::string reports_to_json(const std::vector<EntropyReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back(json{{"input", r.input},
                       {"s_B", r.s_b},
                       {"entropy_bits", r.entropy_bits},
                       {"min_gamma", r.min_gamma},
                       {"min_gamma_plus_P", r.min_gamma_plus_p},
                       {"bound_bits", r.general_bound_bits},
                       {"saturated", r.saturated}});
  }
  return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<EntropyReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.input << " s_B=" << r.s_b << " entropy=" << r.entropy_bits
        << " min|gamma|=" << r.min_gamma
        << " min(|gamma|+|P|)=" << r.min_gamma_plus_p
        << " bound=" << r.general_bound_bits
        << (r.saturated ? " saturated" : "") << "\n";
  }
  return out.str();
}

std::string network_to_json(const TensorNetwork& network) {
  json nodes = json::array();
  for (const auto& node : network.nodes) {
    json rows = json::array();
    for (const auto& row : node.template_table.rows()) {
      rows.push_back(render_pauli(row.op));
    }
    nodes.push_back(json{{"id", node.id}, {"rows", rows}});
  }
  auto legs = [](const std::vector<LegRef>& refs) {
    json arr = json::array();
    for (const auto& ref : refs) arr.push_back(json::array({ref.node, ref.leg}));
    return arr;
  };
  json edges = json::array();
  for (const auto& e : network.edges) {
    edges.push_back(json{{"from", json::array({e.from.node, e.from.leg})},
                         {"to", json::array({e.to.node, e.to.leg})}});
  }
  json j{{"dim", network.dim},
         {"nodes", nodes},
         {"edges", edges},
         {"logical_legs", legs(network.logical_legs)},
         {"boundary_legs", legs(network.boundary_legs)}};
  return j.dump(2) + "\n";
}

TensorNetwork parse_network_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("network JSON: ") + e.what());
  }
  TensorNetwork net;
  try {
    net.dim = j.at("dim").get<int>();
    for (const auto& nj : j.at("nodes")) {
      std::vector<PauliOperator> rows;
      for (const auto& rj : nj.at("rows")) {
        rows.push_back(parse_pauli(rj.get<std::string>(), net.dim));
      }
      if (rows.empty()) fail(ErrorKind::Parse, "node without rows");
      int n = rows.front().n_qudits();
      net.nodes.push_back({nj.at("id").get<int>(),
                           StabilizerTable::from_ops(net.dim, n, std::move(rows))});
    }
    auto leg = [](const json& lj) {
      return LegRef{lj.at(0).get<int>(), lj.at(1).get<int>()};
    };
    for (const auto& ej : j.at("edges")) {
      net.edges.push_back({leg(ej.at("from")), leg(ej.at("to"))});
    }
    for (const auto& lj : j.at("logical_legs")) net.logical_legs.push_back(leg(lj));
    for (const auto& lj : j.at("boundary_legs")) net.boundary_legs.push_back(leg(lj));
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("network JSON: ") + e.what());
  }
  net.validate();
  return net;
}

}  // namespace amekit
