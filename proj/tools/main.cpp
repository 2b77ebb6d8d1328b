// amekit command line: code extraction, AME verification, entanglement
// swapping, pentagon networks, entropy scans and operator spread.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amekit.h"

namespace {

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(amekit_status status) {
  throw CliError{static_cast<int>(status), amekit_last_error()};
}

void check(amekit_status status) {
  if (status != AMEKIT_OK) die(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CliError{static_cast<int>(AMEKIT_ERR_INVALID_ARGUMENT),
                   "cannot open " + path};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw CliError{static_cast<int>(AMEKIT_ERR_INVALID_ARGUMENT),
                   "cannot write " + path};
  }
  out << content;
}

std::string take_string(char* s) {
  std::string out = s == nullptr ? "" : s;
  amekit_string_free(s);
  return out;
}

amekit_format format_of(const std::string& name) {
  if (name == "text") return AMEKIT_FORMAT_TEXT;
  if (name == "json") return AMEKIT_FORMAT_JSON;
  if (name == "csv") return AMEKIT_FORMAT_CSV;
  throw CliError{static_cast<int>(AMEKIT_ERR_INVALID_ARGUMENT),
                 "unknown format " + name};
}

struct TableHandle {
  amekit_table* ptr = nullptr;
  ~TableHandle() { amekit_table_free(ptr); }
};
struct CodeHandle {
  amekit_code* ptr = nullptr;
  ~CodeHandle() { amekit_code_free(ptr); }
};
struct NetworkHandle {
  amekit_network* ptr = nullptr;
  ~NetworkHandle() { amekit_network_free(ptr); }
};

NetworkHandle load_network(int layers, const std::string& file) {
  NetworkHandle net;
  if (!file.empty()) {
    check(amekit_network_parse(read_file(file).c_str(), &net.ptr));
  } else {
    check(amekit_network_build(layers, &net.ptr));
  }
  return net;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabiliser toolkit for AME-state codes and pentagon networks"};
  app.require_subcommand(1);

  std::string output;
  std::string format = "text";
  std::string outcome_policy = "postselect-plus";
  std::uint64_t seed = 1;
  int dim = 2;
  app.add_option("--output", output, "output path (default stdout)");
  app.add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--outcome-policy", outcome_policy,
                 "postselect-plus or sample")
      ->check(CLI::IsMember({"postselect-plus", "sample"}));
  app.add_option("--seed", seed, "RNG seed for sampling modes");
  app.add_option("--dim", dim, "qudit dimension for inline operators");

  auto* extract = app.add_subcommand("extract", "derive a code from an AME state");
  std::string extract_input;
  int extract_m = 1;
  std::vector<int> extract_k;
  extract->add_option("--input", extract_input, "state file")->required();
  extract->add_option("--m", extract_m, "number of logical qudits");
  extract->add_option("--k", extract_k,
                      "1-based output qudits (default: last m, descending)");

  auto* verify = app.add_subcommand("verify-ame", "check the AME criteria");
  std::string verify_input;
  verify->add_option("--input", verify_input, "state or adjacency file")->required();

  auto* swap = app.add_subcommand("swap", "entanglement swapping");
  std::string swap_left, swap_right, swap_pairs;
  swap->add_option("--left", swap_left, "left state file")->required();
  swap->add_option("--right", swap_right, "right (AME) state file")->required();
  swap->add_option("--pairs", swap_pairs, "pairs like 2:1,3:4 (left:right, 1-based)")
      ->required();

  auto* network = app.add_subcommand("network", "boundary code or state");
  int net_layers = 2;
  std::string net_input_family, net_file;
  network->add_option("--layers", net_layers, "1 or 2");
  network->add_option("--input-family", net_input_family,
                      "ame, ghz, singlet or product (omit for the bare code)");
  network->add_option("--network-file", net_file, "network JSON instead of --layers");

  auto* scan = app.add_subcommand("entropy-scan", "boundary entropies per cut");
  int scan_layers = 2;
  std::string scan_inputs = "ame,ghz,singlet,product";
  int sb_min = 2, sb_max = 0;
  std::string scan_file;
  scan->add_option("--layers", scan_layers, "1 or 2");
  scan->add_option("--inputs", scan_inputs, "comma-separated input families");
  scan->add_option("--sb-min", sb_min, "first arc start (1-based)");
  scan->add_option("--sb-max", sb_max, "last arc start (default: boundary size)");
  scan->add_option("--network-file", scan_file, "network JSON instead of --layers");

  auto* spread = app.add_subcommand("spread", "boundary image of a slot operator");
  int spread_layers = 1;
  int spread_slot = 1;
  std::string spread_op = "X";
  std::string spread_file;
  spread->add_option("--layers", spread_layers, "1 or 2");
  spread->add_option("--slot", spread_slot, "1-based logical slot");
  spread->add_option("--op", spread_op, "single-qudit Pauli, e.g. X or x1z2");
  spread->add_option("--network-file", spread_file, "network JSON instead of --layers");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract) {
      TableHandle state;
      check(amekit_state_parse(read_file(extract_input).c_str(), &state.ptr));
      std::vector<int> k = extract_k;
      if (k.empty()) {
        int n = 0;
        check(amekit_table_shape(state.ptr, nullptr, &n));
        for (int i = 0; i < extract_m; ++i) k.push_back(n - i);
      }
      CodeHandle code;
      check(amekit_extract_code(state.ptr, k.data(), k.size(), &code.ptr));
      char* rendered = nullptr;
      check(amekit_code_render(code.ptr, format_of(format), &rendered));
      write_output(output, take_string(rendered));
    } else if (*verify) {
      TableHandle state;
      check(amekit_state_parse(read_file(verify_input).c_str(), &state.ptr));
      int yes = 0;
      char* witness = nullptr;
      check(amekit_is_ame(state.ptr, &yes, &witness));
      std::string w = take_string(witness);
      std::ostringstream out;
      if (format == "json") {
        out << "{\"ame\": " << (yes ? "true" : "false");
        if (!yes) out << ", \"witness\": \"" << w << "\"";
        out << "}\n";
      } else {
        out << "AME: " << (yes ? "yes" : "no") << "\n";
        if (!yes) out << "witness B = { " << w << " }\n";
      }
      write_output(output, out.str());
      if (!yes) return 1;
    } else if (*swap) {
      TableHandle left, right;
      check(amekit_table_parse(read_file(swap_left).c_str(), &left.ptr));
      check(amekit_table_parse(read_file(swap_right).c_str(), &right.ptr));
      std::vector<int> pairs;
      std::istringstream in(swap_pairs);
      std::string item;
      while (std::getline(in, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos) {
          throw CliError{static_cast<int>(AMEKIT_ERR_INVALID_ARGUMENT),
                         "pairs must look like 2:1,3:4"};
        }
        pairs.push_back(std::stoi(item.substr(0, colon)));
        pairs.push_back(std::stoi(item.substr(colon + 1)));
      }
      TableHandle result;
      check(amekit_entanglement_swap(left.ptr, right.ptr, pairs.data(),
                                     pairs.size() / 2,
                                     outcome_policy == "sample" ? 1 : 0, seed,
                                     &result.ptr));
      char* rendered = nullptr;
      check(amekit_table_render(result.ptr, format_of(format), &rendered));
      write_output(output, take_string(rendered));
    } else if (*network) {
      NetworkHandle net = load_network(net_layers, net_file);
      char* rendered = nullptr;
      if (net_input_family.empty() || net_input_family == "none") {
        CodeHandle code;
        check(amekit_network_code(net.ptr, &code.ptr));
        check(amekit_code_render(code.ptr, format_of(format), &rendered));
      } else {
        TableHandle input, boundary;
        check(amekit_input_family(net_input_family.c_str(), &input.ptr));
        check(amekit_network_boundary_state(net.ptr, input.ptr, &boundary.ptr));
        check(amekit_table_render(boundary.ptr, format_of(format), &rendered));
      }
      write_output(output, take_string(rendered));
    } else if (*scan) {
      NetworkHandle net = load_network(scan_layers, scan_file);
      if (sb_max == 0) {
        check(amekit_network_shape(net.ptr, nullptr, &sb_max, nullptr));
      }
      amekit_format fmt = format == "text" ? AMEKIT_FORMAT_CSV : format_of(format);
      char* rendered = nullptr;
      check(amekit_entropy_scan(net.ptr, scan_inputs.c_str(), sb_min, sb_max,
                                fmt, &rendered));
      write_output(output, take_string(rendered));
    } else if (*spread) {
      NetworkHandle net = load_network(spread_layers, spread_file);
      char* rendered = nullptr;
      check(amekit_spread(net.ptr, spread_slot, spread_op.c_str(), &rendered));
      write_output(output, take_string(rendered) + "\n");
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code == 0 ? 1 : e.code;
  }
  return 0;
}
