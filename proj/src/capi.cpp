#include "amekit.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "amekit/entropy.hpp"
#include "amekit/network.hpp"
#include "amekit/serialize.hpp"

struct amekit_table {
  amekit::StabilizerTable value;
};
struct amekit_code {
  amekit::CodeSpec value;
};
struct amekit_network {
  amekit::TensorNetwork value;
};

namespace {

thread_local std::string g_last_error;

amekit_status status_of(const amekit::Error& e) {
  using amekit::ErrorKind;
  switch (e.kind()) {
    case ErrorKind::InvalidArgument: return AMEKIT_ERR_INVALID_ARGUMENT;
    case ErrorKind::Parse: return AMEKIT_ERR_PARSE;
    case ErrorKind::Shape: return AMEKIT_ERR_SHAPE;
    case ErrorKind::Contradiction: return AMEKIT_ERR_CONTRADICTION;
    case ErrorKind::Entangled: return AMEKIT_ERR_ENTANGLED;
    case ErrorKind::NotAme: return AMEKIT_ERR_NOT_AME;
    case ErrorKind::Unsupported: return AMEKIT_ERR_UNSUPPORTED;
    case ErrorKind::Limit: return AMEKIT_ERR_LIMIT;
  }
  return AMEKIT_ERR_INTERNAL;
}

template <typename Fn>
amekit_status guarded(Fn&& fn) {
  try {
    fn();
    return AMEKIT_OK;
  } catch (const amekit::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AMEKIT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return AMEKIT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> to_zero_based(const int* values, size_t count,
                               const char* what) {
  if (values == nullptr && count > 0) {
    amekit::fail(amekit::ErrorKind::InvalidArgument,
                 std::string(what) + " pointer is null");
  }
  std::vector<int> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(values[i] - 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) {
    amekit::fail(amekit::ErrorKind::InvalidArgument,
                 std::string(what) + " must not be null");
  }
}

std::vector<amekit::InputFamily> parse_families(const char* families) {
  require(families != nullptr, "families");
  std::vector<amekit::InputFamily> out;
  std::istringstream in(families);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) out.push_back(amekit::input_family_from_string(name));
  }
  if (out.empty()) {
    amekit::fail(amekit::ErrorKind::InvalidArgument, "no input families given");
  }
  return out;
}

}  // namespace

extern "C" {

const char* amekit_last_error(void) { return g_last_error.c_str(); }

void amekit_string_free(char* s) { std::free(s); }
void amekit_table_free(amekit_table* t) { delete t; }
void amekit_code_free(amekit_code* c) { delete c; }
void amekit_network_free(amekit_network* n) { delete n; }

amekit_status amekit_table_parse(const char* text, amekit_table** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "argument");
    *out = new amekit_table{amekit::parse_table(text)};
  });
}

amekit_status amekit_state_parse(const char* text, amekit_table** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "argument");
    *out = new amekit_table{amekit::parse_state_file(text)};
  });
}

amekit_status amekit_table_render(const amekit_table* t, amekit_format fmt,
                                  char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "argument");
    switch (fmt) {
      case AMEKIT_FORMAT_TEXT:
        *out = dup_string(amekit::render_table(t->value));
        return;
      case AMEKIT_FORMAT_JSON:
        *out = dup_string(amekit::table_to_json(t->value));
        return;
      default:
        amekit::fail(amekit::ErrorKind::Unsupported,
                     "tables render as text or json");
    }
  });
}

amekit_status amekit_table_shape(const amekit_table* t, int* dim, int* n_qudits) {
  return guarded([&] {
    require(t != nullptr, "table");
    if (dim != nullptr) *dim = t->value.dim();
    if (n_qudits != nullptr) *n_qudits = t->value.n_qudits();
  });
}

amekit_status amekit_is_ame(const amekit_table* t, int* result, char** witness) {
  return guarded([&] {
    require(t != nullptr && result != nullptr, "argument");
    auto w = amekit::ame_witness(t->value);
    *result = w.has_value() ? 0 : 1;
    if (witness != nullptr) {
      *witness = nullptr;
      if (w.has_value()) {
        std::ostringstream s;
        for (size_t i = 0; i < w->size(); ++i) {
          if (i) s << ' ';
          s << (*w)[i] + 1;
        }
        *witness = dup_string(s.str());
      }
    }
  });
}

amekit_status amekit_extract_code(const amekit_table* t,
                                  const int* output_qudits, size_t m,
                                  amekit_code** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "argument");
    auto k = to_zero_based(output_qudits, m, "output_qudits");
    *out = new amekit_code{amekit::extract_code(t->value, k)};
  });
}

amekit_status amekit_code_render(const amekit_code* c, amekit_format fmt,
                                 char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    switch (fmt) {
      case AMEKIT_FORMAT_TEXT:
        *out = dup_string(amekit::render_code(c->value));
        return;
      case AMEKIT_FORMAT_JSON:
        *out = dup_string(amekit::code_to_json(c->value));
        return;
      default:
        amekit::fail(amekit::ErrorKind::Unsupported,
                     "codes render as text or json");
    }
  });
}

amekit_status amekit_entanglement_swap(const amekit_table* left,
                                       const amekit_table* right,
                                       const int* pairs, size_t n_pairs,
                                       int sample, uint64_t seed,
                                       amekit_table** out) {
  return guarded([&] {
    require(left != nullptr && right != nullptr && out != nullptr, "argument");
    require(pairs != nullptr, "pairs");
    amekit::SwapPlan plan{left->value, right->value, {}};
    for (size_t i = 0; i < n_pairs; ++i) {
      plan.pairs.emplace_back(pairs[2 * i] - 1, pairs[2 * i + 1] - 1);
    }
    amekit::SwapOptions options;
    std::mt19937_64 rng(seed);
    if (sample != 0) {
      options.sample = true;
      options.rng = &rng;
    }
    *out = new amekit_table{amekit::entanglement_swap(plan, options)};
  });
}

amekit_status amekit_network_build(int layers, amekit_network** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = new amekit_network{amekit::build_pentagon_network(layers)};
  });
}

amekit_status amekit_network_parse(const char* json_text, amekit_network** out) {
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "argument");
    *out = new amekit_network{amekit::parse_network_json(json_text)};
  });
}

amekit_status amekit_network_render(const amekit_network* n, char** out) {
  return guarded([&] {
    require(n != nullptr && out != nullptr, "argument");
    *out = dup_string(amekit::network_to_json(n->value));
  });
}

amekit_status amekit_network_shape(const amekit_network* n, int* dim,
                                   int* boundary_legs, int* logical_legs) {
  return guarded([&] {
    require(n != nullptr, "network");
    if (dim != nullptr) *dim = n->value.dim;
    if (boundary_legs != nullptr) *boundary_legs = n->value.boundary_size();
    if (logical_legs != nullptr) *logical_legs = n->value.logical_count();
  });
}

amekit_status amekit_network_code(const amekit_network* n, amekit_code** out) {
  return guarded([&] {
    require(n != nullptr && out != nullptr, "argument");
    *out = new amekit_code{amekit::contract(n->value)};
  });
}

amekit_status amekit_input_family(const char* name, amekit_table** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "argument");
    *out = new amekit_table{
        amekit::input_family(amekit::input_family_from_string(name))};
  });
}

amekit_status amekit_network_boundary_state(const amekit_network* n,
                                            const amekit_table* input,
                                            amekit_table** out) {
  return guarded([&] {
    require(n != nullptr && input != nullptr && out != nullptr, "argument");
    *out = new amekit_table{amekit::contract_with_input(n->value, input->value)};
  });
}

amekit_status amekit_spread(const amekit_network* n, int slot, const char* op,
                            char** out) {
  return guarded([&] {
    require(n != nullptr && op != nullptr && out != nullptr, "argument");
    amekit::PauliOperator parsed = amekit::parse_pauli(op, n->value.dim, 1);
    amekit::SpreadResult res =
        amekit::spread_operator(n->value, slot - 1, parsed);
    *out = dup_string(amekit::render_pauli(res.boundary_op));
  });
}

amekit_status amekit_stabilizer_entropy(const amekit_table* t, const int* b,
                                        size_t n_b, double* bits) {
  return guarded([&] {
    require(t != nullptr && bits != nullptr, "argument");
    auto region = to_zero_based(b, n_b, "b");
    *bits = amekit::stabilizer_entropy(t->value, region);
  });
}

amekit_status amekit_entropy_scan(const amekit_network* n, const char* families,
                                  int sb_min, int sb_max, amekit_format fmt,
                                  char** out) {
  return guarded([&] {
    require(n != nullptr && out != nullptr, "argument");
    auto reports =
        amekit::entropy_scan(n->value, parse_families(families), sb_min, sb_max);
    switch (fmt) {
      case AMEKIT_FORMAT_CSV:
        *out = dup_string(amekit::entropy_scan_csv(reports));
        return;
      case AMEKIT_FORMAT_JSON:
        *out = dup_string(amekit::reports_to_json(reports));
        return;
      case AMEKIT_FORMAT_TEXT:
        *out = dup_string(amekit::reports_to_text(reports));
        return;
    }
    amekit::fail(amekit::ErrorKind::Unsupported, "unknown format");
  });
}

}  // extern "C"
