#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "amekit.h"

namespace {

const char* kAme6 =
    "d=2 n=6\nXZZX11\n1XZZX1\nX1XZZ1\nZX1XZ1\nXXXXXX\nZZZZZZ\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  amekit_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("table parse / render round trip") {
  amekit_table* t = nullptr;
  REQUIRE(amekit_table_parse(kAme6, &t) == AMEKIT_OK);
  int dim = 0, n = 0;
  CHECK(amekit_table_shape(t, &dim, &n) == AMEKIT_OK);
  CHECK(dim == 2);
  CHECK(n == 6);
  char* text = nullptr;
  REQUIRE(amekit_table_render(t, AMEKIT_FORMAT_TEXT, &text) == AMEKIT_OK);
  CHECK(take(text) == kAme6);
  amekit_table_free(t);
}

TEST_CASE("errors surface as status codes with messages") {
  amekit_table* t = nullptr;
  CHECK(amekit_table_parse("", &t) == AMEKIT_ERR_PARSE);
  CHECK(std::strlen(amekit_last_error()) > 0);
  CHECK(amekit_table_parse(nullptr, &t) == AMEKIT_ERR_INVALID_ARGUMENT);
  CHECK(amekit_table_parse("d=2 n=1\nX\nZ\n", &t) ==
        AMEKIT_ERR_INVALID_ARGUMENT);

  amekit_network* net = nullptr;
  CHECK(amekit_network_build(3, &net) == AMEKIT_ERR_UNSUPPORTED);
}

TEST_CASE("is_ame with witness") {
  amekit_table* t = nullptr;
  REQUIRE(amekit_table_parse(kAme6, &t) == AMEKIT_OK);
  int yes = 0;
  char* witness = nullptr;
  CHECK(amekit_is_ame(t, &yes, &witness) == AMEKIT_OK);
  CHECK(yes == 1);
  CHECK(witness == nullptr);
  amekit_table_free(t);

  REQUIRE(amekit_table_parse("d=2 n=4\nXXXX\nZZ11\n1ZZ1\n11ZZ\n", &t) ==
          AMEKIT_OK);
  CHECK(amekit_is_ame(t, &yes, &witness) == AMEKIT_OK);
  CHECK(yes == 0);
  std::string w = take(witness);
  CHECK_FALSE(w.empty());
  amekit_table_free(t);
}

TEST_CASE("extraction through the C surface") {
  amekit_table* t = nullptr;
  REQUIRE(amekit_table_parse(kAme6, &t) == AMEKIT_OK);
  int k[] = {6};
  amekit_code* code = nullptr;
  REQUIRE(amekit_extract_code(t, k, 1, &code) == AMEKIT_OK);
  char* text = nullptr;
  REQUIRE(amekit_code_render(code, AMEKIT_FORMAT_TEXT, &text) == AMEKIT_OK);
  std::string rendered = take(text);
  CHECK(rendered.find("logical_X(1)") != std::string::npos);
  CHECK(rendered.find("logical_Z(1)") != std::string::npos);
  amekit_code_free(code);

  int bad[] = {6, 5, 4, 3};
  CHECK(amekit_extract_code(t, bad, 4, &code) == AMEKIT_ERR_INVALID_ARGUMENT);
  amekit_table_free(t);
}

TEST_CASE("swap through the C surface") {
  amekit_table* bell = nullptr;
  REQUIRE(amekit_table_parse("d=2 n=2\nXX\nZZ\n", &bell) == AMEKIT_OK);
  amekit_table* right = nullptr;
  REQUIRE(amekit_table_parse(kAme6, &right) == AMEKIT_OK);
  int pairs[] = {2, 6};
  amekit_table* out = nullptr;
  REQUIRE(amekit_entanglement_swap(bell, right, pairs, 1, 0, 1, &out) ==
          AMEKIT_OK);
  int dim = 0, n = 0;
  CHECK(amekit_table_shape(out, &dim, &n) == AMEKIT_OK);
  CHECK(n == 6);
  amekit_table_free(out);

  // a non-AME right state is rejected
  amekit_table* ghz4 = nullptr;
  REQUIRE(amekit_table_parse("d=2 n=4\nXXXX\nZZ11\n1ZZ1\n11ZZ\n", &ghz4) ==
          AMEKIT_OK);
  int pair14[] = {1, 4};
  CHECK(amekit_entanglement_swap(bell, ghz4, pair14, 1, 0, 1, &out) ==
        AMEKIT_ERR_NOT_AME);
  amekit_table_free(ghz4);
  amekit_table_free(bell);
  amekit_table_free(right);
}

TEST_CASE("network, boundary state, spread and entropy") {
  amekit_network* net = nullptr;
  REQUIRE(amekit_network_build(2, &net) == AMEKIT_OK);
  int dim = 0, boundary = 0, logical = 0;
  CHECK(amekit_network_shape(net, &dim, &boundary, &logical) == AMEKIT_OK);
  CHECK(boundary == 20);
  CHECK(logical == 6);

  amekit_table* input = nullptr;
  REQUIRE(amekit_input_family("ame", &input) == AMEKIT_OK);
  amekit_table* state = nullptr;
  REQUIRE(amekit_network_boundary_state(net, input, &state) == AMEKIT_OK);
  int b[] = {18, 19, 20};
  double bits = 0.0;
  CHECK(amekit_stabilizer_entropy(state, b, 3, &bits) == AMEKIT_OK);
  CHECK(bits == doctest::Approx(3.0));

  char* spread = nullptr;
  REQUIRE(amekit_spread(net, 6, "X", &spread) == AMEKIT_OK);
  std::string op = take(spread);
  CHECK(op.size() >= 20);
  CHECK(amekit_spread(net, 7, "X", &spread) == AMEKIT_ERR_INVALID_ARGUMENT);

  char* csv = nullptr;
  REQUIRE(amekit_entropy_scan(net, "ame,product", 2, 20, AMEKIT_FORMAT_CSV,
                              &csv) == AMEKIT_OK);
  std::string table = take(csv);
  CHECK(table.rfind("input,s_B,entropy_bits", 0) == 0);
  CHECK(amekit_entropy_scan(net, "nope", 2, 20, AMEKIT_FORMAT_CSV, &csv) ==
        AMEKIT_ERR_INVALID_ARGUMENT);

  // round trip the network description
  char* json = nullptr;
  REQUIRE(amekit_network_render(net, &json) == AMEKIT_OK);
  std::string jtext = take(json);
  amekit_network* again = nullptr;
  REQUIRE(amekit_network_parse(jtext.c_str(), &again) == AMEKIT_OK);
  amekit_code* code = nullptr;
  REQUIRE(amekit_network_code(again, &code) == AMEKIT_OK);
  amekit_code_free(code);
  amekit_network_free(again);

  amekit_table_free(state);
  amekit_table_free(input);
  amekit_network_free(net);
}

TEST_CASE("state parse accepts adjacency input") {
  amekit_table* t = nullptr;
  REQUIRE(amekit_state_parse("d=2 n=3\n0 1 1\n1 0 1\n1 1 0\n", &t) == AMEKIT_OK);
  int dim = 0, n = 0;
  CHECK(amekit_table_shape(t, &dim, &n) == AMEKIT_OK);
  CHECK(n == 3);
  int yes = 0;
  CHECK(amekit_is_ame(t, &yes, nullptr) == AMEKIT_OK);
  CHECK(yes == 1);
  amekit_table_free(t);
}
