#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "amekit/concatenation.hpp"
#include "amekit/dense.hpp"
#include "helpers.hpp"

using namespace amekit;

namespace {

StabilizerTable from_strings(int dim, std::initializer_list<const char*> rows) {
  std::vector<PauliOperator> ops;
  int n = 0;
  for (const char* r : rows) {
    ops.push_back(parse_pauli(r, dim));
    n = ops.back().n_qudits();
  }
  return StabilizerTable::from_ops(dim, n, std::move(ops));
}

StabilizerTable ghz3() { return from_strings(2, {"XXX", "ZZ1", "1ZZ"}); }

// embeds op into a larger register at the given offset
PauliOperator embed(const PauliOperator& op, int n_total, int offset) {
  std::vector<int> x(n_total, 0), z(n_total, 0);
  for (int q = 0; q < op.n_qudits(); ++q) {
    x[q + offset] = op.x_exp(q);
    z[q + offset] = op.z_exp(q);
  }
  return PauliOperator(op.dim(), std::move(x), std::move(z), op.phase_exp());
}

// swap route vs substitution route over the same contracted register
void check_routes_agree(const StabilizerTable& left,
                        const StabilizerTable& right,
                        const std::vector<std::pair<int, int>>& pairs) {
  StabilizerTable swapped = entanglement_swap({left, right, pairs});

  std::vector<int> reg;
  for (auto [l, r] : pairs) reg.push_back(r);
  CodeSpec code = extract_code(right, reg);
  std::vector<std::pair<int, int>> map;
  for (size_t j = 0; j < pairs.size(); ++j) {
    map.emplace_back(pairs[j].first, static_cast<int>(j));
  }
  StabilizerTable encoded = encode_qudits(left, code, map);

  auto eq = group_equal(swapped, encoded);
  CHECK(eq.same_group);
  CHECK(eq.phases_match);
}

}  // namespace

TEST_CASE("swap plan validation") {
  auto bell = from_strings(2, {"XX", "ZZ"});
  auto plus2 = from_strings(2, {"X1", "1X"});
  SwapPlan bad{bell, plus2, {{1, 0}}};
  CHECK_THROWS_AS(bad.validate(), Error);  // right state is not AME
  SwapPlan dup{bell, ghz3(), {{1, 0}, {1, 2}}};
  CHECK_THROWS_AS(dup.validate(), Error);  // left qubit reused, bound broken
  SwapPlan toomany{ghz3(), ghz3(), {{0, 0}, {1, 1}}};
  CHECK_THROWS_AS(toomany.validate(), Error);  // above floor(N/2)
}

TEST_CASE("swapping two Bell pairs leaves a Bell pair on the outer qubits") {
  auto bell = from_strings(2, {"XX", "ZZ"});
  StabilizerTable out = entanglement_swap({bell, bell, {{1, 0}}});
  CHECK(out.n_qudits() == 2);
  auto eq = group_equal(out, bell);
  CHECK(eq.same_group);
  CHECK(eq.phases_match);
}

TEST_CASE("teleporting half a Bell pair into a GHZ state") {
  auto bell = from_strings(2, {"XX", "ZZ"});
  StabilizerTable out = entanglement_swap({bell, ghz3(), {{1, 0}}});
  auto eq = group_equal(out, ghz3());
  CHECK(eq.same_group);
  CHECK(eq.phases_match);
}

TEST_CASE("swapping |0> into the last qubit of the 6-qubit AME state") {
  auto zero = from_strings(2, {"Z"});
  auto ame6 = testutil::load_table("ame6.table");
  StabilizerTable out = entanglement_swap({zero, ame6, {{0, 5}}});
  CHECK(out.n_qudits() == 5);
  CHECK(out.row_count() == 5);

  // substitution route: the 1->5 code with the encoded |0| input
  CodeSpec code = extract_code(ame6, {5});
  StabilizerTable expected = encode_through(code, zero);
  auto eq = group_equal(out, expected);
  CHECK(eq.same_group);
  CHECK(eq.phases_match);

  // dense route: project the joint state onto the Bell pair of the measured
  // qubits and compare with the swap result
  std::vector<PauliOperator> joint_rows;
  joint_rows.push_back(embed(parse_pauli("Z", 2), 7, 0));
  for (const auto& r : ame6.rows()) joint_rows.push_back(embed(r.op, 7, 1));
  auto psi = dense_state_vector(StabilizerTable::from_ops(2, 7, joint_rows));

  PauliOperator xx(2, {1, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0}, 0);
  PauliOperator zz(2, {0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 1}, 0);
  auto p1 = dense_measure_project(psi, xx, 0);
  auto p2 = dense_measure_project(p1.state, zz, 0);

  std::vector<PauliOperator> final_rows{xx, zz};
  for (const auto& r : out.rows()) final_rows.push_back(embed(r.op, 7, 1));
  auto expected_dense =
      dense_state_vector(StabilizerTable::from_ops(2, 7, final_rows));
  CHECK(overlap_magnitude(p2.state, expected_dense) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("swapping two AME states joins their logical operators") {
  auto ame6 = testutil::load_table("ame6.table");
  StabilizerTable out = entanglement_swap({ame6, ame6, {{5, 5}}});
  CHECK(out.n_qudits() == 10);
  CHECK(out.row_count() == 10);

  CodeSpec code = extract_code(ame6, {5});
  std::vector<PauliOperator> expected;
  for (const auto& g : code.stabilizer_gens) expected.push_back(embed(g, 10, 0));
  for (const auto& g : code.stabilizer_gens) expected.push_back(embed(g, 10, 5));
  expected.push_back(multiply(embed(code.logical_pairs[0].first, 10, 0),
                              embed(code.logical_pairs[0].first, 10, 5)));
  expected.push_back(
      multiply(embed(code.logical_pairs[0].second, 10, 0),
               embed(inverse(code.logical_pairs[0].second), 10, 5)));
  CHECK(group_equal(out, StabilizerTable::from_ops(2, 10, expected)).same_group);
}

TEST_CASE("encode_through: gens first, encoded input rows after") {
  auto ame6 = testutil::load_table("ame6.table");
  CodeSpec code = extract_code(ame6, {5});
  auto zero = from_strings(2, {"Z"});
  StabilizerTable t = encode_through(code, zero);
  CHECK(t.row_count() == 5);
  for (int i = 0; i < 4; ++i) CHECK(t.row(i).role == RowRole::Stabilizer);
  CHECK(t.row(4).role == RowRole::EncodedInput);
  CHECK(t.row(4).op == code.logical_pairs[0].second);

  // encoding a rowless input leaves just the generators
  StabilizerTable none(2, 1, {});
  StabilizerTable gens_only = encode_qudits(none, code, {{0, 0}});
  CHECK(gens_only.row_count() == 4);
}

TEST_CASE("encode_through validates the embedding") {
  auto ame6 = testutil::load_table("ame6.table");
  CodeSpec code = extract_code(ame6, {5, 4});
  auto bell = from_strings(2, {"XX", "ZZ"});
  CHECK_NOTHROW(encode_through(code, bell));
  CHECK_NOTHROW(encode_through(code, bell, {1, 0}));
  CHECK_THROWS_AS(encode_through(code, bell, {0, 0}), Error);  // not injective
  CHECK_THROWS_AS(encode_through(code, bell, {0, 2}), Error);  // out of range
  CHECK_THROWS_AS(encode_through(code, bell, {0}), Error);     // wrong length
}

TEST_CASE("propagate_operator: identity and the published logical X") {
  auto ame6 = testutil::load_table("ame6.table");
  CodeSpec code = extract_code(ame6, {5});
  CHECK(propagate_operator(code, PauliOperator::identity(2, 1)).is_identity());

  PauliOperator image = propagate_operator(code, parse_pauli("X", 2));
  StabilizerTable gens = StabilizerTable::from_ops(2, 5, code.stabilizer_gens);
  CHECK(membership(gens, multiply(image, inverse(parse_pauli("-ZXZ11", 2))))
            .in_group_mod_phase);
}

TEST_CASE("propagate_operator is a homomorphism modulo stabilizers") {
  std::mt19937_64 rng(41);
  auto ame6 = testutil::load_table("ame6.table");
  CodeSpec code = extract_code(ame6, {5, 4});
  StabilizerTable gens = StabilizerTable::from_ops(2, 4, code.stabilizer_gens);
  for (int rep = 0; rep < 25; ++rep) {
    PauliOperator p = testutil::random_observable(2, 2, rng);
    PauliOperator q = testutil::random_observable(2, 2, rng);
    PauliOperator lhs = propagate_operator(code, multiply(p, q));
    PauliOperator rhs = multiply(propagate_operator(code, p),
                                 propagate_operator(code, q));
    CHECK(membership(gens, multiply(lhs, inverse(rhs))).in_group_mod_phase);
  }
}

TEST_CASE("Z (x) Z through the 3->3 code is the product of Z logicals") {
  auto ame6 = testutil::load_table("ame6.table");
  CodeSpec code = extract_code(ame6, {5, 4, 3});
  PauliOperator zz1(2, {0, 0, 0}, {1, 1, 0}, 0);
  PauliOperator image = propagate_operator(code, zz1);
  CHECK(image == multiply(code.logical_pairs[0].second,
                          code.logical_pairs[1].second));

  // dense check on an encoded eigenstate
  auto input = from_strings(2, {"ZZ1", "Z1Z", "XXX"});
  StabilizerTable encoded = encode_through(code, input);
  auto psi = dense_state_vector(encoded);
  auto w = apply_pauli(image, psi);
  double direct = 0.0;
  for (size_t i = 0; i < psi.size(); ++i) {
    direct += std::real(std::conj(psi[i]) * w[i]);
  }
  CHECK(direct == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("swap route equals substitution route on random plans") {
  std::mt19937_64 rng(47);
  auto ame6 = testutil::load_table("ame6.table");
  auto qutrit_fixture = graph_state(*find_small_ame(3, 4));
  int checked = 0;
  for (int rep = 0; rep < 30; ++rep) {
    for (int d : {2, 3}) {
      const StabilizerTable& right = d == 2 ? ame6 : qutrit_fixture;
      int n_l = 2 + static_cast<int>(rng() % 3);
      StabilizerTable left = testutil::random_state(d, n_l, rng);
      int max_pairs = std::min(n_l / 2, right.n_qudits() / 2);
      int n_pairs = 1 + static_cast<int>(rng() % max_pairs);
      std::vector<int> lq(n_l), rq(right.n_qudits());
      for (int i = 0; i < n_l; ++i) lq[i] = i;
      for (int i = 0; i < right.n_qudits(); ++i) rq[i] = i;
      std::shuffle(lq.begin(), lq.end(), rng);
      std::shuffle(rq.begin(), rq.end(), rng);
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n_pairs; ++i) pairs.emplace_back(lq[i], rq[i]);
      check_routes_agree(left, right, pairs);
      ++checked;
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("pair processing order does not change the group") {
  std::mt19937_64 rng(53);
  auto ame6 = testutil::load_table("ame6.table");
  for (int rep = 0; rep < 10; ++rep) {
    StabilizerTable left = testutil::random_state(2, 4, rng);
    StabilizerTable forward =
        entanglement_swap({left, ame6, {{0, 1}, {2, 4}}});
    StabilizerTable backward =
        entanglement_swap({left, ame6, {{2, 4}, {0, 1}}});
    auto eq = group_equal(forward, backward);
    CHECK(eq.same_group);
    CHECK(eq.phases_match);
  }
}

TEST_CASE("sampled outcomes still yield valid post-swap states") {
  std::mt19937_64 rng(59);
  auto ame6 = testutil::load_table("ame6.table");
  auto bell = from_strings(2, {"XX", "ZZ"});
  SwapOptions opts;
  opts.sample = true;
  opts.rng = &rng;
  for (int rep = 0; rep < 5; ++rep) {
    StabilizerTable out = entanglement_swap({bell, ame6, {{1, 2}}}, opts);
    CHECK(out.n_qudits() == 6);
    CHECK(out.row_count() == 6);
  }
}
