#include "amekit/ame_codes.hpp"

#include <algorithm>
#include <random>

#include "amekit/dense.hpp"
#include "amekit/entropy.hpp"

namespace amekit {

void AdjacencyMatrix::validate() const {
  if (!is_prime(dim)) {
    fail(ErrorKind::InvalidArgument, "adjacency dimension must be prime");
  }
  const int n = size();
  if (n == 0) fail(ErrorKind::InvalidArgument, "empty adjacency matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n) {
      fail(ErrorKind::Shape, "adjacency matrix must be square");
    }
    if (entries[i][i] != 0) {
      fail(ErrorKind::InvalidArgument, "adjacency diagonal must be zero");
    }
    for (int j = 0; j < n; ++j) {
      if (entries[i][j] < 0 || entries[i][j] >= dim) {
        fail(ErrorKind::InvalidArgument, "adjacency entry out of Z_d");
      }
      if (entries[i][j] != entries[j][i]) {
        fail(ErrorKind::InvalidArgument, "adjacency matrix must be symmetric");
      }
    }
  }
}

StabilizerTable graph_state(const AdjacencyMatrix& a) {
  a.validate();
  const int n = a.size();
  std::vector<PauliOperator> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> x(n, 0);
    x[i] = 1;
    rows.emplace_back(a.dim, std::move(x), a.entries[i], 0);
  }
  return StabilizerTable::from_ops(a.dim, n, std::move(rows));
}

namespace {

// Calls fn for every subset of {0..n-1} of the given size.
template <typename Fn>
bool for_each_subset(int n, int size, Fn&& fn) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<std::vector<int>> ame_witness(const StabilizerTable& table) {
  if (!table.is_pure_state()) {
    fail(ErrorKind::InvalidArgument, "AME check needs a pure-state table");
  }
  const int half = table.n_qudits() / 2;
  std::optional<std::vector<int>> witness;
  for_each_subset(table.n_qudits(), half, [&](const std::vector<int>& b) {
    if (supported_subgroup_rank(table, b) != 0) {
      witness = b;
      return false;
    }
    return true;
  });
  return witness;
}

bool is_ame(const StabilizerTable& table) { return !ame_witness(table).has_value(); }

bool truncated_independence(const AdjacencyMatrix& a, const std::vector<int>& k) {
  a.validate();
  const int n = a.size();
  const int m = static_cast<int>(k.size());
  if (m > n / 2) {
    fail(ErrorKind::InvalidArgument, "output set larger than floor(N/2)");
  }
  std::vector<bool> in_k(n, false);
  for (int q : k) {
    if (q < 0 || q >= n || in_k[q]) {
      fail(ErrorKind::InvalidArgument, "output set must be distinct valid qudits");
    }
    in_k[q] = true;
  }
  if (m == 0) return true;

  // rank over Z_d of the K rows with the K columns removed
  std::vector<std::vector<int>> rows;
  for (int i : k) {
    std::vector<int> r;
    for (int j = 0; j < n; ++j) {
      if (!in_k[j]) r.push_back(a.entries[i][j]);
    }
    rows.push_back(std::move(r));
  }
  const int d = a.dim;
  int rank = 0;
  const int cols = static_cast<int>(rows.front().size());
  for (int c = 0; c < cols && rank < m; ++c) {
    int pivot = -1;
    for (int r = rank; r < m; ++r) {
      if (rows[r][c] % d != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = mod_inverse(rows[rank][c], d);
    for (int j = 0; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv % d;
    for (int r = 0; r < m; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      int f = rows[r][c];
      for (int j = 0; j < cols; ++j) {
        rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % d + d) % d;
      }
    }
    ++rank;
  }
  return rank == m;
}

void CodeSpec::validate() const { as_table().validate(); }

StabilizerTable CodeSpec::as_table() const {
  std::vector<TableRow> rows;
  for (const auto& g : stabilizer_gens) rows.push_back({g, RowRole::Stabilizer, 0});
  for (size_t j = 0; j < logical_pairs.size(); ++j) {
    rows.push_back({logical_pairs[j].second, RowRole::LogicalZ, static_cast<int>(j)});
    rows.push_back({logical_pairs[j].first, RowRole::LogicalX, static_cast<int>(j)});
  }
  return StabilizerTable(dim, n_physical, std::move(rows));
}

CodeSpec extract_code(const StabilizerTable& ame_table,
                      const std::vector<int>& output_qudits) {
  const int n = ame_table.n_qudits();
  const int m = static_cast<int>(output_qudits.size());
  if (m < 1 || m > n / 2) {
    fail(ErrorKind::InvalidArgument,
         "output count must lie in [1, floor(N/2)]");
  }
  if (!ame_table.is_pure_state()) {
    fail(ErrorKind::InvalidArgument, "code extraction needs a pure-state table");
  }

  LocalizedRegister loc = localize_register(ame_table, output_qudits);

  std::vector<bool> in_k(n, false);
  for (int q : output_qudits) in_k[q] = true;
  std::vector<int> kept;
  for (int q = 0; q < n; ++q) {
    if (!in_k[q]) kept.push_back(q);
  }

  auto truncate = [&](const PauliOperator& row) {
    std::vector<int> x, z;
    for (int q : kept) {
      x.push_back(row.x_exp(q));
      z.push_back(row.z_exp(q));
    }
    return PauliOperator(ame_table.dim(), std::move(x), std::move(z),
                         row.phase_exp());
  };

  CodeSpec code;
  code.dim = ame_table.dim();
  code.n_physical = n - m;
  code.k_logical = m;
  for (const auto& r : loc.rest) code.stabilizer_gens.push_back(truncate(r));
  for (int j = 0; j < m; ++j) {
    // The X logical is the truncated X row; the Z logical is the inverse of
    // the truncated Z row, which keeps Z_L X_L = omega X_L Z_L for every d
    // (for qubits the inverse is the row itself).
    code.logical_pairs.emplace_back(truncate(loc.x_rows[j]),
                                    inverse(truncate(loc.z_rows[j])));
  }
  code.column_permutation = kept;
  code.column_permutation.insert(code.column_permutation.end(),
                                 output_qudits.begin(), output_qudits.end());

  std::vector<PauliOperator> all_truncated;
  for (const auto& g : code.stabilizer_gens) all_truncated.push_back(g);
  for (const auto& [x, z] : code.logical_pairs) {
    all_truncated.push_back(x);
    all_truncated.push_back(z);
  }
  if (!is_independent(all_truncated)) {
    fail(ErrorKind::NotAme,
         "truncated generators are dependent; the input state is not AME");
  }
  code.validate();
  return code;
}

std::optional<AdjacencyMatrix> find_small_ame(int dim, int n_qudits,
                                              const SearchBudget& budget) {
  if (!is_prime(dim)) fail(ErrorKind::InvalidArgument, "dimension must be prime");
  if (n_qudits < 2) fail(ErrorKind::InvalidArgument, "need at least two qudits");
  dense_dimension(dim, n_qudits);  // enforce the oracle-scale bound

  const int n_free = n_qudits * (n_qudits - 1) / 2;
  std::uint64_t space = 1;
  bool exhaustive = true;
  for (int i = 0; i < n_free; ++i) {
    space *= static_cast<std::uint64_t>(dim);
    if (space > budget.max_tries) {
      exhaustive = false;
      break;
    }
  }

  auto matrix_from_entries = [&](const std::vector<int>& upper) {
    AdjacencyMatrix a;
    a.dim = dim;
    a.entries.assign(n_qudits, std::vector<int>(n_qudits, 0));
    int idx = 0;
    for (int i = 0; i < n_qudits; ++i) {
      for (int j = i + 1; j < n_qudits; ++j) {
        a.entries[i][j] = a.entries[j][i] = upper[idx++];
      }
    }
    return a;
  };

  if (exhaustive) {
    std::vector<int> upper(n_free, 0);
    for (std::uint64_t t = 0; t < space; ++t) {
      AdjacencyMatrix a = matrix_from_entries(upper);
      if (is_ame(graph_state(a))) return a;
      for (int i = 0; i < n_free; ++i) {
        if (++upper[i] < dim) break;
        upper[i] = 0;
      }
    }
    return std::nullopt;
  }

  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<int> entry(0, dim - 1);
  std::vector<int> upper(n_free);
  for (std::uint64_t t = 0; t < budget.max_tries; ++t) {
    for (auto& e : upper) e = entry(rng);
    AdjacencyMatrix a = matrix_from_entries(upper);
    if (is_ame(graph_state(a))) return a;
  }
  return std::nullopt;
}

}  // namespace amekit
