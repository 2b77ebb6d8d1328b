#pragma once

#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "amekit/dense.hpp"
#include "amekit/serialize.hpp"
#include "amekit/tableau.hpp"

namespace testutil {

inline std::string golden_path(const std::string& name) {
  return std::string(AMEKIT_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline amekit::StabilizerTable load_table(const std::string& name) {
  return amekit::parse_table(read_file(golden_path(name)));
}

/// Plain Pauli strings, one per line, for fixtures that are not valid tables.
inline std::vector<amekit::PauliOperator> load_rows(const std::string& name,
                                                    int dim) {
  std::vector<amekit::PauliOperator> rows;
  std::istringstream in(read_file(golden_path(name)));
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    rows.push_back(amekit::parse_pauli(line, dim));
  }
  return rows;
}

// ---- dense matrix oracle (d <= 5, N <= 3) -------------------------------

using Matrix = std::vector<std::vector<std::complex<double>>>;

inline Matrix pauli_matrix(const amekit::PauliOperator& p) {
  const int d = p.dim();
  const std::complex<double> unit =
      d == 2 ? std::complex<double>(0.0, 1.0)
             : std::exp(std::complex<double>(0.0, 2.0 * M_PI / d));
  const std::complex<double> omega =
      d == 2 ? std::complex<double>(-1.0, 0.0) : unit;

  size_t total = 1;
  for (int q = 0; q < p.n_qudits(); ++q) total *= d;
  Matrix m(total, std::vector<std::complex<double>>(total, 0.0));
  std::vector<int> digits(p.n_qudits());
  for (size_t col = 0; col < total; ++col) {
    size_t rest = col;
    for (int q = p.n_qudits() - 1; q >= 0; --q) {
      digits[q] = static_cast<int>(rest % d);
      rest /= d;
    }
    int phase = 0;
    size_t row = 0;
    for (int q = 0; q < p.n_qudits(); ++q) {
      phase = (phase + p.z_exp(q) * digits[q]) % d;
      row = row * d + (digits[q] + p.x_exp(q)) % d;
    }
    m[row][col] = std::pow(unit, p.phase_exp()) * std::pow(omega, phase);
  }
  return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  size_t n = a.size();
  Matrix c(n, std::vector<std::complex<double>>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      if (std::abs(a[i][k]) < 1e-14) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline bool matrices_close(const Matrix& a, const Matrix& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) {
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
    }
  }
  return true;
}

// ---- random stabilizer states via random measurements --------------------

inline amekit::PauliOperator random_observable(int dim, int n,
                                               std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp_dist(0, dim - 1);
  while (true) {
    std::vector<int> x(n), z(n);
    bool nontrivial = false;
    for (int q = 0; q < n; ++q) {
      x[q] = exp_dist(rng);
      z[q] = exp_dist(rng);
      nontrivial = nontrivial || x[q] != 0 || z[q] != 0;
    }
    if (!nontrivial) continue;
    int phase = 0;
    if (dim == 2) {
      int xz = 0;
      for (int q = 0; q < n; ++q) xz += x[q] * z[q];
      phase = (xz % 2) + 2 * static_cast<int>(rng() % 2);
    } else {
      phase = exp_dist(rng);
    }
    return amekit::PauliOperator(dim, std::move(x), std::move(z), phase);
  }
}

inline amekit::StabilizerTable random_state(int dim, int n,
                                            std::mt19937_64& rng) {
  std::vector<amekit::PauliOperator> rows;
  for (int q = 0; q < n; ++q) {
    rows.push_back(amekit::PauliOperator::single_site(dim, n, q, 0, 1));
  }
  amekit::StabilizerTable table =
      amekit::StabilizerTable::from_ops(dim, n, std::move(rows));
  amekit::MeasureOptions opts;
  opts.sample = true;
  opts.rng = &rng;
  for (int step = 0; step < 2 * n + 2; ++step) {
    table = amekit::measure(table, random_observable(dim, n, rng), opts).table;
  }
  return table;
}

}  // namespace testutil
