#include "amekit/dense.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

namespace amekit {

namespace {

constexpr std::uint64_t kDenseLimit = 1u << 20;

std::complex<double> phase_unit(int dim) {
  if (dim == 2) return {0.0, 1.0};
  double angle = 2.0 * std::numbers::pi / dim;
  return {std::cos(angle), std::sin(angle)};
}

double norm_squared(const DenseVector& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

}  // namespace

std::uint64_t dense_dimension(int dim, int n_qudits) {
  std::uint64_t total = 1;
  for (int i = 0; i < n_qudits; ++i) {
    total *= static_cast<std::uint64_t>(dim);
    if (total > kDenseLimit) {
      fail(ErrorKind::Limit, "dense oracle limited to 2^20 amplitudes");
    }
  }
  return total;
}

DenseVector apply_pauli(const PauliOperator& p, const DenseVector& v) {
  const int d = p.dim();
  const int n = p.n_qudits();
  const std::uint64_t total = dense_dimension(d, n);
  if (v.size() != total) fail(ErrorKind::Shape, "vector length mismatch");

  const std::complex<double> unit = phase_unit(d);
  const std::complex<double> omega = d == 2 ? std::complex<double>(-1.0, 0.0)
                                            : unit;
  std::complex<double> global = std::pow(unit, p.phase_exp());

  DenseVector out(total, {0.0, 0.0});
  std::vector<int> digits(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int q = n - 1; q >= 0; --q) {
      digits[q] = static_cast<int>(rest % d);
      rest /= d;
    }
    // X^x Z^z |k> = omega^{z k} |k + x>
    int z_phase = 0;
    std::uint64_t target = 0;
    for (int q = 0; q < n; ++q) {
      z_phase = (z_phase + p.z_exp(q) * digits[q]) % d;
      target = target * d + (digits[q] + p.x_exp(q)) % d;
    }
    out[target] += global * std::pow(omega, z_phase) * v[idx];
  }
  return out;
}

std::vector<std::complex<double>> dense_state_vector(const StabilizerTable& table) {
  if (!table.is_pure_state()) {
    fail(ErrorKind::InvalidArgument,
         "dense state vector needs a pure-state table");
  }
  const int d = table.dim();
  const std::uint64_t total = dense_dimension(d, table.n_qudits());

  for (std::uint64_t ref = 0; ref < total; ++ref) {
    DenseVector v(total, {0.0, 0.0});
    v[ref] = 1.0;
    bool dead = false;
    for (const auto& row : table.rows()) {
      DenseVector acc = v;
      PauliOperator pw = row.op;
      for (int c = 1; c < d; ++c) {
        DenseVector term = apply_pauli(pw, v);
        for (std::uint64_t i = 0; i < total; ++i) acc[i] += term[i];
        if (c + 1 < d) pw = multiply(pw, row.op);
      }
      for (auto& a : acc) a /= static_cast<double>(d);
      v = std::move(acc);
      if (norm_squared(v) <= 1e-9) {  // reference outside the support
        dead = true;
        break;
      }
    }
    if (dead) continue;
    double n2 = norm_squared(v);
    double inv = 1.0 / std::sqrt(n2);
    for (auto& a : v) a *= inv;
    return v;
  }
  fail(ErrorKind::InvalidArgument, "projector annihilated every basis state");
}

double dense_entropy_bits(const DenseVector& state, int dim, int n_qudits,
                          const std::vector<int>& b) {
  const std::uint64_t total = dense_dimension(dim, n_qudits);
  if (state.size() != total) fail(ErrorKind::Shape, "vector length mismatch");
  std::vector<bool> in_b(n_qudits, false);
  for (int q : b) {
    if (q < 0 || q >= n_qudits || in_b[q]) {
      fail(ErrorKind::InvalidArgument, "region must be distinct valid qudits");
    }
    in_b[q] = true;
  }
  std::uint64_t rows = 1, cols = 1;
  for (int q = 0; q < n_qudits; ++q) (in_b[q] ? rows : cols) *= dim;

  Eigen::MatrixXcd m(rows, cols);
  std::vector<int> digits(n_qudits);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int q = n_qudits - 1; q >= 0; --q) {
      digits[q] = static_cast<int>(rest % dim);
      rest /= dim;
    }
    std::uint64_t r = 0, c = 0;
    for (int q = 0; q < n_qudits; ++q) {
      if (in_b[q]) r = r * dim + digits[q];
      else c = c * dim + digits[q];
    }
    m(r, c) = state[idx];
  }
  // eigenvalues of the smaller Gram matrix; the nonzero spectrum matches the
  // reduced density operator's
  Eigen::MatrixXcd gram = rows <= cols ? Eigen::MatrixXcd(m * m.adjoint())
                                       : Eigen::MatrixXcd(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
  double bits = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    double lambda = eig.eigenvalues()[i];
    if (lambda > 1e-12) bits -= lambda * std::log2(lambda);
  }
  return bits;
}

DenseProjection dense_measure_project(const DenseVector& state,
                                      const PauliOperator& observable,
                                      int outcome) {
  const int d = observable.dim();
  const std::complex<double> unit = phase_unit(d);
  const std::complex<double> omega =
      d == 2 ? std::complex<double>(-1.0, 0.0) : unit;

  DenseVector acc = state;
  PauliOperator pw = observable;
  for (int c = 1; c < d; ++c) {
    DenseVector term = apply_pauli(pw, state);
    std::complex<double> w = std::pow(omega, ((-outcome * c) % d + d) % d);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += w * term[i];
    if (c + 1 < d) pw = multiply(pw, observable);
  }
  for (auto& a : acc) a /= static_cast<double>(d);

  DenseProjection proj;
  proj.probability = norm_squared(acc);
  if (proj.probability > 1e-12) {
    double inv = 1.0 / std::sqrt(proj.probability);
    for (auto& a : acc) a *= inv;
  }
  proj.state = std::move(acc);
  return proj;
}

double overlap_magnitude(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::Shape, "vector length mismatch");
  std::complex<double> ip = 0.0;
  for (size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
  return std::abs(ip);
}

}  // namespace amekit
