#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amekit/error.hpp"

namespace amekit {

bool is_prime(int n);

/// Multiplicative inverse modulo a prime.
int mod_inverse(int value, int prime);

/// A generalised Pauli operator on N qudits of prime dimension d, stored in
/// symplectic form: per-qudit X and Z exponents in Z_d plus a global phase
/// exponent. Canonically the operator reads, left to right,
///
///   unit^phase_exp * prod_j X_j^{x_j} Z_j^{z_j}
///
/// where the phase unit is i for d = 2 (so Y = i X Z and sign prefixes stay
/// exact) and the d-th root of unity omega otherwise. Values are immutable
/// after construction; all operations return new values.
class PauliOperator {
 public:
  PauliOperator(int dim, int n_qudits);  // identity
  PauliOperator(int dim, std::vector<int> x_exps, std::vector<int> z_exps,
                int phase_exp);

  static PauliOperator identity(int dim, int n_qudits);
  static PauliOperator single_site(int dim, int n_qudits, int site, int x_exp,
                                   int z_exp);

  int dim() const { return dim_; }
  int n_qudits() const { return static_cast<int>(x_.size()); }
  int phase_exp() const { return phase_; }
  int x_exp(int site) const { return x_[site]; }
  int z_exp(int site) const { return z_[site]; }
  const std::vector<int>& x_exps() const { return x_; }
  const std::vector<int>& z_exps() const { return z_; }

  /// Order of the phase group: 4 for qubits, d otherwise.
  int phase_order() const { return dim_ == 2 ? 4 : dim_; }
  /// Exponent of the phase unit that equals omega = e^{2 pi i / d}.
  int omega_units() const { return dim_ == 2 ? 2 : 1; }

  bool exponents_trivial() const;
  bool is_identity() const { return exponents_trivial() && phase_ == 0; }

  /// Same operator with the phase exponent replaced.
  PauliOperator with_phase(int phase_exp) const;

  bool operator==(const PauliOperator&) const = default;

 private:
  int dim_;
  int phase_;
  std::vector<int> x_;
  std::vector<int> z_;
};

/// Group product in canonical form; Z X reordering contributes omega factors.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

/// Exponent s in Z_d with p q = omega^s q p; zero iff the operators commute.
int symplectic_product(const PauliOperator& p, const PauliOperator& q);

/// p multiplied with itself k times (k >= 0).
PauliOperator power(const PauliOperator& p, int k);

/// Group inverse.
PauliOperator inverse(const PauliOperator& p);

/// Parses a Pauli string. Qubit tokens are {1, X, Y, Z} with an optional
/// phase prefix -, i, -i or w<k>; qudit tokens (d > 2) are whitespace
/// separated, each `1` or `x<a>z<b>` with either part omissible.
PauliOperator parse_pauli(std::string_view text, int dim);
PauliOperator parse_pauli(std::string_view text, int dim, int expected_n);

std::string render_pauli(const PauliOperator& p);

}  // namespace amekit
