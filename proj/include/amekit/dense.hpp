#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "amekit/tableau.hpp"

namespace amekit {

// Bounded dense-vector utilities. These exist as independent oracles for the
// stabilizer machinery and are not a simulation path.

using DenseVector = std::vector<std::complex<double>>;

std::uint64_t dense_dimension(int dim, int n_qudits);  // errors past 2^20

/// Applies the operator to amplitudes over the computational basis, qudit 0
/// being the most significant digit.
DenseVector apply_pauli(const PauliOperator& p, const DenseVector& v);

/// Von Neumann entropy in bits of the reduced state on B, via singular values
/// of the reshaped amplitude matrix.
double dense_entropy_bits(const DenseVector& state, int dim, int n_qudits,
                          const std::vector<int>& b);

/// Projects onto the omega^outcome eigenspace of the observable and returns
/// the normalised result together with the outcome probability.
struct DenseProjection {
  DenseVector state;
  double probability = 0.0;
};
DenseProjection dense_measure_project(const DenseVector& state,
                                      const PauliOperator& observable,
                                      int outcome);

/// |<a|b>| for unit vectors; 1 means equal up to global phase.
double overlap_magnitude(const DenseVector& a, const DenseVector& b);

}  // namespace amekit
