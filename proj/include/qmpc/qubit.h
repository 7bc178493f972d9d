// Copyright 2026 The qmpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMPC_QUBIT_H
#define QMPC_QUBIT_H

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <utility>

namespace qmpc {

class Unitary2;

using Complex = std::complex<double>;

/// Entrywise tolerance for algebraic identities between single gates.
inline constexpr double kExactTol = 1e-12;
/// Tolerance for accumulated gate chains (up to 64 gates).
inline constexpr double kChainTol = 1e-9;

/// Pure single-qubit state a|0> + b|1>, normalized on construction.
class QubitState {
 public:
  /// Throws std::invalid_argument unless |a|^2 + |b|^2 = 1 within kChainTol.
  QubitState(Complex amp0, Complex amp1);

  static QubitState zero() { return {Complex{1.0}, Complex{0.0}}; }
  static QubitState one() { return {Complex{0.0}, Complex{1.0}}; }
  /// (|0> + |1>)/sqrt(2)
  static QubitState plus();

  Complex amp0() const { return amp0_; }
  Complex amp1() const { return amp1_; }
  double prob0() const { return std::norm(amp0_); }
  double prob1() const { return std::norm(amp1_); }
  double norm() const { return std::sqrt(prob0() + prob1()); }

  QubitState operator*(Complex phase) const;
  /// Exact amplitude equality (use global_phase_equiv for physics comparisons).
  bool operator==(const QubitState&) const = default;

  std::string str() const;

 private:
  Complex amp0_;
  Complex amp1_;
};

/// 2x2 unitary, row-major: [[m00, m01], [m10, m11]].
class Unitary2 {
 public:
  /// Throws std::invalid_argument unless U^dagger U = I within kExactTol.
  Unitary2(Complex m00, Complex m01, Complex m10, Complex m11);

  static Unitary2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex operator()(int row, int col) const { return m_[2 * row + col]; }
  Unitary2 dagger() const;
  Unitary2 operator*(const Unitary2& rhs) const;
  /// Integer power; exponent 0 is the identity.
  Unitary2 pow(unsigned exponent) const;

  bool approx_equal(const Unitary2& other, double tol = kExactTol) const;

 private:
  struct Unchecked {};
  Unitary2(std::array<Complex, 4> m, Unchecked) : m_(m) {}

  std::array<Complex, 4> m_;
};

/// Single-qubit density matrix. Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Validates the invariants within kExactTol; throws std::invalid_argument.
  DensityMatrix(Complex r00, Complex r01, Complex r10, Complex r11);

  static DensityMatrix diag(double p0, double p1) { return {p0, 0.0, 0.0, p1}; }
  static DensityMatrix maximally_mixed() { return diag(0.5, 0.5); }

  Complex operator()(int row, int col) const { return r_[2 * row + col]; }
  Complex trace() const { return r_[0] + r_[3]; }
  double prob0() const { return r_[0].real(); }
  double prob1() const { return r_[3].real(); }

  /// Zeroes the off-diagonal (computational basis) coherences.
  DensityMatrix dephased() const { return diag(prob0(), prob1()); }

  /// Bloch vector (x, y, z) with rho = (I + x X + y Y + z Z)/2.
  std::array<double, 3> bloch() const;

  bool approx_equal(const DensityMatrix& other, double tol = kExactTol) const;

 private:
  std::array<Complex, 4> r_;
};

/// R_y(theta) = exp(-i theta sigma_y / 2). Throws on non-finite theta.
Unitary2 ry(double theta);

QubitState apply(const Unitary2& u, const QubitState& s);
/// u rho u^dagger
DensityMatrix apply(const Unitary2& u, const DensityMatrix& rho);

struct Measurement {
  int outcome;
  QubitState collapsed;
};

/// Computational-basis measurement. Outcome is 1 iff sample < |amp1|^2,
/// so the result is a pure function of (state, sample).
/// Throws std::invalid_argument if sample is outside [0, 1).
Measurement measure_z(const QubitState& s, double sample);

DensityMatrix dm_from_pure(const QubitState& s);

struct WeightedDensity {
  double weight;
  DensityMatrix rho;
};

/// Convex combination. Weights must be non-negative and sum to 1 within kExactTol.
DensityMatrix dm_mix(std::span<const WeightedDensity> terms);

/// Half the trace norm of (a - b).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// True iff |<a|b>| >= 1 - tol.
bool global_phase_equiv(const QubitState& a, const QubitState& b, double tol = kChainTol);

}  // namespace qmpc

#endif  // QMPC_QUBIT_H
