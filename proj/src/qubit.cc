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

#include "qmpc/qubit.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qmpc {

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

QubitState::QubitState(Complex amp0, Complex amp1) : amp0_(amp0), amp1_(amp1) {
  double n2 = std::norm(amp0) + std::norm(amp1);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kChainTol) {
    throw std::invalid_argument("QubitState: amplitudes are not normalized");
  }
}

QubitState QubitState::plus() {
  double h = 1.0 / std::numbers::sqrt2;
  return {Complex{h}, Complex{h}};
}

QubitState QubitState::operator*(Complex phase) const { return {amp0_ * phase, amp1_ * phase}; }

std::string QubitState::str() const {
  std::ostringstream out;
  out << "(" << amp0_.real() << "+" << amp0_.imag() << "i)|0> + (" << amp1_.real() << "+"
      << amp1_.imag() << "i)|1>";
  return out.str();
}

Unitary2::Unitary2(Complex m00, Complex m01, Complex m10, Complex m11) : m_{m00, m01, m10, m11} {
  // U^dagger U
  Complex a = std::conj(m00) * m00 + std::conj(m10) * m10;
  Complex b = std::conj(m00) * m01 + std::conj(m10) * m11;
  Complex d = std::conj(m01) * m01 + std::conj(m11) * m11;
  if (!close(a, 1.0, kExactTol) || !close(b, 0.0, kExactTol) || !close(d, 1.0, kExactTol)) {
    throw std::invalid_argument("Unitary2: matrix is not unitary");
  }
}

Unitary2 Unitary2::dagger() const {
  return {{std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])}, Unchecked{}};
}

Unitary2 Unitary2::operator*(const Unitary2& rhs) const {
  const auto& a = m_;
  const auto& b = rhs.m_;
  return {{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
           a[2] * b[1] + a[3] * b[3]},
          Unchecked{}};
}

Unitary2 Unitary2::pow(unsigned exponent) const {
  Unitary2 result = identity();
  for (unsigned k = 0; k < exponent; ++k) result = result * *this;
  return result;
}

bool Unitary2::approx_equal(const Unitary2& other, double tol) const {
  for (int k = 0; k < 4; ++k) {
    if (!close(m_[k], other.m_[k], tol)) return false;
  }
  return true;
}

DensityMatrix::DensityMatrix(Complex r00, Complex r01, Complex r10, Complex r11)
    : r_{r00, r01, r10, r11} {
  if (std::abs(r00.imag()) > kExactTol || std::abs(r11.imag()) > kExactTol ||
      !close(r01, std::conj(r10), kExactTol)) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (!close(r00 + r11, 1.0, kExactTol)) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  double half_gap = 0.5 * (r00.real() - r11.real());
  double min_eig = 0.5 * (r00.real() + r11.real()) - std::sqrt(half_gap * half_gap + std::norm(r01));
  if (min_eig < -kExactTol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
}

std::array<double, 3> DensityMatrix::bloch() const {
  return {2.0 * r_[1].real(), -2.0 * r_[1].imag(), (r_[0] - r_[3]).real()};
}

bool DensityMatrix::approx_equal(const DensityMatrix& other, double tol) const {
  for (int k = 0; k < 4; ++k) {
    if (!close(r_[k], other.r_[k], tol)) return false;
  }
  return true;
}

Unitary2 ry(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("ry: angle must be finite");
  double c = std::cos(theta / 2);
  double s = std::sin(theta / 2);
  return {c, -s, s, c};
}

QubitState apply(const Unitary2& u, const QubitState& s) {
  return {u(0, 0) * s.amp0() + u(0, 1) * s.amp1(), u(1, 0) * s.amp0() + u(1, 1) * s.amp1()};
}

DensityMatrix apply(const Unitary2& u, const DensityMatrix& rho) {
  // (u rho) u^dagger, entry by entry.
  Complex t00 = u(0, 0) * rho(0, 0) + u(0, 1) * rho(1, 0);
  Complex t01 = u(0, 0) * rho(0, 1) + u(0, 1) * rho(1, 1);
  Complex t10 = u(1, 0) * rho(0, 0) + u(1, 1) * rho(1, 0);
  Complex t11 = u(1, 0) * rho(0, 1) + u(1, 1) * rho(1, 1);
  return {t00 * std::conj(u(0, 0)) + t01 * std::conj(u(0, 1)),
          t00 * std::conj(u(1, 0)) + t01 * std::conj(u(1, 1)),
          t10 * std::conj(u(0, 0)) + t11 * std::conj(u(0, 1)),
          t10 * std::conj(u(1, 0)) + t11 * std::conj(u(1, 1))};
}

Measurement measure_z(const QubitState& s, double sample) {
  if (!(sample >= 0.0 && sample < 1.0)) {
    throw std::invalid_argument("measure_z: randomness sample must lie in [0, 1)");
  }
  if (sample < s.prob1()) return {1, QubitState::one()};
  return {0, QubitState::zero()};
}

DensityMatrix dm_from_pure(const QubitState& s) {
  Complex a = s.amp0();
  Complex b = s.amp1();
  return {std::norm(a), a * std::conj(b), b * std::conj(a), std::norm(b)};
}

DensityMatrix dm_mix(std::span<const WeightedDensity> terms) {
  double total = 0.0;
  std::array<Complex, 4> acc{};
  for (const auto& term : terms) {
    if (!(term.weight >= 0.0)) throw std::invalid_argument("dm_mix: negative weight");
    total += term.weight;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) acc[2 * r + c] += term.weight * term.rho(r, c);
    }
  }
  if (std::abs(total - 1.0) > kExactTol) {
    throw std::invalid_argument("dm_mix: weights must sum to 1");
  }
  return {acc[0], acc[1], acc[2], acc[3]};
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  // a - b is Hermitian, so its singular values are the absolute eigenvalues.
  double d00 = (a(0, 0) - b(0, 0)).real();
  double d11 = (a(1, 1) - b(1, 1)).real();
  Complex d01 = a(0, 1) - b(0, 1);
  double mid = 0.5 * (d00 + d11);
  double radius = std::sqrt(0.25 * (d00 - d11) * (d00 - d11) + std::norm(d01));
  return 0.5 * (std::abs(mid + radius) + std::abs(mid - radius));
}

bool global_phase_equiv(const QubitState& a, const QubitState& b, double tol) {
  Complex overlap = std::conj(a.amp0()) * b.amp0() + std::conj(a.amp1()) * b.amp1();
  return std::abs(overlap) >= 1.0 - tol;
}

}  // namespace qmpc
