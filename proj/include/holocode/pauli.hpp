// Copyright 2026 The holocode Authors
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

#ifndef HOLOCODE_PAULI_HPP
#define HOLOCODE_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace holo {

/// A qudit Pauli operator  phase * prod_s X_s^{x[s]} Z_s^{z[s]}  on n sites.
///
/// The phase is stored exactly as an integer exponent of the phase unit:
/// i for qubits (dimension 2), omega = exp(2*pi*i/3) for qutrits.  All group
/// arithmetic is integer arithmetic; no floating point enters until
/// coefficient() is asked for.
class PauliString {
 public:
  PauliString(uint32_t dimension, size_t n);

  // Parses either a compact qubit word like "XZZXI" (tokens I,X,Y,Z), or a
  // space-separated token list like "Z I ZZ" where a token is a run of X's
  // followed by a run of Z's ("XXZ" means X^2 Z).  "Y" means the Hermitian
  // Pauli-Y, i.e. i*XZ on qubits (and X^1 Z^1 with unit phase on qutrits,
  // where no extra phase is conventional).
  static PauliString from_word(const std::string& word, uint32_t dimension = 2);

  static PauliString single(uint32_t dimension, size_t n, size_t site,
                            uint32_t x_exp, uint32_t z_exp);

  uint32_t dimension() const { return dim_; }
  size_t num_sites() const { return x_.size(); }
  uint8_t x(size_t s) const { return x_[s]; }
  uint8_t z(size_t s) const { return z_[s]; }
  const std::vector<uint8_t>& x_exponents() const { return x_; }
  const std::vector<uint8_t>& z_exponents() const { return z_; }

  /// Exponent of the phase unit (i for qubits, omega for qutrits), reduced
  /// to the canonical range [0, 4) resp. [0, 3).
  int phase_exponent() const { return phase_; }
  std::complex<double> coefficient() const;
  void mul_phase_unit(int exponent);

  PauliString operator*(const PauliString& rhs) const;
  PauliString inverse() const;
  bool operator==(const PauliString& rhs) const = default;

  /// Symplectic form sum_s (z_a[s]*x_b[s] - z_b[s]*x_a[s]) mod dimension.
  /// Zero iff the two operators commute.
  int symplectic_form(const PauliString& rhs) const;
  bool commutes_with(const PauliString& rhs) const {
    return symplectic_form(rhs) == 0;
  }

  size_t weight() const;
  bool is_identity() const;  // identity up to phase
  std::string str() const;

 private:
  uint32_t dim_;
  int phase_;
  std::vector<uint8_t> x_, z_;
};

/// A product of distinct Majorana operators  coeff * g_{m_0} g_{m_1} ...,
/// mode indices 0-based and strictly increasing after canonicalize().
/// The coefficient is exact: a power of i (phase_pow stores the exponent).
struct MajoranaMonomial {
  std::vector<uint32_t> modes;
  int phase_pow = 0;  // coefficient = i^phase_pow

  std::complex<double> coefficient() const;
  MajoranaMonomial operator*(const MajoranaMonomial& rhs) const;
  bool operator==(const MajoranaMonomial& rhs) const = default;
  std::string str() const;
};

/// Jordan-Wigner transform for qubit Pauli strings on n sites:
///   g_{2s}   = Z^{(s)} X_s,     g_{2s+1} = Z^{(s)} Y_s,
/// where Z^{(s)} is a Z on every site before s.  Sites and modes 0-based.
MajoranaMonomial jordan_wigner(const PauliString& p);

/// Inverse direction: expands the monomial into a Pauli string on n sites.
PauliString monomial_to_pauli(const MajoranaMonomial& m, size_t n_sites);

}  // namespace holo

#endif
