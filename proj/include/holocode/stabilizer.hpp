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

#ifndef HOLOCODE_STABILIZER_HPP
#define HOLOCODE_STABILIZER_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "holocode/dense.hpp"
#include "holocode/pauli.hpp"

namespace holo {

struct StabilizerCode {
  uint32_t dimension = 2;
  size_t n = 0;  // physical sites
  size_t k = 0;  // logical sites
  std::vector<PauliString> generators;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
  std::string name;

  /// Checks generator commutation, symplectic independence (rank n-k), and
  /// the logical commutation pattern.  Throws std::invalid_argument.
  void validate() const;
};

/// The [[5,1,3]] code with generators XZZXI and its cyclic permutations,
/// logical X = X^5 and logical Z = Z^5.
StabilizerCode five_qubit_code();

/// The 3-qutrit secret-sharing code: generators XXX and ZZZ, one logical
/// qutrit.
StabilizerCode three_qutrit_code();

/// Minimum weight over Pauli operators commuting with every generator but
/// lying outside the stabilizer group.  Exhaustive by increasing weight;
/// guarded to n <= 12 (SearchLimitError).
int code_distance(const StabilizerCode& code);

struct HammingBound {
  bool holds;
  uint64_t lhs;
  uint64_t rhs;
};

/// sum_{m<=floor((d-1)/2)} 3^m C(n,m)  <=  2^(n-k), evaluated exactly.
HammingBound quantum_hamming_bound(int n, int k, int d);

/// n >= 2(d-1) + k.
bool singleton_bound(int n, int k, int d);

/// The dim^k logical basis states, built by projecting deterministic seed
/// vectors with (1/dim^(n-k)) prod_i sum_t S_i^t and the logical-Z sector
/// projectors, then applying logical-X powers.  Each entry has dim^n
/// amplitudes and unit norm.
std::vector<std::vector<cdbl>> logical_basis_states(const StabilizerCode& code);

/// Rank-(k+n) tensor with the k logical legs first; the induced
/// logical->physical map is an isometry.
DenseTensor encoding_tensor(const StabilizerCode& code);

/// alpha|0bar> + beta|1bar> + gamma|2bar> for the 3-qutrit code.
/// Rejects non-normalized input (tolerance 1e-12).
DenseState three_qutrit_encode(const std::array<cdbl, 3>& logical);

/// Recovers the logical amplitudes using only the reduced state on the two
/// kept sites (0-based).  Throws CodeSpaceError when the input is not in the
/// code space (projector tolerance 1e-10).  Result is normalized and unique
/// up to a global phase.
std::array<cdbl, 3> three_qutrit_recover(const DenseState& state,
                                         std::array<size_t, 2> kept);

}  // namespace holo

#endif
