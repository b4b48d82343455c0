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

#ifndef HOLOCODE_DENSE_HPP
#define HOLOCODE_DENSE_HPP

#include <complex>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "holocode/pauli.hpp"

namespace holo {

using cdbl = std::complex<double>;

/// Exact amplitude arrays.  This is the brute-force oracle the dimer engine
/// is validated against, guarded to HOLO_DENSE_MAX_AMPS amplitudes.
inline constexpr int64_t kDenseMaxAmps = int64_t{1} << 24;

class DenseTensor {
 public:
  DenseTensor() = default;
  DenseTensor(std::vector<int64_t> shape);
  DenseTensor(std::vector<int64_t> shape, std::vector<cdbl> amplitudes);

  const std::vector<int64_t>& shape() const { return shape_; }
  size_t rank() const { return shape_.size(); }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  cdbl& operator[](int64_t flat) { return data_[flat]; }
  const cdbl& operator[](int64_t flat) const { return data_[flat]; }
  const std::vector<cdbl>& amplitudes() const { return data_; }
  std::vector<cdbl>& amplitudes() { return data_; }

  cdbl at(const std::vector<int64_t>& index) const;
  double norm() const;
  DenseTensor conj() const;
  /// perm[i] = old leg that moves to new position i.
  DenseTensor permute(const std::vector<size_t>& perm) const;
  DenseTensor reshape(std::vector<int64_t> shape) const;

 private:
  std::vector<int64_t> shape_;
  std::vector<cdbl> data_;
};

/// Standard tensor contraction over the given (leg of a, leg of b) pairs.
/// Result legs: unpaired legs of a in order, then unpaired legs of b.
DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     const std::vector<std::pair<size_t, size_t>>& pairs);

/// A DenseTensor whose legs are all physical sites of one state vector.
struct DenseState {
  DenseTensor tensor;

  size_t num_sites() const { return tensor.rank(); }
  int64_t site_dim(size_t s) const { return tensor.shape()[s]; }
  void check_normalized(double tol = 1e-12) const;
};

/// Von Neumann entropy (nats) of the reduced state on `region`.
/// Eigenvalues below 1e-14 are dropped.
double entanglement_entropy(const DenseState& state, const std::set<size_t>& region);

/// I(A:B) = S_A + S_B - S_{A u B}; regions must be disjoint.
double mutual_information(const DenseState& state, const std::set<size_t>& a,
                          const std::set<size_t>& b);

/// Applies a PauliString to a state vector over uniform qudits
/// (site 0 = most significant index).
std::vector<cdbl> apply_pauli(const PauliString& p, const std::vector<cdbl>& v);

/// True iff the induced map is an isometry (M^dag M proportional to the
/// identity within `tol` relative Frobenius deviation) for every bipartition
/// with |inputs| <= |outputs|.  All legs must share one dimension.
bool is_perfect(const DenseTensor& t, double tol = 1e-10);

/// Same, restricted to cyclically contiguous bipartitions in the stored
/// leg order.
bool is_block_perfect(const DenseTensor& t, double tol = 1e-10);

}  // namespace holo

#endif
