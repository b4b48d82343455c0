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

#include "holocode/dense.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holo {

namespace {

int64_t shape_product(const std::vector<int64_t>& shape) {
  int64_t p = 1;
  for (int64_t d : shape) {
    if (d <= 0) throw std::invalid_argument("DenseTensor: leg dimension must be positive");
    if (p > kDenseMaxAmps / d) throw std::length_error("DenseTensor: amplitude guard exceeded");
    p *= d;
  }
  return p;
}

using CMatrix = Eigen::Matrix<cdbl, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

DenseTensor::DenseTensor(std::vector<int64_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_)) {}

DenseTensor::DenseTensor(std::vector<int64_t> shape, std::vector<cdbl> amplitudes)
    : shape_(std::move(shape)), data_(std::move(amplitudes)) {
  if (static_cast<int64_t>(data_.size()) != shape_product(shape_)) {
    throw std::invalid_argument("DenseTensor: amplitude count does not match shape");
  }
}

cdbl DenseTensor::at(const std::vector<int64_t>& index) const {
  if (index.size() != shape_.size()) throw std::invalid_argument("DenseTensor::at: rank mismatch");
  int64_t flat = 0;
  for (size_t i = 0; i < index.size(); ++i) {
    if (index[i] < 0 || index[i] >= shape_[i]) throw std::out_of_range("DenseTensor::at");
    flat = flat * shape_[i] + index[i];
  }
  return data_[flat];
}

double DenseTensor::norm() const {
  double acc = 0;
  for (const cdbl& a : data_) acc += std::norm(a);
  return std::sqrt(acc);
}

DenseTensor DenseTensor::conj() const {
  DenseTensor r(shape_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
  return r;
}

DenseTensor DenseTensor::permute(const std::vector<size_t>& perm) const {
  if (perm.size() != shape_.size()) throw std::invalid_argument("permute: rank mismatch");
  std::vector<int64_t> new_shape(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) new_shape[i] = shape_[perm[i]];
  DenseTensor r(new_shape);
  std::vector<int64_t> old_strides(shape_.size(), 1);
  for (size_t i = shape_.size() - 1; i-- > 0;) old_strides[i] = old_strides[i + 1] * shape_[i + 1];
  std::vector<int64_t> idx(perm.size(), 0);
  for (int64_t flat = 0; flat < size(); ++flat) {
    int64_t old_flat = 0;
    for (size_t i = 0; i < perm.size(); ++i) old_flat += idx[i] * old_strides[perm[i]];
    r.data_[flat] = data_[old_flat];
    for (size_t i = perm.size(); i-- > 0;) {
      if (++idx[i] < new_shape[i]) break;
      idx[i] = 0;
    }
  }
  return r;
}

DenseTensor DenseTensor::reshape(std::vector<int64_t> shape) const {
  DenseTensor r(std::move(shape), data_);
  return r;
}

DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     const std::vector<std::pair<size_t, size_t>>& pairs) {
  std::vector<bool> a_paired(a.rank(), false), b_paired(b.rank(), false);
  int64_t k_dim = 1;
  for (auto [la, lb] : pairs) {
    if (la >= a.rank() || lb >= b.rank()) throw std::invalid_argument("contract: leg out of range");
    if (a_paired[la] || b_paired[lb]) throw std::invalid_argument("contract: leg paired twice");
    if (a.shape()[la] != b.shape()[lb]) {
      throw std::invalid_argument("contract: paired legs have unequal dimensions");
    }
    a_paired[la] = true;
    b_paired[lb] = true;
    k_dim *= a.shape()[la];
  }
  std::vector<size_t> a_perm, b_perm;
  std::vector<int64_t> out_shape;
  for (size_t l = 0; l < a.rank(); ++l) {
    if (!a_paired[l]) {
      a_perm.push_back(l);
      out_shape.push_back(a.shape()[l]);
    }
  }
  for (auto [la, lb] : pairs) {
    a_perm.push_back(la);
    b_perm.push_back(lb);
  }
  for (size_t l = 0; l < b.rank(); ++l) {
    if (!b_paired[l]) {
      b_perm.push_back(l);
      out_shape.push_back(b.shape()[l]);
    }
  }
  shape_product(out_shape);  // resource guard
  DenseTensor ap = a.permute(a_perm);
  DenseTensor bp = b.permute(b_perm);
  int64_t m_dim = ap.size() / k_dim;
  int64_t n_dim = bp.size() / k_dim;
  DenseTensor out(out_shape);
  Eigen::Map<const CMatrix> ma(ap.amplitudes().data(), m_dim, k_dim);
  Eigen::Map<const CMatrix> mb(bp.amplitudes().data(), k_dim, n_dim);
  Eigen::Map<CMatrix> mo(out.amplitudes().data(), m_dim, n_dim);
  mo = ma * mb;
  return out;
}

void DenseState::check_normalized(double tol) const {
  if (std::abs(tensor.norm() - 1.0) > tol) {
    throw std::invalid_argument("DenseState: state is not normalized");
  }
}

double entanglement_entropy(const DenseState& state, const std::set<size_t>& region) {
  state.check_normalized();
  for (size_t s : region) {
    if (s >= state.num_sites()) throw std::invalid_argument("entanglement_entropy: bad site");
  }
  std::vector<size_t> perm(region.begin(), region.end());
  int64_t dim_a = 1;
  for (size_t s : perm) dim_a *= state.site_dim(s);
  for (size_t s = 0; s < state.num_sites(); ++s) {
    if (!region.count(s)) perm.push_back(s);
  }
  DenseTensor p = state.tensor.permute(perm);
  int64_t dim_b = p.size() / dim_a;
  Eigen::Map<const CMatrix> m(p.amplitudes().data(), dim_a, dim_b);
  CMatrix rho;
  if (dim_a <= dim_b) {
    rho = m * m.adjoint();
  } else {
    rho = (m.adjoint() * m).eval();
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho, Eigen::EigenvaluesOnly);
  double entropy = 0;
  for (double lam : solver.eigenvalues()) {
    if (lam > 1e-14) entropy -= lam * std::log(lam);
  }
  return entropy;
}

double mutual_information(const DenseState& state, const std::set<size_t>& a,
                          const std::set<size_t>& b) {
  for (size_t s : a) {
    if (b.count(s)) throw std::invalid_argument("mutual_information: regions overlap");
  }
  std::set<size_t> ab = a;
  ab.insert(b.begin(), b.end());
  double mi = entanglement_entropy(state, a) + entanglement_entropy(state, b) -
              entanglement_entropy(state, ab);
  if (mi < -1e-10) throw std::logic_error("mutual_information: negative value");
  return std::max(mi, 0.0);
}

std::vector<cdbl> apply_pauli(const PauliString& p, const std::vector<cdbl>& v) {
  uint32_t d = p.dimension();
  size_t n = p.num_sites();
  int64_t dim = 1;
  for (size_t s = 0; s < n; ++s) dim *= d;
  if (static_cast<int64_t>(v.size()) != dim) {
    throw std::invalid_argument("apply_pauli: state dimension mismatch");
  }
  std::vector<cdbl> out(v.size());
  cdbl coeff = p.coefficient();
  cdbl omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
  std::vector<int64_t> digits(n, 0);
  for (int64_t flat = 0; flat < dim; ++flat) {
    // (X^x Z^z)|t> = omega^(z t) |t + x>
    cdbl amp = coeff * v[flat];
    int64_t target = 0;
    for (size_t s = 0; s < n; ++s) {
      int64_t t = digits[s];
      if (p.z(s)) amp *= std::pow(omega, static_cast<double>(p.z(s) * t));
      target = target * d + (t + p.x(s)) % d;
    }
    out[target] += amp;
    for (size_t s = n; s-- > 0;) {
      if (++digits[s] < d) break;
      digits[s] = 0;
    }
  }
  return out;
}

namespace {

bool isometry_for_split(const DenseTensor& t, const std::vector<size_t>& inputs, double tol) {
  std::vector<bool> used(t.rank(), false);
  std::vector<size_t> perm = inputs;
  int64_t dim_in = 1;
  for (size_t l : inputs) {
    used[l] = true;
    dim_in *= t.shape()[l];
  }
  for (size_t l = 0; l < t.rank(); ++l) {
    if (!used[l]) perm.push_back(l);
  }
  DenseTensor p = t.permute(perm);
  int64_t dim_out = p.size() / dim_in;
  Eigen::Map<const CMatrix> m(p.amplitudes().data(), dim_in, dim_out);
  CMatrix gram = m * m.adjoint();  // M^dag M for the input->output map
  double alpha = gram.trace().real() / static_cast<double>(dim_in);
  if (alpha <= 0) return false;
  CMatrix dev = gram - alpha * CMatrix::Identity(dim_in, dim_in);
  double rel = dev.norm() / (alpha * std::sqrt(static_cast<double>(dim_in)));
  return rel <= tol;
}

void check_uniform_legs(const DenseTensor& t) {
  if (t.rank() == 0) throw std::invalid_argument("perfection check: rank-0 tensor");
  for (int64_t d : t.shape()) {
    if (d != t.shape()[0]) {
      throw std::invalid_argument("perfection check: all legs must share one dimension");
    }
  }
  if (t.rank() > 16) throw std::length_error("perfection check: too many legs");
}

}  // namespace

bool is_perfect(const DenseTensor& t, double tol) {
  check_uniform_legs(t);
  size_t rank = t.rank();
  for (uint32_t mask = 1; mask < (1u << rank); ++mask) {
    size_t in_count = static_cast<size_t>(__builtin_popcount(mask));
    if (in_count == 0 || in_count > rank - in_count) continue;
    std::vector<size_t> inputs;
    for (size_t l = 0; l < rank; ++l) {
      if (mask & (1u << l)) inputs.push_back(l);
    }
    if (!isometry_for_split(t, inputs, tol)) return false;
  }
  return true;
}

bool is_block_perfect(const DenseTensor& t, double tol) {
  check_uniform_legs(t);
  size_t rank = t.rank();
  for (size_t start = 0; start < rank; ++start) {
    for (size_t len = 1; 2 * len <= rank; ++len) {
      std::vector<size_t> inputs;
      for (size_t i = 0; i < len; ++i) inputs.push_back((start + i) % rank);
      std::sort(inputs.begin(), inputs.end());
      if (!isometry_for_split(t, inputs, tol)) return false;
    }
  }
  return true;
}

}  // namespace holo
