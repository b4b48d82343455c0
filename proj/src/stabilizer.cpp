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

#include "holocode/stabilizer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "holocode/errors.hpp"

namespace holo {

namespace {

using CMatrix = Eigen::Matrix<cdbl, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Row-reduced symplectic (x|z) matrix over GF(dim), for independence and
/// membership tests.
class SymplecticSpan {
 public:
  SymplecticSpan(const std::vector<PauliString>& ops, uint32_t dim, size_t n)
      : dim_(dim), cols_(2 * n) {
    for (const PauliString& p : ops) {
      std::vector<int> row(cols_);
      for (size_t s = 0; s < n; ++s) {
        row[s] = p.x(s);
        row[n + s] = p.z(s);
      }
      insert(row);
    }
  }

  size_t rank() const { return rows_.size(); }

  bool contains(const PauliString& p) const {
    size_t n = cols_ / 2;
    std::vector<int> row(cols_);
    for (size_t s = 0; s < n; ++s) {
      row[s] = p.x(s);
      row[n + s] = p.z(s);
    }
    reduce(row);
    return std::all_of(row.begin(), row.end(), [](int v) { return v == 0; });
  }

 private:
  void insert(std::vector<int> row) {
    reduce(row);
    for (size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0) {
        // normalize pivot to 1 (dim is prime)
        int inv = 1;
        while ((inv * row[c]) % static_cast<int>(dim_) != 1) ++inv;
        for (int& v : row) v = (v * inv) % static_cast<int>(dim_);
        pivots_.push_back(c);
        rows_.push_back(std::move(row));
        return;
      }
    }
  }

  void reduce(std::vector<int>& row) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      int factor = row[pivots_[r]] % static_cast<int>(dim_);
      if (factor == 0) continue;
      for (size_t c = 0; c < cols_; ++c) {
        row[c] = ((row[c] - factor * rows_[r][c]) % static_cast<int>(dim_) +
                  static_cast<int>(dim_)) %
                 static_cast<int>(dim_);
      }
    }
  }

  uint32_t dim_;
  size_t cols_;
  std::vector<std::vector<int>> rows_;
  std::vector<size_t> pivots_;
};

std::vector<cdbl> project_onto_eigenvalue_one(const PauliString& g,
                                              const std::vector<cdbl>& v) {
  uint32_t d = g.dimension();
  std::vector<cdbl> acc = v;
  std::vector<cdbl> pow = v;
  for (uint32_t t = 1; t < d; ++t) {
    pow = apply_pauli(g, pow);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += pow[i];
  }
  for (cdbl& a : acc) a /= static_cast<double>(d);
  return acc;
}

void normalize_with_phase(std::vector<cdbl>& v) {
  double norm = 0;
  for (const cdbl& a : v) norm += std::norm(a);
  norm = std::sqrt(norm);
  for (cdbl& a : v) a /= norm;
  for (const cdbl& a : v) {
    if (std::abs(a) > 1e-8) {
      cdbl u = std::conj(a) / std::abs(a);
      for (cdbl& b : v) b *= u;
      break;
    }
  }
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) {
    throw std::overflow_error("quantum_hamming_bound: value exceeds 64 bits");
  }
  return a * b;
}

}  // namespace

void StabilizerCode::validate() const {
  for (const PauliString& g : generators) {
    if (g.dimension() != dimension || g.num_sites() != n) {
      throw std::invalid_argument("StabilizerCode: generator shape mismatch");
    }
  }
  for (size_t i = 0; i < generators.size(); ++i) {
    for (size_t j = i + 1; j < generators.size(); ++j) {
      if (!generators[i].commutes_with(generators[j])) {
        throw std::invalid_argument("StabilizerCode: generators do not commute");
      }
    }
  }
  SymplecticSpan span(generators, dimension, n);
  if (span.rank() != n - k) {
    throw std::invalid_argument("StabilizerCode: generators are not independent of rank n-k");
  }
  if (logical_x.size() != k || logical_z.size() != k) {
    throw std::invalid_argument("StabilizerCode: need k logical X and Z operators");
  }
  for (size_t i = 0; i < k; ++i) {
    for (const PauliString& g : generators) {
      if (!logical_x[i].commutes_with(g) || !logical_z[i].commutes_with(g)) {
        throw std::invalid_argument("StabilizerCode: logicals must commute with generators");
      }
    }
    for (size_t j = 0; j < k; ++j) {
      int form = logical_z[i].symplectic_form(logical_x[j]);
      int want = (i == j) ? 1 : 0;
      if (form != want) {
        throw std::invalid_argument("StabilizerCode: wrong logical commutation pattern");
      }
    }
  }
}

StabilizerCode five_qubit_code() {
  StabilizerCode code;
  code.dimension = 2;
  code.n = 5;
  code.k = 1;
  code.name = "five_qubit";
  for (const char* w : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
    code.generators.push_back(PauliString::from_word(w));
  }
  code.logical_x = {PauliString::from_word("XXXXX")};
  code.logical_z = {PauliString::from_word("ZZZZZ")};
  code.validate();
  return code;
}

StabilizerCode three_qutrit_code() {
  StabilizerCode code;
  code.dimension = 3;
  code.n = 3;
  code.k = 1;
  code.name = "three_qutrit";
  code.generators = {PauliString::from_word("X X X", 3),
                     PauliString::from_word("Z Z Z", 3)};
  code.logical_x = {PauliString::from_word("I X XX", 3)};
  code.logical_z = {PauliString::from_word("Z I ZZ", 3)};
  code.validate();
  return code;
}

int code_distance(const StabilizerCode& code) {
  if (code.n > 12) {
    throw SearchLimitError("code_distance: exhaustive search guarded to n <= 12");
  }
  uint32_t d = code.dimension;
  size_t n = code.n;
  SymplecticSpan span(code.generators, d, n);
  size_t local_ops = static_cast<size_t>(d) * d - 1;

  auto next_odometer = [](std::vector<size_t>& v, size_t base) {
    for (size_t i = v.size(); i-- > 0;) {
      if (++v[i] < base) return true;
      v[i] = 0;
    }
    return false;
  };
  auto next_combination = [n](std::vector<size_t>& v) {
    size_t w = v.size();
    for (size_t i = w; i-- > 0;) {
      if (v[i] < n - (w - i)) {
        ++v[i];
        for (size_t j = i + 1; j < w; ++j) v[j] = v[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  // Enumerate supports of each weight via combinations, then all non-identity
  // site assignments; the first commuting non-member is the distance.
  for (size_t w = 1; w <= n; ++w) {
    std::vector<size_t> support(w);
    for (size_t i = 0; i < w; ++i) support[i] = i;
    do {
      std::vector<size_t> assign(w, 0);
      do {
        PauliString p(d, n);
        for (size_t i = 0; i < w; ++i) {
          size_t a = assign[i] + 1;  // skip identity
          p = p * PauliString::single(d, n, support[i], a % d, a / d);
        }
        bool commutes = true;
        for (const PauliString& g : code.generators) {
          if (!p.commutes_with(g)) {
            commutes = false;
            break;
          }
        }
        if (commutes && !span.contains(p)) return static_cast<int>(w);
      } while (next_odometer(assign, local_ops));
    } while (next_combination(support));
  }
  throw std::logic_error("code_distance: no logical operator found");
}

HammingBound quantum_hamming_bound(int n, int k, int d) {
  if (n < k || k < 0 || d < 1) {
    throw std::invalid_argument("quantum_hamming_bound: need n >= k >= 0, d >= 1");
  }
  if (n - k > 63 || n > 60) {
    throw std::overflow_error("quantum_hamming_bound: parameters exceed 64-bit range");
  }
  uint64_t lhs = 0;
  int radius = (d - 1) / 2;
  for (int m = 0; m <= radius; ++m) {
    uint64_t term = 1;  // 3^m * C(n, m)
    for (int i = 0; i < m; ++i) {
      term = checked_mul(term, static_cast<uint64_t>(n - i));
      term /= static_cast<uint64_t>(i + 1);
    }
    for (int i = 0; i < m; ++i) term = checked_mul(term, 3);
    lhs += term;
  }
  uint64_t rhs = uint64_t{1} << (n - k);
  return {lhs <= rhs, lhs, rhs};
}

bool singleton_bound(int n, int k, int d) {
  if (n < 1 || k < 0 || d < 1) {
    throw std::invalid_argument("singleton_bound: need n >= 1, k >= 0, d >= 1");
  }
  return n >= 2 * (d - 1) + k;
}

std::vector<std::vector<cdbl>> logical_basis_states(const StabilizerCode& code) {
  code.validate();
  uint32_t d = code.dimension;
  size_t n = code.n, k = code.k;
  int64_t dim = 1;
  for (size_t s = 0; s < n; ++s) {
    if (dim > kDenseMaxAmps / d) throw std::length_error("logical_basis_states: state too large");
    dim *= d;
  }

  // Zero-logical state: project a deterministic seed onto the +1 sector of
  // every generator and of every logical Z.
  std::vector<cdbl> zero;
  for (int64_t seed = 0; seed < dim; ++seed) {
    std::vector<cdbl> v(dim, cdbl{0, 0});
    v[seed] = 1;
    for (const PauliString& g : code.generators) v = project_onto_eigenvalue_one(g, v);
    for (const PauliString& zb : code.logical_z) v = project_onto_eigenvalue_one(zb, v);
    double norm = 0;
    for (const cdbl& a : v) norm += std::norm(a);
    if (norm > 1e-8) {
      zero = std::move(v);
      break;
    }
  }
  if (zero.empty()) throw std::invalid_argument("logical_basis_states: degenerate code space");
  normalize_with_phase(zero);

  int64_t logical_dim = 1;
  for (size_t i = 0; i < k; ++i) logical_dim *= d;
  std::vector<std::vector<cdbl>> basis;
  basis.reserve(logical_dim);
  for (int64_t label = 0; label < logical_dim; ++label) {
    std::vector<cdbl> v = zero;
    int64_t rem = label;
    for (size_t i = k; i-- > 0;) {
      int64_t e = rem % d;
      rem /= d;
      for (int64_t t = 0; t < e; ++t) v = apply_pauli(code.logical_x[i], v);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

DenseTensor encoding_tensor(const StabilizerCode& code) {
  std::vector<std::vector<cdbl>> basis = logical_basis_states(code);
  std::vector<int64_t> shape(code.k + code.n, code.dimension);
  DenseTensor t(shape);
  int64_t phys_dim = static_cast<int64_t>(basis[0].size());
  for (size_t label = 0; label < basis.size(); ++label) {
    for (int64_t p = 0; p < phys_dim; ++p) {
      t[static_cast<int64_t>(label) * phys_dim + p] = basis[label][p];
    }
  }
  return t;
}

DenseState three_qutrit_encode(const std::array<cdbl, 3>& logical) {
  double norm = std::norm(logical[0]) + std::norm(logical[1]) + std::norm(logical[2]);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("three_qutrit_encode: logical vector is not normalized");
  }
  std::vector<std::vector<cdbl>> basis = logical_basis_states(three_qutrit_code());
  std::vector<cdbl> v(27, cdbl{0, 0});
  for (size_t l = 0; l < 3; ++l) {
    for (size_t i = 0; i < 27; ++i) v[i] += logical[l] * basis[l][i];
  }
  return DenseState{DenseTensor({3, 3, 3}, std::move(v))};
}

std::array<cdbl, 3> three_qutrit_recover(const DenseState& state,
                                         std::array<size_t, 2> kept) {
  state.check_normalized();
  if (state.num_sites() != 3 || kept[0] >= 3 || kept[1] >= 3 || kept[0] == kept[1]) {
    throw std::invalid_argument("three_qutrit_recover: need 3 qutrits and two distinct kept sites");
  }
  size_t dropped = 3 - kept[0] - kept[1];
  std::vector<std::vector<cdbl>> basis = logical_basis_states(three_qutrit_code());

  // Code-space projector check.
  std::vector<cdbl> proj(27, cdbl{0, 0});
  for (const auto& b : basis) {
    cdbl amp{0, 0};
    for (size_t i = 0; i < 27; ++i) amp += std::conj(b[i]) * state.tensor[i];
    for (size_t i = 0; i < 27; ++i) proj[i] += amp * b[i];
  }
  double dev = 0;
  for (size_t i = 0; i < 27; ++i) dev += std::norm(proj[i] - state.tensor[i]);
  if (std::sqrt(dev) > 1e-10) {
    throw CodeSpaceError("outside code space / behind horizon");
  }

  // Unitary completion of the map from the kept pair to logical x junk:
  // with A_l the kept x dropped reshape of |l bar>, Knill-Laflamme gives
  // A_l^dag A_m = delta_lm C, and U = sum_l (|l> x I) (A_l C^(-1/2))^dag
  // maps the code sector to |logical> x junk.
  std::vector<size_t> perm = {kept[0], kept[1], dropped};
  auto reshaped = [&](const std::vector<cdbl>& v) {
    DenseTensor t = DenseTensor({3, 3, 3}, v).permute(perm);
    Eigen::Matrix<cdbl, 9, 3> m;
    for (int r = 0; r < 9; ++r) {
      for (int c = 0; c < 3; ++c) m(r, c) = t[r * 3 + c];
    }
    return m;
  };
  std::array<Eigen::Matrix<cdbl, 9, 3>, 3> a;
  for (size_t l = 0; l < 3; ++l) a[l] = reshaped(basis[l]);
  Eigen::Matrix3cd c_mat = a[0].adjoint() * a[0];
  for (size_t l = 0; l < 3; ++l) {
    for (size_t m = 0; m < 3; ++m) {
      Eigen::Matrix3cd want = (l == m) ? c_mat : Eigen::Matrix3cd::Zero();
      if ((a[l].adjoint() * a[m] - want).norm() > 1e-10) {
        throw std::logic_error("three_qutrit_recover: Knill-Laflamme condition violated");
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(c_mat);
  Eigen::Matrix3cd c_inv_half = Eigen::Matrix3cd::Zero();
  for (int i = 0; i < 3; ++i) {
    double lam = es.eigenvalues()[i];
    if (lam < 1e-12) throw std::logic_error("three_qutrit_recover: singular support");
    c_inv_half += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint() /
                  std::sqrt(lam);
  }
  Eigen::Matrix<cdbl, 9, 9> u = Eigen::Matrix<cdbl, 9, 9>::Zero();
  for (size_t l = 0; l < 3; ++l) {
    Eigen::Matrix<cdbl, 9, 3> p_l = a[l] * c_inv_half;
    Eigen::Matrix<cdbl, 9, 3> q_l = Eigen::Matrix<cdbl, 9, 3>::Zero();
    for (int j = 0; j < 3; ++j) q_l(3 * l + j, j) = 1;
    u += q_l * p_l.adjoint();
  }

  // Reduced state on the kept pair, rotated and traced over junk.
  Eigen::Matrix<cdbl, 9, 3> m_state = reshaped(state.tensor.amplitudes());
  Eigen::Matrix<cdbl, 9, 9> rho = m_state * m_state.adjoint();
  Eigen::Matrix<cdbl, 9, 9> sigma = u * rho * u.adjoint();
  Eigen::Matrix3cd sigma1 = Eigen::Matrix3cd::Zero();
  for (int l = 0; l < 3; ++l) {
    for (int m = 0; m < 3; ++m) {
      for (int j = 0; j < 3; ++j) sigma1(l, m) += sigma(3 * l + j, 3 * m + j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> top(sigma1);
  Eigen::Vector3cd alpha = top.eigenvectors().col(2);
  return {alpha[0], alpha[1], alpha[2]};
}

}  // namespace holo
