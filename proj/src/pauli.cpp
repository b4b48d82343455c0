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

#include "holocode/pauli.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace holo {

namespace {

int phase_modulus(uint32_t dim) { return dim == 2 ? 4 : 3; }

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

PauliString::PauliString(uint32_t dimension, size_t n)
    : dim_(dimension), phase_(0), x_(n, 0), z_(n, 0) {
  if (dimension != 2 && dimension != 3) {
    throw std::invalid_argument("PauliString: dimension must be 2 or 3");
  }
}

PauliString PauliString::from_word(const std::string& word, uint32_t dimension) {
  std::vector<std::string> tokens;
  if (word.find(' ') == std::string::npos) {
    for (char c : word) tokens.emplace_back(1, c);
  } else {
    std::istringstream in(word);
    std::string t;
    while (in >> t) tokens.push_back(t);
  }
  PauliString p(dimension, tokens.size());
  for (size_t s = 0; s < tokens.size(); ++s) {
    const std::string& t = tokens[s];
    if (t == "I" || t == "1") continue;
    if (t == "Y") {
      p.x_[s] = 1;
      p.z_[s] = 1;
      if (dimension == 2) p.phase_ = mod(p.phase_ + 1, 4);  // Y = i X Z
      continue;
    }
    size_t i = 0;
    uint32_t xe = 0, ze = 0;
    while (i < t.size() && t[i] == 'X') ++xe, ++i;
    while (i < t.size() && t[i] == 'Z') ++ze, ++i;
    if (i != t.size() || (xe == 0 && ze == 0)) {
      throw std::invalid_argument("PauliString: bad token '" + t + "'");
    }
    p.x_[s] = static_cast<uint8_t>(xe % dimension);
    p.z_[s] = static_cast<uint8_t>(ze % dimension);
  }
  return p;
}

PauliString PauliString::single(uint32_t dimension, size_t n, size_t site,
                                uint32_t x_exp, uint32_t z_exp) {
  PauliString p(dimension, n);
  p.x_[site] = static_cast<uint8_t>(x_exp % dimension);
  p.z_[site] = static_cast<uint8_t>(z_exp % dimension);
  return p;
}

std::complex<double> PauliString::coefficient() const {
  if (dim_ == 2) {
    static const std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return units[phase_];
  }
  double a = 2.0 * std::numbers::pi * phase_ / 3.0;
  return {std::cos(a), std::sin(a)};
}

void PauliString::mul_phase_unit(int exponent) {
  phase_ = mod(phase_ + exponent, phase_modulus(dim_));
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (dim_ != rhs.dim_ || num_sites() != rhs.num_sites()) {
    throw std::invalid_argument("PauliString: dimension/length mismatch");
  }
  PauliString r(dim_, num_sites());
  // Site-wise (X^xa Z^za)(X^xb Z^zb) = w^(za*xb) X^(xa+xb) Z^(za+zb),
  // with w = -1 = i^2 for qubits and w = omega for qutrits.
  int w_steps = 0;
  for (size_t s = 0; s < x_.size(); ++s) {
    w_steps += z_[s] * rhs.x_[s];
    r.x_[s] = static_cast<uint8_t>((x_[s] + rhs.x_[s]) % dim_);
    r.z_[s] = static_cast<uint8_t>((z_[s] + rhs.z_[s]) % dim_);
  }
  int unit_steps = (dim_ == 2) ? 2 * w_steps : w_steps;
  r.phase_ = mod(phase_ + rhs.phase_ + unit_steps, phase_modulus(dim_));
  return r;
}

PauliString PauliString::inverse() const {
  PauliString b(dim_, num_sites());
  for (size_t s = 0; s < x_.size(); ++s) {
    b.x_[s] = static_cast<uint8_t>((dim_ - x_[s]) % dim_);
    b.z_[s] = static_cast<uint8_t>((dim_ - z_[s]) % dim_);
  }
  PauliString prod = (*this) * b;  // identity up to phase
  b.phase_ = mod(-prod.phase_, phase_modulus(dim_));
  return b;
}

int PauliString::symplectic_form(const PauliString& rhs) const {
  if (dim_ != rhs.dim_ || num_sites() != rhs.num_sites()) {
    throw std::invalid_argument("PauliString: dimension/length mismatch");
  }
  int acc = 0;
  for (size_t s = 0; s < x_.size(); ++s) {
    acc += z_[s] * rhs.x_[s] - rhs.z_[s] * x_[s];
  }
  return mod(acc, dim_);
}

size_t PauliString::weight() const {
  size_t w = 0;
  for (size_t s = 0; s < x_.size(); ++s) w += (x_[s] || z_[s]) ? 1 : 0;
  return w;
}

bool PauliString::is_identity() const { return weight() == 0; }

std::string PauliString::str() const {
  std::ostringstream out;
  if (dim_ == 2) {
    static const char* units[4] = {"", "i*", "-", "-i*"};
    out << units[phase_];
    for (size_t s = 0; s < x_.size(); ++s) {
      if (x_[s] && z_[s]) {
        out << "XZ";  // -iY
      } else if (x_[s]) {
        out << 'X';
      } else if (z_[s]) {
        out << 'Z';
      } else {
        out << 'I';
      }
    }
  } else {
    if (phase_) out << "w^" << phase_ << "*";
    for (size_t s = 0; s < x_.size(); ++s) {
      if (s) out << ' ';
      if (!x_[s] && !z_[s]) out << 'I';
      for (int t = 0; t < x_[s]; ++t) out << 'X';
      for (int t = 0; t < z_[s]; ++t) out << 'Z';
    }
  }
  return out.str();
}

std::complex<double> MajoranaMonomial::coefficient() const {
  static const std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[mod(phase_pow, 4)];
}

MajoranaMonomial MajoranaMonomial::operator*(const MajoranaMonomial& rhs) const {
  MajoranaMonomial r;
  r.phase_pow = mod(phase_pow + rhs.phase_pow, 4);
  r.modes.reserve(modes.size() + rhs.modes.size());
  size_t i = 0, j = 0;
  size_t swaps = 0;
  while (i < modes.size() && j < rhs.modes.size()) {
    if (modes[i] < rhs.modes[j]) {
      r.modes.push_back(modes[i++]);
    } else if (modes[i] > rhs.modes[j]) {
      swaps += modes.size() - i;
      r.modes.push_back(rhs.modes[j++]);
    } else {
      swaps += modes.size() - i - 1;  // bring the pair together, g^2 = 1
      ++i;
      ++j;
    }
  }
  while (i < modes.size()) r.modes.push_back(modes[i++]);
  while (j < rhs.modes.size()) {
    r.modes.push_back(rhs.modes[j++]);
  }
  if (swaps & 1) r.phase_pow = mod(r.phase_pow + 2, 4);
  return r;
}

std::string MajoranaMonomial::str() const {
  static const char* units[4] = {"", "i*", "-", "-i*"};
  std::ostringstream out;
  out << units[mod(phase_pow, 4)];
  if (modes.empty()) out << "1";
  for (uint32_t m : modes) out << "g" << m;
  return out.str();
}

PauliString monomial_to_pauli(const MajoranaMonomial& m, size_t n_sites) {
  PauliString acc(2, n_sites);
  acc.mul_phase_unit(m.phase_pow);
  for (uint32_t mode : m.modes) {
    size_t site = mode / 2;
    if (site >= n_sites) {
      throw std::invalid_argument("monomial_to_pauli: mode out of range");
    }
    PauliString g(2, n_sites);
    for (size_t s = 0; s < site; ++s) g = g * PauliString::single(2, n_sites, s, 0, 1);
    if (mode % 2 == 0) {
      g = g * PauliString::single(2, n_sites, site, 1, 0);  // X
    } else {
      PauliString y = PauliString::single(2, n_sites, site, 1, 1);
      y.mul_phase_unit(1);  // Y = i X Z
      g = g * y;
    }
    acc = acc * g;
  }
  return acc;
}

MajoranaMonomial jordan_wigner(const PauliString& p) {
  if (p.dimension() != 2) {
    throw std::invalid_argument("jordan_wigner: qubit Pauli strings only");
  }
  size_t n = p.num_sites();
  // Solve for the mode set top site down: with a = [mode 2s in S],
  // b = [mode 2s+1 in S] and t the mode-count parity of all higher sites,
  // the site pattern is x_s = a^b, z_s = b^t.
  std::vector<uint32_t> modes;
  int t = 0;
  std::vector<std::pair<int, int>> ab(n);
  for (size_t s_plus = n; s_plus-- > 0;) {
    int b = (p.z(s_plus) ^ t) & 1;
    int a = (p.x(s_plus) ^ b) & 1;
    ab[s_plus] = {a, b};
    t ^= a ^ b;
  }
  for (size_t s = 0; s < n; ++s) {
    if (ab[s].first) modes.push_back(static_cast<uint32_t>(2 * s));
    if (ab[s].second) modes.push_back(static_cast<uint32_t>(2 * s + 1));
  }
  MajoranaMonomial m{modes, 0};
  PauliString rebuilt = monomial_to_pauli(m, n);
  // The binary pattern matches by construction; fix the exact phase.
  m.phase_pow = mod(p.phase_exponent() - rebuilt.phase_exponent(), 4);
  for (size_t s = 0; s < n; ++s) {
    if (rebuilt.x(s) != p.x(s) || rebuilt.z(s) != p.z(s)) {
      throw std::logic_error("jordan_wigner: mode-set reconstruction failed");
    }
  }
  return m;
}

}  // namespace holo
