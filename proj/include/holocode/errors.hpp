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

#ifndef HOLOCODE_ERRORS_HPP
#define HOLOCODE_ERRORS_HPP

#include <stdexcept>

namespace holo {

/// Invalid geometry (non-hyperbolic Schlafli symbol and friends).  CLI exit 2.
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Refused because a size ceiling would be exceeded.  CLI exit 3.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Refused because an exhaustive search guard would be exceeded.  CLI exit 4.
struct SearchLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input state lies outside the code space.
struct CodeSpaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace holo

#endif
