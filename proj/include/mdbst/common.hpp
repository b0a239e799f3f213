// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDBST_COMMON_HPP_
#define MDBST_COMMON_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mdbst {

using Rational = mpq_class;

using EdgeId = int;
using NodeId = int;
using VertexId = int;

/// Bad input to an operation: element outside a ground set, overlapping
/// grounds in a direct sum, unknown node ids, and the like.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration threshold was exceeded. Raised loudly instead of letting
/// an exponential loop run silently.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A runtime contract the algorithm guarantees was found violated. Carries a
/// dump of the offending state for debugging.
class InternalInvariantError : public std::logic_error {
 public:
  explicit InternalInvariantError(const std::string& what)
      : std::logic_error(what) {}
};

inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

/// Parses "p/q" or "p". Throws DomainError on malformed input or q = 0.
Rational rational_from_string(const std::string& s);

}  // namespace mdbst

#endif  // MDBST_COMMON_HPP_
