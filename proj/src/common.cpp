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

#include "mdbst/common.hpp"

#include <cctype>

namespace mdbst {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw DomainError("malformed rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw DomainError("malformed rational literal: " + s);
  }
  if (q.get_den() == 0) {
    throw DomainError("rational with zero denominator: " + s);
  }
  q.canonicalize();
  return q;
}

}  // namespace mdbst
