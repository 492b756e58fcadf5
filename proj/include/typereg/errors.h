// Copyright 2026 The typereg Authors
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

#ifndef TYPEREG_ERRORS_H_
#define TYPEREG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace typereg {

// Raised for malformed or inconsistent caller input: out-of-range indices,
// dimension mismatches, invalid distributions, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace typereg

#endif  // TYPEREG_ERRORS_H_
