// Copyright 2026 The FairSDP Authors.
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

#ifndef FAIRSDP_ERRORS_HPP_
#define FAIRSDP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fairsdp {

// Malformed or unreadable input/output files.
class FileError : public std::runtime_error {
 public:
  explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

// A solver failed: divergence, non-finite values, or no convergence
// within the iteration budget.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairsdp

#endif  // FAIRSDP_ERRORS_HPP_
