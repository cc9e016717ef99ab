// Copyright 2026 The commfn Authors
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

#ifndef COMMFN_ERRORS_HPP
#define COMMFN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "commfn/scenario.hpp"

namespace commfn {

struct Diagnostic {
  SourcePos pos;
  std::string message;
};

std::string to_string(const Diagnostic& d);

/// The document is not well-formed (syntax, wrong node shape, bad scalar).
class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  const SourcePos& pos() const { return pos_; }

 private:
  SourcePos pos_;
};

/// The document parsed but violates static rules. Carries every problem
/// found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// A replayed trace event was not enabled at its position. `index` is the
/// 0-based event index.
class NotEnabledAtStep : public std::runtime_error {
 public:
  NotEnabledAtStep(std::size_t index, const std::string& detail);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace commfn

#endif  // COMMFN_ERRORS_HPP
