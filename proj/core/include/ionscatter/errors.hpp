// Copyright 2026 The ionscatter Authors.
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

#ifndef IONSCATTER_ERRORS_HPP
#define IONSCATTER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ionscatter {

/// Input data failed a structural or physical consistency check.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// A species file could not be read or parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File system failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a physical formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation exactly on a resonance.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Required atomic data missing from a species.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root or stationary point does not exist in the searched range.
class NoSolutionError : public std::runtime_error {
 public:
  NoSolutionError(const std::string& what, double best_value, double best_at)
      : std::runtime_error(what), best_value_(best_value), best_at_(best_at) {}
  double best_value() const { return best_value_; }
  double best_at() const { return best_at_; }

 private:
  double best_value_;
  double best_at_;
};

}  // namespace ionscatter

#endif
