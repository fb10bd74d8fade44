// Copyright 2026 The qdiadd Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qdiadd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown cell kind or catalog lookup failure.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Cell evaluated with the wrong number of inputs.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Malformed netlist text. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Invalid generator or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Netlist rejected by an analysis that requires a valid netlist.
class InvalidNetlistError : public Error {
 public:
  using Error::Error;
};

/// Simulation could not be set up or a phase failed in a way that is not a
/// monitor finding (bad vector width, missing ports).
class SimulationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdiadd
