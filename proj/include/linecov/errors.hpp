// Copyright 2026 The linecov Authors
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

#ifndef LINECOV_ERRORS_HPP
#define LINECOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linecov {

// Coarse error classes; they map 1:1 onto the C ABI status codes and the
// CLI exit codes.
enum class Errc {
  io = 1,
  schema = 2,
  infeasible = 3,
  too_large = 4,
  invalid_argument = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(Errc::schema, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(Errc::io, what) {}
};

struct DisconnectedGraph : SchemaError {
  explicit DisconnectedGraph(const std::string& what) : SchemaError(what) {}
};

struct NegativeCost : SchemaError {
  explicit NegativeCost(const std::string& what) : SchemaError(what) {}
};

struct MissingServiceValues : SchemaError {
  explicit MissingServiceValues(const std::string& what) : SchemaError(what) {}
};

struct UnreachablePair : Error {
  explicit UnreachablePair(const std::string& what) : Error(Errc::internal, what) {}
};

struct WindExceedsAirspeed : Error {
  explicit WindExceedsAirspeed(const std::string& what) : Error(Errc::invalid_argument, what) {}
};

struct GeometryError : Error {
  explicit GeometryError(const std::string& what) : Error(Errc::invalid_argument, what) {}
};

struct InfeasibleEdge : Error {
  explicit InfeasibleEdge(const std::string& what) : Error(Errc::infeasible, what) {}
};

struct InfeasibleInstance : Error {
  explicit InfeasibleInstance(const std::string& what) : Error(Errc::infeasible, what) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(Errc::too_large, what) {}
};

struct KTooLarge : TooLarge {
  explicit KTooLarge(const std::string& what) : TooLarge(what) {}
};

struct TooManyVariables : TooLarge {
  explicit TooManyVariables(const std::string& what) : TooLarge(what) {}
};

}  // namespace linecov

#endif  // LINECOV_ERRORS_HPP
