// Copyright 2026 The perfcodes Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace perfcodes {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input exceeds a materialization or search bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. The message carries the source name and line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments violate an operation's precondition (length mismatch, etc).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A construction refused its inputs (non-perfect component, bad lambda).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// No propelinear structure could be built or a structure failed a check.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// The permutation assignment is not forced by the code (nontrivial Sym(C)).
class AmbiguityError : public StructureError {
 public:
  using StructureError::StructureError;
};

/// A recipe references an external base code that was not supplied.
class MissingBaseError : public Error {
 public:
  explicit MissingBaseError(std::string tag)
      : Error("missing base code for tag '" + tag + "'"), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

}  // namespace perfcodes
