// Copyright 2026 The Tuplepack Authors
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

#ifndef TUPLEPACK_ERRORS_HPP_
#define TUPLEPACK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tuplepack {

// Every library error belongs to one of three classes. The CLI maps the
// class to its process exit code (success is 0).
enum class ErrorClass {
  kUsage = 2,       // malformed input text or arguments
  kConstraint = 3,  // a domain constraint was violated
  kIo = 4,          // file could not be read or written
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass error_class, const std::string& message)
      : std::runtime_error(message), class_(error_class) {}

  ErrorClass error_class() const noexcept { return class_; }
  int exit_code() const noexcept { return static_cast<int>(class_); }

 private:
  ErrorClass class_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorClass::kUsage, "parse error: " + message) {}
};

class NegativeCountError : public Error {
 public:
  explicit NegativeCountError(const std::string& message)
      : Error(ErrorClass::kUsage, "non-positive count: " + message) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message)
      : Error(ErrorClass::kConstraint, "dimension mismatch: " + message) {}
};

class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& message)
      : Error(ErrorClass::kConstraint, "empty input: " + message) {}
};

class OversizedItemError : public Error {
 public:
  explicit OversizedItemError(const std::string& message)
      : Error(ErrorClass::kConstraint, "oversized item: " + message) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& message)
      : Error(ErrorClass::kConstraint, "arithmetic overflow: " + message) {}
};

class InstanceTooLargeError : public Error {
 public:
  explicit InstanceTooLargeError(const std::string& message)
      : Error(ErrorClass::kConstraint, "instance too large: " + message) {}
};

class MismatchError : public Error {
 public:
  explicit MismatchError(const std::string& message)
      : Error(ErrorClass::kConstraint, "histogram mismatch: " + message) {}
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(const std::string& message)
      : Error(ErrorClass::kConstraint, "duplicate id: " + message) {}
};

class NoFeasibleCellError : public Error {
 public:
  explicit NoFeasibleCellError(const std::string& message)
      : Error(ErrorClass::kConstraint, "no feasible cell: " + message) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& message)
      : Error(ErrorClass::kConstraint, "bad grid shape: " + message) {}
};

class TimeoutError : public Error {
 public:
  explicit TimeoutError(const std::string& message)
      : Error(ErrorClass::kConstraint, "time budget exceeded: " + message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorClass::kIo, "i/o error: " + message) {}
};

}  // namespace tuplepack

#endif  // TUPLEPACK_ERRORS_HPP_
