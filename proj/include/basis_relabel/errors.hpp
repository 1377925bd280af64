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

#pragma once

#include <stdexcept>
#include <string>

namespace basis_relabel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element id outside the ground set of a view.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The caller asked for something that makes no sense (e.g. e in B for a
// fundamental circuit, k > n for a uniform matroid).
class UsageError : public Error {
 public:
  using Error::Error;
};

// An argument violates a documented precondition (not a basis, loops
// present, graph not 2-connected, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidStepError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Fewer than two disjoint paths where two were required.
class ConnectivityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace basis_relabel
