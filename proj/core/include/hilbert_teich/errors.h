// Copyright 2026 The hilbert-teich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef HILBERT_TEICH_ERRORS_H_
#define HILBERT_TEICH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hilbert_teich {

// Base class of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller passed something outside an operation's domain.  When the
// problem can be pinned to one facet, triangle, arc or corner, index() names
// it; otherwise it is -1.
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what, int index = -1)
      : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// A value the library produced (or was asked to accept) breaks a documented
// invariant, e.g. a corner length below the truncation height.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what, int index = -1)
      : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// An internal consistency check failed.  Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Monotone bracketing of a limit did not close before the horizon cap.
class HorizonExceededError : public Error {
 public:
  HorizonExceededError(const std::string& what, double bracket_width)
      : Error(what), bracket_width_(bracket_width) {}
  double bracket_width() const { return bracket_width_; }

 private:
  double bracket_width_;
};

}  // namespace hilbert_teich

#endif  // HILBERT_TEICH_ERRORS_H_
