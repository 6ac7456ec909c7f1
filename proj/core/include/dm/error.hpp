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

#ifndef DM_ERROR_HPP_
#define DM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (element outside the ground
// set, overlapping minor sets, ground set too large for a search, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  EmptyFamily() : Error("feasible family is empty") {}
};

// A procedure produced a result that failed its own consistency check.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dm

#endif  // DM_ERROR_HPP_
