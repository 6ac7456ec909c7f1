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

// Text format for delta-matroids:
//
//   # comment
//   elements: a b c
//   feasible:
//   feasible: a b
//
// One `elements:` line, then one `feasible:` line per feasible set (an empty
// list is the empty set). Element order fixes bit positions. Canonical output
// lists feasible sets in ascending bitmask order, labels in element order.

#ifndef DM_IO_HPP_
#define DM_IO_HPP_

#include <string>
#include <string_view>

#include "dm/delta_matroid.hpp"

namespace dm {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Throws ParseError for malformed input, and for axiom violations (the
// message carries the witness triple).
DeltaMatroid parse(std::string_view text);

std::string serialize(const DeltaMatroid& d);

// Reads and parses a file; I/O failures raise InvalidArgument.
DeltaMatroid load_file(const std::string& path);

}  // namespace dm

#endif  // DM_IO_HPP_
