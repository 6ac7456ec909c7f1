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

#include "dm/io.hpp"

#include <gtest/gtest.h>

#include "dm/enumerate.hpp"
#include "dm/minors.hpp"

namespace dm {
namespace {

int error_line(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Parse, D1) {
  const auto d = parse(
      "elements: a b\nfeasible:\nfeasible: a\nfeasible: b\nfeasible: a b");
  EXPECT_EQ(d, catalog()[0]);
}

TEST(Parse, SingletonRankZero) {
  const auto d = parse("elements: a\nfeasible:");
  EXPECT_EQ(format_family(d), "{}");
}

TEST(Parse, CommentsBlanksAndCrlf) {
  const auto d = parse(
      "# header\r\n\r\nelements: a b   # two\r\nfeasible: b a\r\n"
      "  feasible:\t\r\nfeasible: a\nfeasible: b\n");
  EXPECT_EQ(d, catalog()[0]);
}

TEST(Parse, AxiomViolationNamesWitness) {
  try {
    parse(
        "elements: x y z\nfeasible:\nfeasible: x\nfeasible: y\n"
        "feasible: x y z");
    FAIL();
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("symmetric exchange fails"), std::string::npos) << msg;
    EXPECT_NE(msg.find("X="), std::string::npos);
    EXPECT_NE(msg.find("u="), std::string::npos);
  }
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_line("feasible: a\nelements: a"), 1);
  EXPECT_EQ(error_line("elements: a\nelements: a\nfeasible:"), 2);
  EXPECT_EQ(error_line("elements: a\nfeasible: b"), 2);
  EXPECT_EQ(error_line("elements: a\nfeasible: a a"), 2);
  EXPECT_EQ(error_line("elements: a\nfeasible:\nfeasible:"), 3);
  EXPECT_EQ(error_line("elements: a b\n\nfeasible: a\n# x\nfeasible: b a\n"
                       "feasible: a"),
            6);
  EXPECT_EQ(error_line("elements: a:b\nfeasible:"), 1);
  EXPECT_EQ(error_line("elements: a a\nfeasible:"), 1);
  EXPECT_EQ(error_line("elements: a\nbogus"), 2);
  EXPECT_EQ(error_line("Elements: a\nfeasible:"), 1);
  EXPECT_GT(error_line("feasible:"), 0);
  EXPECT_GT(error_line("elements: a\n"), 0);
  EXPECT_GT(error_line(""), 0);
  EXPECT_THROW(load_file("/nonexistent/file.dm"), InvalidArgument);
}

TEST(Serialize, Canonical) {
  EXPECT_EQ(serialize(catalog()[0]),
            "elements: a b\nfeasible:\nfeasible: a\nfeasible: b\n"
            "feasible: a b\n");
  const std::string messy = "elements: a b\nfeasible: b a\nfeasible:\n";
  const std::string once = serialize(parse(messy));
  EXPECT_EQ(serialize(parse(once)), once);
}

TEST(Serialize, RoundTrips) {
  for (const auto& d : catalog()) EXPECT_EQ(parse(serialize(d)), d);
  for (const auto& d : enumerate_all(3)) EXPECT_EQ(parse(serialize(d)), d);
}

}  // namespace
}  // namespace dm
