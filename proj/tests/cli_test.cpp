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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace dm::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) {
  return std::string(DM_TEST_DATA_DIR) + "/" + name;
}

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ObstructD1) {
  const auto r = run_cli({"obstruct", data("d1.dm")});
  EXPECT_EQ(r.code, kPropertyFailed);
  EXPECT_EQ(r.out,
            "obstructed: yes\ntarget: D1\ndelete: {}\ncontract: {}\n"
            "map: a->a b->b\n");
}

TEST(Cli, VerifyT2) {
  const auto r = run_cli({"verify", "-n", "3", "--theorem", "t2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "n: 3\nfamilies: 255\ndelta-matroids: 155\n"
            "t2: checked 1240 failed 0\nresult: pass\n");
}

TEST(Cli, MinWidthTwistD3) {
  const auto r = run_cli({"min-width-twist", data("d3.dm")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "twist: {}\nwidth: 2\n");
  const auto checked = run_cli({"min-width-twist", data("d3.dm"), "--check"});
  EXPECT_EQ(checked.code, kOk);
  EXPECT_NE(checked.out.find("width: 2\n"), std::string::npos);
  const auto json = run_cli({"--json", "min-width-twist", data("d3.dm")});
  EXPECT_EQ(json.out, "{\"twist\":[],\"width\":2}\n");
}

TEST(Cli, Validate) {
  const auto ok = run_cli({"validate", data("d1.dm")});
  EXPECT_EQ(ok.code, kOk);
  EXPECT_EQ(ok.out, "valid\nelements: 2\nfeasible sets: 4\n");
  const auto bad = run_cli({"validate", data("not_delta.dm")});
  EXPECT_EQ(bad.code, kInputError);
  EXPECT_EQ(bad.err,
            "error: line 2: symmetric exchange fails: X={} (line 2) "
            "Y={x,y,z} (line 5) u=z\n");
  EXPECT_EQ(run_cli({"validate", data("missing.dm")}).code, kInputError);
}

TEST(Cli, Info) {
  const auto r = run_cli({"info", data("d5.dm")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "elements: a b c\nfeasible sets: 5\nwidth: 2\neven: no\n"
            "matroid: no\nloops: {}\ncoloops: {}\n");
}

TEST(Cli, Operations) {
  EXPECT_EQ(run_cli({"twist", data("d3.dm"), "-A", "a"}).out,
            "elements: a b c\nfeasible: a\nfeasible: b\nfeasible: c\n"
            "feasible: a b c\n");
  EXPECT_EQ(run_cli({"minor", data("d5.dm"), "--delete", "c"}).out,
            "elements: a b\nfeasible:\nfeasible: a\nfeasible: a b\n");
  EXPECT_EQ(run_cli({"restrict", data("d3.dm"), "-A", "a,b"}).out,
            "elements: a b\nfeasible:\nfeasible: a b\n");
  EXPECT_EQ(run_cli({"rho", data("d3.dm"), "-A", "a,b"}).out, "rho: 3\n");
  EXPECT_EQ(run_cli({"twist", data("d3.dm"), "-A", "q"}).code, kInputError);
  EXPECT_EQ(
      run_cli({"minor", data("d5.dm"), "--delete", "a", "--contract", "a"})
          .code,
      kInputError);
}

TEST(Cli, CertifyAndObstruct) {
  const auto w = run_cli({"certify", data("width_one.dm")});
  EXPECT_EQ(w.code, kOk);
  EXPECT_EQ(w.out, "result: witness\ntwist: {a}\nwidth: 1\n");
  const auto m = run_cli({"certify", data("d3.dm")});
  EXPECT_EQ(m.code, kPropertyFailed);
  EXPECT_NE(m.out.find("target: D3"), std::string::npos);
  const auto free = run_cli({"obstruct", data("width_one.dm")});
  EXPECT_EQ(free.code, kOk);
  EXPECT_EQ(free.out, "obstructed: no\n");
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(run_cli({"enumerate", "-n", "1"}).out,
            "{}\n{e1}\n{} {e1}\ncount: 3\n");
  EXPECT_EQ(run_cli({"enumerate", "-n", "2", "--count-only"}).out,
            "count: 15\n");
  EXPECT_EQ(run_cli({"enumerate", "-n", "9"}).code, kInputError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kInputError);
  EXPECT_EQ(run_cli({"verify", "-n", "3", "--theorem", "zz"}).code,
            kInputError);
  EXPECT_EQ(run_cli({"verify", "-n", "4", "--theorem", "l1"}).code,
            kInputError);
}

}  // namespace
}  // namespace dm::cli
