// Copyright 2026 The Acorn Authors
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
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "gtest/gtest.h"

namespace acorn {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = absl::StrCat(ACORN_CLI, " ", args, " 2>&1");
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Data(const char* file) { return absl::StrCat(ACORN_DATA_DIR, "/", file); }

TEST(CliTest, VerifyExitCodes) {
  CliRun r = Cli(absl::StrCat("verify ", Data("five_router_lp.air"), " --prop reach:R5"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("Verified"), std::string::npos);

  r = Cli(absl::StrCat("verify ", Data("five_router_lp.air"), " --prop isolate:R5"));
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("Violated"), std::string::npos);

  r = Cli(absl::StrCat("verify ", Data("five_router_lp_filtered.air"),
                       " --prop reach:R5 --refine none"));
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(r.out.find("FalsePositive"), std::string::npos);

  r = Cli(absl::StrCat("verify ", Data("five_router_lp.air"), " --prop reach:NOPE"));
  EXPECT_EQ(r.code, 2) << r.out;
  r = Cli("verify /nonexistent.air --prop reach:R5");
  EXPECT_EQ(r.code, 2) << r.out;
}

TEST(CliTest, GenFatTree) {
  CliRun r = Cli("gen fattree --k 10 --policy valley-free");
  ASSERT_EQ(r.code, 0) << r.out;
  size_t nodes = 0;
  for (absl::string_view line : absl::StrSplit(r.out, '\n')) {
    if (absl::StartsWith(line, "NODES ")) nodes += std::count(line.begin(), line.end(), ' ');
  }
  EXPECT_EQ(nodes, 125u);
  EXPECT_NE(Cli("gen fattree --k 3").code, 0);
}

TEST(CliTest, GenZooAndAsParseBack) {
  const std::string dir = ::testing::TempDir();
  const std::string gml = absl::StrCat(dir, "/acorn_cli_zoo.gml");
  ASSERT_EQ(Cli(absl::StrCat("gen zoo --shape VinaREN --gml -o ", gml)).code, 0);
  CliRun r = Cli(absl::StrCat("verify ", gml, " --prop reachall"));
  EXPECT_EQ(r.code, 0) << r.out;
  const std::string air = absl::StrCat(dir, "/acorn_cli_as.air");
  ASSERT_EQ(Cli(absl::StrCat("gen as --nodes 12 --seed 4 -o ", air)).code, 0);
  r = Cli(absl::StrCat("verify ", air, " --prop notransit"));
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(CliTest, BenchWritesCsv) {
  CliRun r = Cli("bench --k 4,8,12 --levels star,concrete --policies shortest-path");
  ASSERT_EQ(r.code, 0) << r.out;
  std::vector<std::string> lines =
      absl::StrSplit(r.out, '\n', absl::SkipEmpty());
  ASSERT_GE(lines.size(), 7u) << r.out;
  EXPECT_EQ(lines[0], "name,nodes,edges,property,level,backend,status,seconds,refinements");
  for (size_t i = 1; i < lines.size(); ++i) {
    EXPECT_NE(lines[i].find(",Verified,"), std::string::npos) << lines[i];
  }
}

TEST(CliTest, OracleReportsNoViolations) {
  CliRun r = Cli("oracle --seeds 500 --max-nodes 8");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(" 0 violations"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace acorn
