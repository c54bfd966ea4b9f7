/*
 * Copyright 2026 The QCSA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qcsa/cli.h"

#include <gtest/gtest.h>
#include <stdlib.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcsa/io.h"

namespace qcsa::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv(kOutDirEnv);
    dir_ = fs::temp_directory_path() /
           ("qcsa_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    unsetenv(kOutDirEnv);
    fs::remove_all(dir_);
  }
  fs::path dir_;
};

TEST_F(CliTest, ConstructSmallBundle) {
  Result r = Call({"construct", "--p", "5", "--N", "2", "--L", "1",
                   "--alpha", "1,2", "--f", "3", "--u", "1,1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["v"], json::array({4, 1}));
  EXPECT_EQ(j["Qu"]["data"], json::array({3, 1, 1, 1}));
  EXPECT_EQ(j["Qv"]["data"], json::array({2, 4, 1, 1}));
  EXPECT_EQ(j["M_Q"]["data"], json::array({3, 2, 0, 0, 0, 0, 2, 2}));
  EXPECT_EQ(j["pi"]["image"], json::array({2, 4, 1, 3}));

  // The default points (0, 1) and pole 2 give the same matrices.
  Result d = Call({"construct", "--p", "5", "--N", "2", "--L", "1"});
  ASSERT_EQ(d.code, kOk);
  json k = json::parse(d.out);
  for (const char* key : {"v", "Qu", "Qv", "G", "H", "pi", "M_Q"}) {
    EXPECT_EQ(k[key], j[key]) << key;
  }
}

TEST_F(CliTest, ConstructParameterErrors) {
  EXPECT_EQ(Call({"construct", "--p", "3", "--N", "2", "--L", "1"}).code, kOk);
  EXPECT_EQ(Call({"construct", "--p", "5", "--N", "4", "--L", "3"}).code,
            kBadParams);
  EXPECT_EQ(Call({"construct", "--p", "6", "--N", "2", "--L", "1"}).code,
            kBadParams);
  EXPECT_EQ(Call({"construct", "--p", "7", "--N", "2", "--L", "1", "--alpha",
                  "1,1"})
                .code,
            kBadParams);
  EXPECT_EQ(Call({"construct", "--p", "7", "--N", "2", "--L", "1", "--u",
                  "1,0"})
                .code,
            kBadParams);
  EXPECT_EQ(Call({"construct", "--p", "7", "--N", "2", "--L", "1", "--u",
                  "1,1", "--beta", "1,2"})
                .code,
            kBadParams);
  EXPECT_EQ(Call({"construct", "--p", "7", "--N", "2", "--L", "1", "--alpha",
                  "1,9"})
                .code,
            kBadParams);
  EXPECT_EQ(Call({"construct", "--p", "7", "--N", "2"}).code, kBadParams);
  EXPECT_EQ(Call({"bogus"}).code, kBadParams);
  EXPECT_EQ(Call({"--help"}).code, kOk);
}

TEST_F(CliTest, ConstructHonoursOutputDirectory) {
  setenv(kOutDirEnv, dir_.c_str(), 1);
  Result r = Call({"construct", "--p", "13", "--N", "4", "--L", "2"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(dir_ / "construct.json"));
  fs::path explicit_out = dir_ / "sub" / "b.json";
  ASSERT_EQ(Call({"construct", "--p", "13", "--N", "4", "--L", "2", "--out",
                  explicit_out.string()})
                .code,
            kOk);
  EXPECT_EQ(ReadFile(explicit_out), ReadFile(dir_ / "construct.json"));
}

TEST_F(CliTest, VerifyRoundTrip) {
  fs::path bundle = dir_ / "bundle.json";
  ASSERT_EQ(Call({"construct", "--p", "13", "--N", "5", "--L", "2", "--out",
                  bundle.string()})
                .code,
            kOk);
  Result ok = Call({"verify", bundle.string()});
  EXPECT_EQ(ok.code, kOk) << ok.out;
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
  EXPECT_NE(ok.out.find("PASS selector_identity"), std::string::npos);

  json j = json::parse(ReadFile(bundle));

  json tampered = j;
  tampered["M_Q"]["data"][0] = (tampered["M_Q"]["data"][0].get<int>() + 1) % 13;
  WriteFile(dir_ / "m.json", tampered.dump());
  Result bad_m = Call({"verify", (dir_ / "m.json").string()});
  EXPECT_EQ(bad_m.code, kFailure);
  EXPECT_NE(bad_m.out.find("FAIL selector_identity"), std::string::npos);

  json zeroed = j;
  const int cols = zeroed["G"]["cols"];
  for (int r = 0; r < zeroed["G"]["rows"].get<int>(); ++r) {
    zeroed["G"]["data"][r * cols] = 0;
  }
  WriteFile(dir_ / "g.json", zeroed.dump());
  Result bad_g = Call({"verify", (dir_ / "g.json").string()});
  EXPECT_EQ(bad_g.code, kFailure);
  EXPECT_NE(bad_g.out.find("FAIL sso_rank"), std::string::npos);

  // A bare box document gets the generic checks only.
  json box = {{"M", j["M_Q"]}, {"G", j["G"]}, {"H", j["H"]}};
  WriteFile(dir_ / "box.json", box.dump());
  Result bare = Call({"verify", (dir_ / "box.json").string()});
  EXPECT_EQ(bare.code, kOk) << bare.out;
  EXPECT_EQ(bare.out.find("selector_identity"), std::string::npos);
}

TEST_F(CliTest, VerifyMalformedFile) {
  WriteFile(dir_ / "junk.json", "{not json");
  EXPECT_EQ(Call({"verify", (dir_ / "junk.json").string()}).code, kBadFile);
  WriteFile(dir_ / "empty.json", "{}");
  EXPECT_EQ(Call({"verify", (dir_ / "empty.json").string()}).code, kBadFile);
  EXPECT_EQ(Call({"verify", (dir_ / "missing.json").string()}).code, kBadFile);
}

TEST_F(CliTest, SimulateThousandTrials) {
  Result r = Call({"simulate", "--p", "13", "--N", "4", "--L", "2",
                   "--trials", "1000", "--seed", "7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    json j = json::parse(line);
    EXPECT_EQ(j["trial"], count);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["costs"]["qudits"], 4);
    EXPECT_EQ(j["costs"]["desired_symbols"], 4);
    ++count;
  }
  EXPECT_EQ(count, 1000u);
  EXPECT_NE(r.err.find("1000/1000 trials passed"), std::string::npos);
}

TEST_F(CliTest, SimulateEdgeCases) {
  Result zero = Call({"simulate", "--p", "13", "--N", "4", "--L", "2",
                      "--trials", "0"});
  EXPECT_EQ(zero.code, kOk);
  EXPECT_TRUE(zero.out.empty());

  Result reduced = Call({"simulate", "--p", "13", "--N", "4", "--L", "3",
                         "--trials", "5"});
  ASSERT_EQ(reduced.code, kOk) << reduced.err;
  EXPECT_NE(reduced.err.find("N'=2, L'=1"), std::string::npos);
  json first = json::parse(reduced.out.substr(0, reduced.out.find('\n')));
  EXPECT_EQ(first["params"]["N"], 2);
  EXPECT_EQ(first["costs"]["qudits"], 2);
  EXPECT_EQ(first["costs"]["desired_symbols"], 2);

  Result csv = Call({"simulate", "--p", "13", "--N", "4", "--L", "2",
                     "--trials", "2", "--format", "csv"});
  ASSERT_EQ(csv.code, kOk);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')),
            "trial,seed,pass,y,expected");
}

TEST_F(CliTest, SimulateIsDeterministic) {
  fs::path a = dir_ / "a.jsonl", b = dir_ / "b.jsonl";
  for (const auto& path : {a, b}) {
    ASSERT_EQ(Call({"simulate", "--p", "31", "--N", "7", "--L", "3",
                    "--trials", "300", "--seed", "99", "--out", path.string()})
                  .code,
              kOk);
  }
  EXPECT_FALSE(ReadFile(a).empty());
  EXPECT_EQ(ReadFile(a), ReadFile(b));
  Result other = Call({"simulate", "--p", "31", "--N", "7", "--L", "3",
                       "--trials", "300", "--seed", "100"});
  EXPECT_NE(other.out, ReadFile(a));
}

TEST_F(CliTest, RatesTable) {
  Result r = Call({"rates", "--N", "4:6", "--format", "csv"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string header, line;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "N,L,N',L',R_C,R_Q,dits_per_symbol,qudits_per_symbol,"
            "R_C_decimal,R_Q_decimal");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  EXPECT_EQ(rows.size(), 3u + 4u + 5u);
  EXPECT_EQ(rows[0], "4,1,4,1,1/4,1/2,4,2,0.25,0.5");
  EXPECT_EQ(rows[2], "4,3,2,1,3/4,1,4/3,1,0.75,1");
  EXPECT_EQ(rows[9], "6,3,6,3,1/2,1,2,1,0.5,1");

  Result j = Call({"rates", "--N", "10", "--L", "7"});
  ASSERT_EQ(j.code, kOk);
  json table = json::parse(j.out);
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table[0]["N'"], 6);
  EXPECT_EQ(table[0]["R_Q"], "1");

  EXPECT_EQ(Call({"rates", "--N", "x:y"}).code, kBadParams);
  EXPECT_EQ(Call({"rates"}).code, kOk);
}

}  // namespace
}  // namespace qcsa::cli
