//  Copyright 2026 The graphemb Authors. All Rights Reserved.
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "json.hpp"

namespace graphemb {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("graphemb_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(GRAPHEMB_CLI) + " " + args + " > " + (dir_ / "stdout").string() + " 2> " +
                            (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) {
    fs::create_directories((dir_ / name).parent_path());
    std::ofstream(dir_ / name) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::vector<std::string> lines(const std::string& name) const {
    std::vector<std::string> out;
    std::istringstream in(read(name));
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
  }

  static std::size_t fields(const std::string& line, char sep) {
    std::size_t n = 1;
    for (char c : line) n += c == sep;
    return n;
  }

  fs::path dir_;
};

const std::string kKarate = testing::data_path("karate.edgelist");
const std::string kLabels = testing::data_path("karate.labels");

TEST_F(CliTest, EmbedDeepWalkWritesArtifacts) {
  ASSERT_EQ(run("embed --method deepwalk --edges " + kKarate + " -L 16 --num-walks 2 --walk-length 20 --out " +
                path("dw")),
            0)
      << read("stderr");
  std::vector<std::string> emb = lines("dw/embedding.txt");
  ASSERT_EQ(emb.size(), 35u);
  EXPECT_EQ(emb[0], "34 16");
  EXPECT_EQ(fields(emb[1], ' '), 17u);
  EXPECT_EQ(lines("dw/ids.tsv").size(), 35u);
  json config = json::parse(read("dw/config.json"));
  EXPECT_EQ(config["method"], "deepwalk");

  // Same arguments, same bytes.
  ASSERT_EQ(run("embed --method deepwalk --edges " + kKarate + " -L 16 --num-walks 2 --walk-length 20 --out " +
                path("dw2")),
            0);
  EXPECT_EQ(read("dw/embedding.txt"), read("dw2/embedding.txt"));
  EXPECT_EQ(read("dw/config.json"), read("dw2/config.json"));

  ASSERT_EQ(run("eval --task cluster --embedding " + path("dw/embedding.txt") + " --labels " + kLabels), 0)
      << read("stderr");
  json report = json::parse(read("stdout"));
  EXPECT_EQ(report["task"], "cluster");
  for (const char* key : {"inertia", "silhouette", "nmi", "accuracy"}) EXPECT_TRUE(report["metrics"].contains(key));

  ASSERT_EQ(run("project --embedding " + path("dw/embedding.txt") + " --out " + path("coords.tsv")), 0);
  std::vector<std::string> coords = lines("coords.tsv");
  ASSERT_EQ(coords.size(), 35u);
  EXPECT_EQ(coords[0], "id\tx\ty");
}

TEST_F(CliTest, EmbedGaussianWritesVarianceArtifacts) {
  ASSERT_EQ(run("embed --method g2g --one-hot --edges " + kKarate + " -L 4 --epochs 5 --out " + path("g")), 0)
      << read("stderr");
  std::vector<std::string> emb = lines("g/gaussian.txt");
  ASSERT_EQ(emb.size(), 35u);
  EXPECT_EQ(emb[0], "34 4");
  EXPECT_EQ(fields(emb[1], ' '), 5u);
  std::vector<std::string> var = lines("g/variances.csv");
  EXPECT_EQ(var[0], "epoch,dim,mean_sigma");
  EXPECT_EQ(var.size(), 1u + 5u * 2u);
  for (const char* f : {"train_edges.txt", "val_pairs.txt", "test_pairs.txt", "ids.tsv", "config.json"})
    EXPECT_TRUE(fs::exists(dir_ / "g" / f)) << f;

  ASSERT_EQ(run("project --gaussian --embedding " + path("g/gaussian.txt") + " --out " + path("coords.tsv")), 0);
  std::vector<std::string> coords = lines("coords.tsv");
  EXPECT_EQ(coords[0], "id\tx\ty\tuncertainty");
  EXPECT_EQ(fields(coords[1], '\t'), 4u);

  ASSERT_EQ(run("eval --task linkpred --gaussian --embedding " + path("g/gaussian.txt") + " --pairs " +
                path("g/test_pairs.txt")),
            0)
      << read("stderr");
  json report = json::parse(read("stdout"));
  EXPECT_TRUE(report["metrics"].contains("auc"));
}

TEST_F(CliTest, LinkPredictionOnSeparableFixture) {
  write("emb.txt", "4 2\na 1 0\nb 1 0\nc 0 1\nd 0 1\n");
  write("pairs.txt", "a b 1\nc d 1\na c 0\nb d 0\n");
  ASSERT_EQ(run("eval --task linkpred --embedding " + path("emb.txt") + " --pairs " + path("pairs.txt") + " --out " +
                path("report.json")),
            0)
      << read("stderr");
  json report = json::parse(read("report.json"));
  EXPECT_EQ(report["metrics"]["auc"].get<double>(), 1.0);
  EXPECT_EQ(report["metrics"]["ap"].get<double>(), 1.0);
}

TEST_F(CliTest, StabilityOnHandFixture) {
  write("snaps/0.txt", "a b\nb c\n");
  write("snaps/1.txt", "a b\nb c\na c\n");
  write("snaps/2.txt", "a b\na c\nc d\n");
  write("f0.txt", "4 1\na 1\nb 2\nc 2\nd 5\n");
  write("f1.txt", "4 1\na 1\nb 2\nc 4\nd 7\n");
  write("f2.txt", "4 1\na 3\nb 2\nc 4\nd 0\n");
  ASSERT_EQ(run("stability --snapshots " + path("snaps") + " --embeddings " + path("f0.txt") + " " + path("f1.txt") +
                " " + path("f2.txt")),
            0)
      << read("stderr");
  json report = json::parse(read("stdout"));
  const double r0 = (2.0 / 3.0) / (std::sqrt(2.0) / 2.0);
  const double r1 = (2.0 / std::sqrt(21.0)) / (std::sqrt(2.0) / std::sqrt(6.0));
  EXPECT_NEAR(report["metrics"]["stability_constant"].get<double>(), std::abs(r0 - r1), 1e-9);
}

TEST_F(CliTest, ErrorsMapToExitCodes) {
  EXPECT_EQ(run("embed --method word2vec --edges " + kKarate + " --out " + path("x")), 2);
  EXPECT_EQ(run("embed --method g2g --edges " + kKarate + " --out " + path("x")), 2);
  EXPECT_EQ(run("embed --method g2g --one-hot -L 5 --edges " + kKarate + " --out " + path("x")), 2);
  EXPECT_EQ(run("embed --out " + path("x")), 2);
  write("bad.txt", "a b\nc\n");
  EXPECT_EQ(run("embed --method deepwalk --edges " + path("bad.txt") + " --out " + path("x")), 1);
  EXPECT_NE(read("stderr").find("line 2"), std::string::npos);
  EXPECT_EQ(run("eval --task linkpred --embedding " + path("missing.txt") + " --pairs " + path("missing.txt")), 1);
}

TEST_F(CliTest, KnowledgeGraphEmbedding) {
  write("kg.txt", "bob spouse kelly\nbob nationality usa\nkelly nationality usa\n");
  ASSERT_EQ(run("embed --method kg2e --triples " + path("kg.txt") + " -L 4 --epochs 3 --out " + path("kg")), 0)
      << read("stderr");
  EXPECT_EQ(lines("kg/gaussian.txt")[0], "3 4");
  EXPECT_EQ(lines("kg/relations.txt")[0], "2 4");
  EXPECT_EQ(lines("kg/variances.csv").size(), 1u + 3u * 2u);
}

}  // namespace
}  // namespace graphemb
