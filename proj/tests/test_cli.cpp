#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "tits/registry.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  Outcome r;
  const std::string cmd = std::string(MAGMA_TITS_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / (std::string("magma_tits_") + name);
}

}  // namespace

TEST(Cli, MagicSquare) {
  Outcome r = run("magic-square");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("248"), std::string::npos);
  Outcome j = run("magic-square --format json");
  ASSERT_EQ(j.code, 0) << j.out;
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("passed"), true);
}

TEST(Cli, VerifyCoordinateAlgebraIsomorphism) {
  Outcome r = run("verify thm41 --jordan h3:cayley");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, VerifySuperReportsDimensions) {
  Outcome r = run("verify super");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("(17|14)"), std::string::npos);
  EXPECT_NE(r.out.find("(24|16)"), std::string::npos);
}

TEST(Cli, CorruptedCayleyTableFails) {
  Outcome r = run("verify csplit --input " + fixture("cayley_corrupted.json"));
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("witnesses"), std::string::npos);
  EXPECT_NE(r.out.find("u0 u1"), std::string::npos);
  Outcome ok = run("verify csplit");
  EXPECT_EQ(ok.code, 0) << ok.out;
}

TEST(Cli, ExportRoundTrip) {
  const auto path = temp_file("cayley.json");
  Outcome r = run("export cayley -o " + path.string());
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc.at("basis").size(), 8u);
  EXPECT_LE(doc.at("sc").size(), 64u);
  EXPECT_EQ(tits::SuperAlgebra::from_json(doc), tits::algebra_by_name("cayley"));
  std::filesystem::remove(path);
}

TEST(Cli, DecomposeTits) {
  Outcome r = run("decompose --lie tits:cayley:h3:ground --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("m_adjoint"), 13);
  EXPECT_EQ(doc.at("m_h"), 1);
  EXPECT_EQ(doc.at("m_trivial"), 8);
  EXPECT_EQ(doc.at("spans"), true);
}

TEST(Cli, CoordinateAlgebra) {
  Outcome r = run("coordinate-algebra --left cayley --jordan h3:ground");
  EXPECT_EQ(r.code, 0) << r.out;
  Outcome lie = run("coordinate-algebra --lie tits:cayley:h3:ground --action right");
  EXPECT_EQ(lie.code, 0) << lie.out;
  EXPECT_NE(lie.out.find("right action"), std::string::npos);
  EXPECT_EQ(run("coordinate-algebra --lie sl:3").code, 2);
}

TEST(Cli, Errors) {
  EXPECT_NE(run("magic-square --no-such-flag").code, 0);
  EXPECT_EQ(run("export no-such-algebra").code, 2);
  EXPECT_NE(run("").code, 0);
}
