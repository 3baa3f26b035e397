#include "commands.hpp"

#include "nodal/certificate_io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace nodal::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nodaldiff_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, Normalize) {
  EXPECT_EQ(cmd_normalize("d t"), "t d + 1");
  EXPECT_EQ(cmd_normalize("t d"), "t d");
  EXPECT_EQ(cmd_normalize("d^2 t^2"), "t^2 d^2 + 4 t d + 2");
  const CliRun r = invoke({"normalize", "d t"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "t d + 1\n");
  const CliRun bad = invoke({"normalize", "d +"});
  EXPECT_EQ(bad.code, kInvalidInput);
  EXPECT_NE(bad.err.find("1:4"), std::string::npos);
}

TEST_F(CliTest, Apply) {
  EXPECT_EQ(cmd_apply("(t^2-1) d", "t^2-1"), "2 t^3 - 2 t");
  EXPECT_EQ(cmd_apply("1", "3 t^5 - 1/2"), "3 t^5 - 1/2");
  EXPECT_EQ(cmd_apply("(t^2-1) d^2", "(t^2-1)^2"), "12 t^4 - 16 t^2 + 4");
  EXPECT_EQ(invoke({"apply", "d", "t d"}).code, kInvalidInput);
}

TEST_F(CliTest, MemberExitCodes) {
  const CliRun da = invoke({"member", "--preset", "nodal-cubic", "DA", "(t^2-1) d"});
  EXPECT_EQ(da.code, kSuccess);
  EXPECT_NE(da.out.find("lambda = 0"), std::string::npos);
  EXPECT_NE(da.out.find("D' = d"), std::string::npos);
  EXPECT_EQ(invoke({"member", "--preset", "nodal-cubic", "DA", "d"}).code, kRefuted);
  EXPECT_EQ(invoke({"member", "--preset", "nodal-cubic", "ideal", "2", "2 t^3 - 2 t"}).code, kRefuted);
  EXPECT_EQ(invoke({"member", "--preset", "nodal-cubic", "ideal", "1", "2 t^3 - 2 t"}).code, kSuccess);
  const CliRun a = invoke({"member", "--factors", "t-1", "t+1", "A", "t^2 + 4"});
  EXPECT_EQ(a.code, kSuccess);
  EXPECT_NE(a.out.find("lambda = 5"), std::string::npos);
  EXPECT_EQ(invoke({"member", "--preset", "nodal-cubic", "A", "t"}).code, kRefuted);
}

TEST_F(CliTest, InvalidCurveInput) {
  EXPECT_EQ(invoke({"member", "--factors", "t-1", "t-1", "DA", "d"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"member", "--factors", "t-1", "DA", "d"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"member", "DA", "d"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"member", "--preset", "cusp", "DA", "d"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"member", "--preset", "nodal-cubic", "--factors", "t", "t-1", "DA", "d"}).code,
            kInvalidInput);
  EXPECT_EQ(invoke({"lemma", "--factors", "t^2", "t-1", "--strict-irreducible", "2"}).code, kInvalidInput);
  const CliRun loose = invoke({"lemma", "--factors", "t^2", "t-1", "2"});
  EXPECT_EQ(loose.code, kSuccess);
  EXPECT_NE(loose.err.find("reducible"), std::string::npos);
  EXPECT_EQ(invoke({"member", "--preset", "nodal-cubic", "DA", "(d"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"member", "--preset", "nodal-cubic", "ideal", "x", "t"}).code, kInvalidInput);
}

TEST_F(CliTest, Lemma) {
  const CliRun one = invoke({"lemma", "--factors", "t-1", "t+1", "1"});
  EXPECT_EQ(one.code, kSuccess);
  EXPECT_NE(one.out.find("500/500 samples in I"), std::string::npos);
  const CliRun two = invoke({"lemma", "--preset", "nodal-cubic", "2"});
  EXPECT_EQ(two.code, kSuccess);
  EXPECT_NE(two.out.find("g        = t^2 - 1"), std::string::npos);
  EXPECT_NE(two.out.find("not in I^2"), std::string::npos);
  const CliRun three = invoke({"lemma", "--preset", "nodal-cubic", "3"});
  EXPECT_EQ(three.code, kSuccess);
  EXPECT_NE(three.out.find("g        = t^4 - 2 t^2 + 1"), std::string::npos);
  EXPECT_NE(three.out.find("12 t^4 - 16 t^2 + 4"), std::string::npos);
  EXPECT_EQ(invoke({"lemma", "--preset", "nodal-cubic", "4"}).code, kInvalidInput);
}

TEST_F(CliTest, RefuteAndVerify) {
  const std::string loc = path("loc.json");
  const CliRun r = invoke({"refute", "--preset", "nodal-cubic", "locproj", "--out", loc});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(parse_certificate(slurp(loc)).claim, Claim::NotLocallyProjective);
  EXPECT_EQ(invoke({"verify", loc}).code, kSuccess);

  const std::string bia = path("bia.json");
  ASSERT_EQ(invoke({"refute", "--preset", "nodal-cubic", "bialgebroid", "--out", bia}).code, kSuccess);
  const auto doc = nlohmann::json::parse(slurp(bia));
  EXPECT_EQ(doc["claim"], "NoBialgebroid");
  EXPECT_EQ(invoke({"verify", bia}).code, kSuccess);

  const std::string second = path("second.json");
  ASSERT_EQ(invoke({"refute", "--factors", "t", "t-1", "locproj", "--out", second}).code, kSuccess);
  EXPECT_EQ(invoke({"verify", second}).code, kSuccess);

  const CliRun stdout_doc = invoke({"refute", "--preset", "nodal-cubic", "bialgebroid", "--example-operator"});
  EXPECT_EQ(stdout_doc.code, kSuccess);
  EXPECT_EQ(parse_certificate(stdout_doc.out).witness.op.to_string(), "t^2 d^2 - d^2");
  EXPECT_EQ(invoke({"refute", "--factors", "t", "t-1", "locproj", "--example-operator"}).code, kInvalidInput);
}

TEST_F(CliTest, VerifyFailures) {
  const std::string cert = path("c.json");
  ASSERT_EQ(invoke({"refute", "--preset", "nodal-cubic", "locproj", "--out", cert}).code, kSuccess);
  const std::string text = slurp(cert);

  auto doc = nlohmann::json::parse(text);
  doc["witness"]["polynomial"]["0"] = "-2/1";  // t^2 - 2 is not in I
  const std::string tampered = path("tampered.json");
  std::ofstream(tampered) << doc.dump(2);
  const CliRun t = invoke({"verify", tampered});
  EXPECT_EQ(t.code, kRefuted);
  EXPECT_NE(t.err.find("verification failed at check"), std::string::npos);

  const std::string truncated = path("truncated.json");
  std::ofstream(truncated) << text.substr(0, text.size() / 3);
  EXPECT_EQ(invoke({"verify", truncated}).code, kInvalidInput);

  EXPECT_EQ(invoke({"verify", path("missing.json")}).code, kIoFailure);

  // Hash-only tamper: change the description text.
  doc = nlohmann::json::parse(text);
  doc["checks"][0]["description"] = "edited";
  const std::string edited = path("edited.json");
  std::ofstream(edited) << doc.dump(2);
  const CliRun e = invoke({"verify", edited});
  EXPECT_EQ(e.code, kRefuted);
  EXPECT_NE(e.err.find("replay hash mismatch"), std::string::npos);
}

TEST_F(CliTest, RefuteIoFailureAndZeroBound) {
  EXPECT_EQ(invoke({"refute", "--preset", "nodal-cubic", "locproj", "--out", path("no/such/dir/c.json")}).code,
            kIoFailure);
  const CurveRing curve = nodal_cubic_preset();
  RefuteOptions options;
  options.bound = 0;
  // The constructed witness fires at a = b = f, so bound 0 already succeeds.
  EXPECT_EQ(cmd_refute(curve, RefuteTarget::Bialgebroid, options).exit_code, kSuccess);
  EXPECT_EQ(invoke({"refute", "--factors", "t", "t-1", "--bound", "0", "bialgebroid"}).code, kSuccess);
}

TEST_F(CliTest, DeterministicCertificates) {
  const std::string a = path("a.json");
  const std::string b = path("b.json");
  ASSERT_EQ(invoke({"refute", "--preset", "nodal-cubic", "bialgebroid", "--seed", "5", "--out", a}).code, kSuccess);
  ASSERT_EQ(invoke({"refute", "--preset", "nodal-cubic", "bialgebroid", "--seed", "5", "--out", b}).code, kSuccess);
  auto da = nlohmann::json::parse(slurp(a));
  auto db = nlohmann::json::parse(slurp(b));
  da.erase("created");
  db.erase("created");
  EXPECT_EQ(da.dump(), db.dump());
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kInvalidInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"refute", "--preset", "nodal-cubic", "hopf"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"--help"}).code, kSuccess);
}

}  // namespace
}  // namespace nodal::cli
