#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "cext/cli.hpp"
#include "support.hpp"

namespace cext {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome tool(const std::string& args) {
  const std::string cmd = std::string(CEXT_TOOL_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

RunConfig config(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cext_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Run, LiftOfARelator) {
  RunConfig c = config("lift");
  c.word = "r3";
  const Report r = run(c);
  EXPECT_EQ(r.result["value"], 3);
  EXPECT_EQ(r.result["within_bound"], true);
}

TEST(Run, CancellationReportCarriesBothRatios) {
  RunConfig c = config("check-cancellation");
  const Report r = run(c);
  EXPECT_EQ(r.result["holds"], false);
  EXPECT_EQ(r.result["worst"]["ratio"], "61/328");
  EXPECT_EQ(r.result["worst_cross"]["ratio"], "1/8");
}

TEST(Run, BallOfRadiusTwo) {
  RunConfig c = config("ball");
  c.radius = 2;
  const Report r = run(c);
  EXPECT_EQ(r.result["size"], 257);
  EXPECT_EQ(r.result["words"].size(), 257u);
}

TEST(Run, WordProblemAndArea) {
  RunConfig c = config("word-problem");
  c.word = "t3 a2 t1- r2 t1 a2- t3- r1";
  EXPECT_EQ(run(c).result["trivial"], true);
  c.word = "a1 a2";
  EXPECT_EQ(run(c).result["trivial"], false);
  RunConfig a = config("area");
  a.word = "r2 r1-";
  a.emit_certificate = scratch("cert.json").string();
  const Report r = run(a);
  EXPECT_EQ(r.result["weight"], 8);
  EXPECT_EQ(r.result["verified"], true);
  const Json cert = read_json_file(a.emit_certificate);
  const AreaCertificate back = certificate_from_json(cert, *testing::family());
  EXPECT_TRUE(verify_certificate(back.word, back, *testing::family()));
}

TEST(Run, FiniteCommands) {
  RunConfig h = config("finite-h2");
  h.group = "cyclic:2xcyclic:2";
  EXPECT_EQ(run(h).result["invariant_factors"], Json::array({"2", "2"}));
  RunConfig t = config("finite-transfer");
  t.group = "cyclic:6";
  t.subgroup = "0,3";
  EXPECT_EQ(run(t).result["holds"], true);
  RunConfig a = config("finite-avg");
  a.group = "dihedral:4";
  EXPECT_EQ(run(a).result["holds"], true);
  RunConfig l = config("finite-linfty");
  l.group = "quaternion";
  l.coeff = "Z/2";
  EXPECT_EQ(run(l).result["holds"], true);
}

TEST(Run, CocycleFromFile) {
  const fs::path p = scratch("carry.json");
  std::ofstream(p) << R"({"values": [0, 0, 0, 1], "coefficients": "Z/2"})";
  RunConfig c = config("finite-linfty");
  c.cocycle = p.string();
  c.coeff = "Z/2";
  const Report r = run(c);
  EXPECT_EQ(r.result["items"][0]["points"], 8);
  EXPECT_EQ(r.result["holds"], true);
}

TEST(Run, ErrorsCarryStableCodes) {
  RunConfig c = config("lift");
  c.word = "a1";
  try {
    run(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTrivial);
  }
  RunConfig r = config("word-problem");
  r.word = "r1";
  r.randomize_reduction = true;
  EXPECT_THROW(run(r), Error);
  EXPECT_THROW(run(config("nonsense")), Error);
}

TEST(Emit, CanonicalAndDeterministic) {
  RunConfig c = config("probe");
  c.radius = 2;
  c.cap_slack = 4;
  c.pullback_max = 4;
  const fs::path a = scratch("a.json"), b = scratch("b.json");
  emit_report(run(c), a.string());
  emit_report(run(c), b.string());
  const std::string ta = slurp(a);
  EXPECT_EQ(ta, slurp(b));
  EXPECT_EQ(ta.find("duration"), std::string::npos);
  EXPECT_EQ(Json::parse(ta).dump(2) + "\n", ta);
}

TEST(Emit, DurationOnlyWithTiming) {
  RunConfig c = config("lift");
  c.word = "r1";
  c.timing = true;
  const Report r = run(c);
  ASSERT_TRUE(r.duration_seconds.has_value());
  EXPECT_NE(canonical_text(r).find("duration_seconds"), std::string::npos);
  Report stripped = r;
  stripped.duration_seconds.reset();
  c.timing = false;
  EXPECT_EQ(canonical_text(stripped), canonical_text(run(c)));
}

TEST(Emit, UnwritablePath) {
  try {
    emit_report(run([] {
                  RunConfig c = config("lift");
                  c.word = "r1";
                  return c;
                }()),
                "/nonexistent-dir/report.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

TEST(Tool, LiftPrintsTheValue) {
  const Outcome o = tool("lift r3 --alpha i");
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(Json::parse(o.out)["result"]["value"], 3);
}

TEST(Tool, UnknownCommandIsAUsageError) {
  const Outcome o = tool("frobnicate");
  EXPECT_EQ(o.status, 2);
  EXPECT_EQ(Json::parse(o.out)["error"]["code"], "Usage");
}

TEST(Tool, ModuleErrorsAreStructured) {
  const Outcome o = tool("lift a1");
  EXPECT_EQ(o.status, 1);
  EXPECT_EQ(Json::parse(o.out)["error"]["code"], "NotTrivial");
  const Outcome bad = tool("word-problem \"a1 q9\"");
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(Json::parse(bad.out)["error"]["code"], "UnknownToken");
}

TEST(Tool, RadiusGuard) {
  const Outcome o = tool("ball --radius 5");
  EXPECT_EQ(o.status, 1);
  EXPECT_EQ(Json::parse(o.out)["error"]["code"], "InvalidArgument");
}

TEST(Io, PresentationRoundTrip) {
  const Json fam = presentation_to_json(*testing::family());
  EXPECT_EQ(fam["family"], "paper");
  const Presentation back = presentation_from_json(fam);
  EXPECT_EQ(back.relator(7), paper_relator(7));
  const Json custom = {{"alphabet", {"x", "y"}}, {"relators", {"x y x- y-"}}};
  const Presentation p = presentation_from_json(custom);
  EXPECT_EQ(presentation_to_json(p), custom);
  EXPECT_THROW(presentation_from_json(Json{{"alphabet", {"x"}}}), Error);
}

TEST(Io, CochainRoundTrip) {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  const CochainVector f = cochain_from_json(Json::array({0, "1/2", -3}), g, CoefficientRing::rationals());
  EXPECT_EQ(f.degree, 1u);
  EXPECT_EQ(f.values[1], Rational(1, 2));
  const CochainVector back = cochain_from_json(cochain_to_json(f), g, CoefficientRing::integers());
  EXPECT_EQ(back, f);
  EXPECT_THROW(cochain_from_json(Json::array({0, 1}), g, CoefficientRing::integers()), Error);
}

}  // namespace
}  // namespace cext
