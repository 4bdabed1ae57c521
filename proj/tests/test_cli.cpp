#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "basiskit/basiskit.hpp"

using namespace basiskit;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BASISKIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(BASISKIT_SAMPLES) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Repcheck, S3LeftShift) {
  const auto r = run("repcheck --input " + sample("s3_left_shift.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "representation: yes; variance: covariant; single transitive: yes")) << r.out;
}

TEST(Repcheck, TrivialClaimsMatch) {
  const auto r = run("repcheck --input " + sample("trivial_s3.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "effective: no; kernel: all of G")) << r.out;
}

TEST(Repcheck, MalformedTableIsAnInputError) {
  const auto r = run("repcheck --input " + sample("malformed_table.json"));
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_TRUE(contains(r.out, "ParseError")) << r.out;
  EXPECT_TRUE(contains(r.out, "row 1, column 1")) << r.out;
}

TEST(Repcheck, WrongClaimFails) {
  const auto r = run("repcheck --input " + sample("wrong_variance_claim.json"));
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_TRUE(contains(r.out, "actual covariant")) << r.out;
}

TEST(Repcheck, MissingFileAndBadFlags) {
  EXPECT_EQ(run("repcheck --input " + sample("does_not_exist.json")).code, 2);
  EXPECT_EQ(run("repcheck --input " + sample("s3_left_shift.json") + " --report yaml").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Orbit, Z4ShiftHasFourPoints) {
  const auto r = run("orbit --input " + sample("z4_shift.json") + " --point 0 --report json");
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = io::parse_text(r.out);
  EXPECT_EQ(j["result"]["orbit"].size(), 4u);
}

TEST(Orbit, Z2OnThreePointsPartition) {
  const auto r = run("orbit --input " + sample("z2_three_points.json") + " --point 0");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "partition: {0,1} {2}")) << r.out;
}

TEST(Orbit, RunawayGeneratorsHitTheCap) {
  const auto r = run("orbit --input " + sample("runaway_generators.json") + " --point [1,0] --cap 50");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_TRUE(contains(r.out, "EnumerationCapExceeded")) << r.out;
  EXPECT_TRUE(contains(r.out, "51")) << r.out;
}

TEST(Basis, GramSchmidt) {
  const auto r = run("basis gram-schmidt --approx --report json --input " + sample("gram_schmidt.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = io::parse_text(r.out);
  const auto b = io::basis_from_json<double>(j["result"]["basis"], "/basis");
  const double h = std::sqrt(0.5);
  EXPECT_TRUE(b.vectors().equals(Matrix<double>{{h, h}, {-h, h}}, 1e-12)) << r.out;
  EXPECT_LE(j["checks"][0]["max_residual"].get<double>(), 1e-9);
}

TEST(Basis, ChangeReturnsTheMatrix) {
  const auto r = run("basis change --report json --input " + sample("change_of_basis.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = io::parse_text(r.out);
  EXPECT_EQ(io::matrix_from_json<Rational>(j["result"]["element"], "/e"), (Matrix<Rational>{{1, 2}, {3, 4}}));
}

TEST(Basis, IdentityTransformEchoesInput) {
  const auto r = run("basis transform --report json --input " + sample("identity_transform.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = io::parse_text(r.out);
  const auto in = io::basis_from_json<Rational>(io::load_file(sample("identity_transform.json"))["basis"], "/basis");
  const auto out = io::basis_from_json<Rational>(j["result"]["basis"], "/basis");
  EXPECT_TRUE(out.equals(in, 0.0));
  EXPECT_EQ(j["result"]["coordinates"]["before"], j["result"]["coordinates"]["after"]);
}

TEST(Object, SwapElement) {
  const auto r = run("object --report json --input " + sample("object_swap.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = io::parse_text(r.out);
  EXPECT_EQ(j["result"]["object"]["coords"], io::parse_text(R"(["2", "1"])"));
  EXPECT_EQ(j["result"]["representative_before"], j["result"]["representative_after"]);
  EXPECT_EQ(j["result"]["residual"].get<double>(), 0.0);
}

TEST(Object, IdentityElementFromFlag) {
  const auto r = run("object --element [[1,0],[0,1]] --report json --input " + sample("object_swap.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = io::parse_text(r.out);
  EXPECT_EQ(j["result"]["object"]["coords"], io::parse_text(R"(["1", "2"])"));
}

TEST(Object, ScalarIsUnchanged) {
  const auto r = run("object --report json --input " + sample("scalar_object.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = io::parse_text(r.out);
  EXPECT_EQ(j["result"]["object"]["coords"], io::parse_text(R"(["7/3"])"));
}

TEST(Object, EmittedObjectReparses) {
  const auto r = run("object --report json --input " + sample("object_swap.json"));
  const auto j = io::parse_text(r.out);
  const auto obj = io::object_from_json<Rational>(j["result"]["object"], "/object");
  EXPECT_EQ(io::object_to_json(obj), j["result"]["object"]);
}

TEST(Selftest, DeterministicJson) {
  const auto a = run("selftest --seed 42 --report json");
  const auto b = run("selftest --seed 42 --report json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(io::parse_text(a.out)["schema"], "basiskit/1");
}
