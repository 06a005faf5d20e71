#include <jnrad/cli.hpp>
#include <jnrad/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jnrad;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("jnrad_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return path_ / name;
  }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "jnrad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kLinfSpace = R"({"field": "real", "dim": 2, "norm": {"kind": "lp", "r": "inf"}})";
const std::string kHilbertSpace = R"({"field": "complex", "dim": 2, "norm": {"kind": "lp", "r": 2}})";

std::string problem(const std::string& space, const std::string& tuple, const std::string& extra = "") {
  return R"({"space": )" + space + R"(, "tuple": )" + tuple + extra + "}";
}

std::string problems_dir() { return JNRAD_TEST_DATA; }

}  // namespace

TEST(Parse, MinimalFileDefaultsP) {
  TempDir dir;
  const auto f = dir.write("p.json", problem(kLinfSpace, R"({"d": 1, "matrices": [[[1, 0], [0, 0]]]})"));
  const auto prob = io::load_problem(f);
  ASSERT_TRUE(prob.tuple);
  EXPECT_EQ(prob.tuple->n(), 2);
  EXPECT_EQ(prob.tuple->d(), 1);
  EXPECT_EQ(prob.tuple->p(), 2.0);
}

TEST(Parse, POneRejected) {
  TempDir dir;
  const auto f = dir.write("p.json", problem(kLinfSpace, R"({"d": 1, "p": 1, "matrices": [[[1, 0], [0, 0]]]})"));
  try {
    io::load_problem(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Schema);
    EXPECT_NE(std::string(e.what()).find("1 < p < inf"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("tuple.p"), std::string::npos);
  }
}

TEST(Parse, ComplexEntryInRealFieldRejected) {
  TempDir dir;
  const auto f = dir.write("p.json", problem(kLinfSpace, R"({"d": 1, "matrices": [[[[1, 2], 0], [0, 0]]]})"));
  try {
    io::load_problem(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("tuple.matrices[0][0][0]"), std::string::npos);
  }
}

TEST(Parse, ComplexEntriesAccepted) {
  TempDir dir;
  const auto f = dir.write("p.json", problem(kHilbertSpace, R"({"d": 1, "matrices": [[[[0, 1], 0], [0, 0]]]})"));
  const auto prob = io::load_problem(f);
  EXPECT_EQ((*prob.tuple)[0](0, 0), Scalar(0.0, 1.0));
}

TEST(Parse, ShapeMismatchAndBadJson) {
  TempDir dir;
  EXPECT_THROW(io::load_problem(dir.write("a.json", problem(kLinfSpace, R"({"matrices": [[[1]]]})"))), Error);
  EXPECT_THROW(io::load_problem(dir.write("b.json", R"({"space": )")), Error);
  EXPECT_THROW(io::load_problem(dir.write("c.json", problem(kLinfSpace, R"({"d": 2, "matrices": [[[1, 0], [0, 1]]]})"))),
               Error);
  EXPECT_THROW(io::load_problem(dir.path() / "missing.json"), Error);
}

TEST(Parse, PolyhedralSpace) {
  TempDir dir;
  const std::string space =
      R"({"field": "real", "dim": 2, "norm": {"kind": "polyhedral",
          "primal_extremes": [[1, 1], [1, -1], [-1, 1], [-1, -1]],
          "dual_extremes": [[1, 0], [-1, 0], [0, 1], [0, -1]]}})";
  const auto prob = io::load_problem(dir.write("p.json", problem(space, R"({"matrices": [[[1, 0], [0, 0]]]})")));
  EXPECT_TRUE(prob.space.is_polyhedral());
}

TEST(Cli, RadiusOnLinf) {
  const auto r = run({"radius", problems_dir() + "/linf2_diag.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["value"], 1.0);
  EXPECT_EQ(j["method"], "ExactEnumeration");
  EXPECT_EQ(j["exhaustive"], true);
  EXPECT_EQ(j["orbits"].size(), 2u);
  EXPECT_EQ(r.out.rfind(R"({"value":1.0,"method":"ExactEnumeration","exhaustive":true,)", 0), 0u);
}

TEST(Cli, SmoothOnHilbert) {
  const auto r = run({"smooth", problems_dir() + "/hilbert_diag.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["smooth"], "Smooth");
  ASSERT_TRUE(j["derivative_basis"].is_object());
  EXPECT_NEAR(j["derivative_basis"]["alpha"][0][0].get<double>(), 1.0, 1e-9);
}

TEST(Cli, GateauxUsesEmbeddedDirection) {
  const auto r = run({"gateaux", problems_dir() + "/hilbert_diag.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_NEAR(j["g_plus"].get<double>(), 2.0, 1e-9);
  EXPECT_NEAR(j["derivative"].get<double>(), 2.0, 1e-9);
  EXPECT_EQ(j["verdict"], "Smooth");
}

TEST(Cli, OrthCertificate) {
  const auto r = run({"orth", problems_dir() + "/orth_diag.json", "--against", problems_dir() + "/identity.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["orthogonal"], true);
  EXPECT_EQ(j["certificate"]["weights"], io::json::parse("[0.5, 0.5]"));
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const auto zero = dir.write("z.json", problem(kLinfSpace, R"({"matrices": [[[0, 0], [0, 0]]]})"));
  EXPECT_EQ(run({"subdiff", zero.string()}).code, 2);
  EXPECT_EQ(run({"radius", zero.string()}).code, 0);

  const auto dep = dir.write("dep.json", problem(kLinfSpace, R"({"matrices": [[[1, 0], [0, 0]]]})",
                                                R"(, "against": {"matrices": [[[2, 0], [0, 0]]]})"));
  EXPECT_EQ(run({"orth", dep.string()}).code, 2);

  const auto bad = dir.write("bad.json", problem(kLinfSpace, R"({"p": 1, "matrices": [[[1, 0], [0, 0]]]})"));
  const auto r = run({"radius", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("1 < p < inf"), std::string::npos);

  EXPECT_EQ(run({"radius", (dir.path() / "nope.json").string()}).code, 1);
  EXPECT_EQ(run({"gateaux", problems_dir() + "/linf2_diag.json"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"radius", problems_dir() + "/linf2_diag.json", "--p", "1"}).code, 1);
}

TEST(Cli, PrettyOnlyChangesWhitespace) {
  const auto a = run({"radius", problems_dir() + "/hilbert_diag.json"});
  const auto b = run({"radius", problems_dir() + "/hilbert_diag.json", "--pretty"});
  ASSERT_EQ(a.code, 0);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(io::json::parse(a.out), io::json::parse(b.out));
}

TEST(Cli, ByteIdenticalForFixedSeed) {
  for (const char* cmd : {"radius", "subdiff", "smooth"}) {
    const auto a = run({cmd, problems_dir() + "/hilbert_diag.json", "--seed", "7", "--starts", "16"});
    const auto b = run({cmd, problems_dir() + "/hilbert_diag.json", "--seed", "7", "--starts", "16"});
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, POverride) {
  TempDir dir;
  const auto f = dir.write("p.json", problem(kLinfSpace, R"({"d": 2, "matrices": [[[1, 0], [0, 0]], [[1, 0], [0, 0]]]})"));
  const auto j2 = io::json::parse(run({"radius", f.string()}).out);
  const auto j4 = io::json::parse(run({"radius", f.string(), "--p", "4"}).out);
  EXPECT_NEAR(j2["value"].get<double>(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(j4["value"].get<double>(), std::pow(2.0, 0.25), 1e-15);
}

TEST(Cli, ExtremesWithoutTuple) {
  TempDir dir;
  const auto f = dir.write("s.json", R"({"space": )" + kLinfSpace + "}");
  const auto r = run({"extremes", f.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["primal_extremes"].size(), 4u);
  EXPECT_EQ(j["admissible_pairs"].size(), 8u);
}

TEST(Cli, VerifyReportsChecks) {
  const auto r = run({"verify", problems_dir() + "/linf2_diag.json", "--samples", "500"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_FALSE(j["checks"].empty());
  EXPECT_NE(r.err.find("sampled_le_radius"), std::string::npos);
}

TEST(Cli, AllOutputNumbersFinite) {
  for (const char* cmd : {"radius", "subdiff", "smooth", "gateaux", "verify"}) {
    const auto r = run({cmd, problems_dir() + "/hilbert_diag.json", "--samples", "200"});
    ASSERT_EQ(r.code, 0) << cmd << ": " << r.err;
    EXPECT_TRUE(io::all_finite(io::json::parse(r.out)));
  }
}
