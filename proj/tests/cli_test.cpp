#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <mrt/cli.hpp>

namespace fs = std::filesystem;
using namespace mrt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mrt_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ConstructThenVerify) {
  auto file = path("t10.txt");
  auto made = run({"construct", "turan5", "--n", "10", "--out", file});
  ASSERT_EQ(made.code, cli::ok) << made.err;
  auto checked = run({"verify", "--in", file, "--pattern", "k3", "--constraint", "mean:2"});
  EXPECT_EQ(checked.code, cli::ok);
  EXPECT_NE(checked.out.find("edges=40\n"), std::string::npos);
  EXPECT_NE(checked.out.find("color_incidence=20\n"), std::string::npos);
  EXPECT_NE(checked.out.find("status=ok\n"), std::string::npos);
  EXPECT_EQ(run({"verify", "--in", file, "--constraint", "local:2"}).code, cli::ok);
}

TEST_F(CliTest, VerifyReportsViolations) {
  auto rainbow = write("rainbow.txt", "3 3 3\n0 1 0\n0 2 1\n1 2 2\n");
  auto r = run({"verify", "--in", rainbow, "--constraint", "mean:3/2"});
  EXPECT_EQ(r.code, cli::violation);
  EXPECT_NE(r.out.find("violation=constraint mean:3/2"), std::string::npos);
  EXPECT_NE(r.out.find("detail=sum c(v) = 6 > 9/2"), std::string::npos);

  auto mono = write("mono.txt", "3 1 3\n0 1\n0 2\n1 2\n");
  auto m = run({"verify", "--in", mono, "--pattern", "k3"});
  EXPECT_EQ(m.code, cli::violation);
  EXPECT_NE(m.out.find("violation=monochromatic K3 color=0 embedding=0,1,2"), std::string::npos);
  EXPECT_NE(m.out.find("status=violation"), std::string::npos);
}

TEST_F(CliTest, BlowupMatchesLibrary) {
  auto base = path("k5.txt");
  ASSERT_EQ(run({"construct", "turan5", "--n", "5", "--out", base}).code, cli::ok);
  auto r = run({"construct", "blowup", "--in", base, "--sizes", "2,2,2,2,2"});
  ASSERT_EQ(r.code, cli::ok);
  EXPECT_EQ(io::colored_from_text(r.out), blow_up(k5_no_mono_triangle(), std::vector<int>(5, 2)));
  EXPECT_EQ(run({"construct", "blowup", "--in", base, "--sizes", "2,2"}).code, cli::malformed);
}

TEST_F(CliTest, RtExactPrintsValueAndCertificate) {
  auto r = run({"rt-exact", "--n", "6", "--pattern", "k3", "--constraint", "mean:2"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_EQ(r.out.substr(0, 3), "14\n");
  std::istringstream cert_text(r.out.substr(3));
  auto cert = io::read_certificate(cert_text);
  EXPECT_EQ(cert.value, 14);
  EXPECT_TRUE(verify_certificate(cert, Graph::complete(3), ColoringConstraint::mean(2)));
}

TEST_F(CliTest, ReportsIdenticalAcrossThreadCounts) {
  auto one = run({"rt-exact", "--n", "7", "--constraint", "mean:2", "--threads", "1"});
  auto four = run({"rt-exact", "--n", "7", "--constraint", "mean:2", "--threads", "4"});
  ASSERT_EQ(one.code, cli::ok);
  EXPECT_EQ(one.out, four.out);
  auto s1 = run({"conjecture-scan", "--nmax", "5", "--threads", "1"});
  auto s3 = run({"conjecture-scan", "--nmax", "5", "--threads", "3"});
  EXPECT_EQ(s1.out, s3.out);
}

TEST_F(CliTest, CertificateFileOutput) {
  auto file = path("cert.txt");
  auto r = run({"ramsey-exact", "--pattern", "k3", "--constraint", "colors:2", "--nmax", "8", "--out", file});
  ASSERT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out, "6\n");
  std::ifstream in(file);
  auto cert = io::read_certificate(in);
  EXPECT_EQ(cert.kind, CertificateKind::RamseyValue);
  EXPECT_TRUE(verify_certificate(cert, Graph::complete(3), ColoringConstraint::colors(2)));
  EXPECT_EQ(run({"ramsey-exact", "--nmax", "4", "--constraint", "colors:2"}).out.substr(0, 13), "none up to 4\n");
}

TEST_F(CliTest, OracleColorSum) {
  auto r = run({"oracle", "color-sum", "--m", "5"});
  ASSERT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out.substr(0, 3), "10\n");
  auto w = io::colored_from_text(r.out.substr(3));
  EXPECT_EQ(total_color_incidence(w), 10);
  EXPECT_EQ(run({"oracle", "color-sum", "--m", "7"}).code, cli::malformed);
}

TEST_F(CliTest, Factor) {
  auto k7 = write("k7.txt", io::to_text(EdgeColoring::monochromatic(Graph::complete(7))));
  auto r = run({"factor", "--in", k7});
  EXPECT_EQ(r.out, "factor=found\nblocks=2\nblock=0 1 2\nblock=3 4 5 6\n");
  std::ostringstream c9;
  io::write_graph(c9, Graph::cycle(9));
  EXPECT_EQ(run({"factor", "--in", write("c9.txt", c9.str())}).out, "factor=none\n");
}

TEST_F(CliTest, ClusterOfBlownUpWitness) {
  auto base = path("k5.txt");
  ASSERT_EQ(run({"construct", "turan5", "--n", "5", "--out", base}).code, cli::ok);
  auto blown = path("blown.txt");
  ASSERT_EQ(run({"construct", "blowup", "--in", base, "--sizes", "2,2,2,2,2", "--out", blown}).code, cli::ok);
  auto part = write("p.txt", "5\n0 1\n2 3\n4 5\n6 7\n8 9\n");
  auto r = run({"cluster", "--in", blown, "--partition", part, "--gamma", "1/4", "--eta", "1/2", "--colored"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_NE(r.out.find("m=5\nequitable=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("pair=0 1 density=1 regular=1 edge=1 color=0\n"), std::string::npos);
  EXPECT_NE(r.out.find("cluster_edges=10\n"), std::string::npos);
  EXPECT_NE(r.out.find("rho_star=2\n"), std::string::npos);
}

TEST_F(CliTest, ConjectureScan) {
  auto r = run({"conjecture-scan", "--pattern", "k3", "--nmax", "6"});
  ASSERT_EQ(r.code, cli::ok);
  EXPECT_NE(r.out.find("n=6 colors:2=14 local:2=14 mean:2=14 reference=14 equal=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("pattern=K3 all_equal=true\n"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::malformed);
  EXPECT_EQ(run({"bogus"}).code, cli::malformed);
  EXPECT_EQ(run({"rt-exact"}).code, cli::malformed);
  EXPECT_EQ(run({"rt-exact", "--n", "9"}).code, cli::over_budget);
  EXPECT_EQ(run({"rt-exact", "--n", "5", "--constraint", "mean:1/3"}).code, cli::malformed);
  EXPECT_EQ(run({"rt-exact", "--n", "5", "--pattern", "q5"}).code, cli::malformed);
  EXPECT_EQ(run({"verify", "--in", path("missing.txt")}).code, cli::malformed);
  EXPECT_EQ(run({"verify", "--in", write("bad.txt", "3 1 1\n0 7\n")}).code, cli::malformed);
  EXPECT_EQ(run({"rt-exact", "--n", "5", "--threads", "0"}).code, cli::malformed);
  EXPECT_EQ(run({"--help"}).code, cli::ok);
}

TEST_F(CliTest, PatternFromFile) {
  std::ostringstream p3;
  io::write_graph(p3, Graph::path(3));
  auto r = run({"ramsey-exact", "--pattern", write("p3.txt", p3.str()), "--constraint", "colors:2"});
  EXPECT_EQ(r.out.substr(0, 2), "3\n");
}

TEST_F(CliTest, EnvironmentBudgets) {
  ::setenv("MRT_MAX_RT_N", "4", 1);
  auto r = run({"rt-exact", "--n", "5"});
  ::unsetenv("MRT_MAX_RT_N");
  EXPECT_EQ(r.code, cli::over_budget);
  ::setenv("MRT_MAX_NODES", "5", 1);
  auto capped = run({"rt-exact", "--n", "6"});
  ::unsetenv("MRT_MAX_NODES");
  EXPECT_EQ(capped.code, cli::over_budget);
}
