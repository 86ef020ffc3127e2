#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Invocation {
  std::string out;
  int code = -1;
};

Invocation run(const std::string& args) {
  const std::string command = std::string(TREECYCLES_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  Invocation r;
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* args;
  const char* file;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.args; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesByteForByte) {
  const Invocation r = run(GetParam().args);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden(GetParam().file));
  EXPECT_EQ(run(GetParam().args).out, r.out);
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(GoldenCase{"trees --g 4", "trees_g4.json"},
                      GoldenCase{"trees --g 4 --detail", "trees_g4_detail.json"},
                      GoldenCase{"decompose --tree '((1,2),3)' --method both", "decompose_12_3_both.json"},
                      GoldenCase{"decompose --tree '((1,3),2)'", "decompose_13_2.json"},
                      GoldenCase{"decompose --tree '(1,2)'", "decompose_1_2.json"},
                      GoldenCase{"decompose --tree '((1,2),3)' --method rewrite --as-trees --trace",
                                 "decompose_12_3_as_trees.json"},
                      GoldenCase{"pair --k 1,1 --tree '((1,3),2)'", "pair_11_13_2.json"},
                      GoldenCase{"arnold --n 3 --expr 'w(1,3)*w(2,3)'", "arnold_n3.json"},
                      GoldenCase{"arnold --n 3 --expr 'w(1,2)*w(2,3)+w(2,3)*w(1,3)+w(1,3)*w(1,2)'",
                                 "arnold_relation.json"}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.file;
      name = name.substr(0, name.find('.'));
      return name;
    });

TEST(Cli, Counts) {
  EXPECT_EQ(run("trees --g 5 --balanced --count").out, "6\n");
  EXPECT_EQ(run("trees --g 8 --count").out, "10395\n");
  EXPECT_EQ(run("pair --k 1 --tree '(1,2)'").out, "1\n");
}

TEST(Cli, TextFormat) {
  EXPECT_EQ(run("--format text trees --g 4").out, "((1,2),3)\n((1,3),2)\n(1,(2,3))\n");
  EXPECT_EQ(run("arnold --n 3 --expr 'w(1,2)*w(1,2)' --format text").out, "0\n");
  EXPECT_EQ(run("--format text arnold --n 3 --expr 'w(1,3)*w(2,3)'").out, "-w(1,2)*w(1,3) + w(1,2)*w(2,3)\n");
  EXPECT_EQ(run("--format text decompose --tree '((1,2),3)' --method both").out, "(1,1) -1\n(1,2) -1\nagree true\n");
}

TEST(Cli, MethodsAgree) {
  for (const char* tree : {"'(((1,2),3),4)'", "'((1,4),(2,3))'", "'(((1,5),(2,4)),3)'"}) {
    const Invocation det = run(std::string("decompose --tree ") + tree);
    const Invocation rw = run(std::string("decompose --method rewrite --tree ") + tree);
    ASSERT_EQ(det.code, 0);
    EXPECT_EQ(det.out, rw.out);
    EXPECT_EQ(nlohmann::json::parse(run(std::string("decompose --method both --tree ") + tree).out)["agree"], true);
  }
}

TEST(Cli, Verify) {
  const Invocation r = run("verify --suite crosspath --g 5");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "crosspath");
  EXPECT_EQ(j["cases"], 15);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_EQ(run("verify --suite counts --g 7").code, 0);
  EXPECT_EQ(run("verify --suite arnold --n 4").code, 0);
  EXPECT_EQ(run("--seed 7 --threads 2 verify --suite relations --g 6 --sample 200").code, 0);
}

TEST(Cli, SeededVerifyIsReproducible) {
  auto strip = [](const std::string& out) {
    auto j = nlohmann::json::parse(out);
    j.erase("millis");
    return j.dump();
  };
  const std::string a = strip(run("verify --suite relations --g 7 --sample 300 --seed 5").out);
  EXPECT_EQ(a, strip(run("verify --suite relations --g 7 --sample 300 --seed 5 --threads 3").out));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("trees --g 2").code, 1);
  EXPECT_EQ(run("decompose --tree '((1,1),2)'").code, 1);
  EXPECT_EQ(run("decompose --tree '((1,2),3'").code, 1);
  EXPECT_EQ(run("pair --k 1,2,1 --tree '(1,2)'").code, 1);
  EXPECT_EQ(run("pair --k 1,3 --tree '((1,2),3)'").code, 1);
  EXPECT_EQ(run("arnold --n 3 --expr 'w(1,4)'").code, 1);
  EXPECT_EQ(run("arnold --n 3 --expr 'w(1,2'").code, 1);
  EXPECT_EQ(run("verify --suite bogus").code, 1);
  EXPECT_EQ(run("verify --suite counts --g 9").code, 1);
  EXPECT_EQ(run("decompose --tree '(1,2)' --method magic").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, CeilingRaisesTheCountsLimit) {
  EXPECT_EQ(run("verify --suite counts --g 9 --ceiling 9").code, 0);
}

}  // namespace
