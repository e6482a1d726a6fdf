#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(FIBRAID_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  CliRun r{-1, {}};
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe.get())) r.out += buf.data();
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, BasisReportsBlockSizes) {
  EXPECT_EQ(cli("basis 6").out, "dim=13 blocks: q-spin0=5 q-spin1=8\n");
  EXPECT_EQ(cli("basis 3").out, "dim=3 blocks: q-spin0=1 q-spin1=2\n");
}

TEST(Cli, EvalOfEmptyWordIsIdentity) {
  const CliRun r = cli("eval -n 3 - < /dev/null");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(j["entries"][i][k][0].get<double>(), i == k ? 1.0 : 0.0);
      EXPECT_EQ(j["entries"][i][k][1].get<double>(), 0.0);
    }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("render 's1 s9'").code, 2);
  EXPECT_EQ(cli("search --target bogus").code, 2);
  EXPECT_EQ(cli("search --target not --max-length 30 --method exhaustive --max-nodes 100").code, 3);
  EXPECT_EQ(cli("verify").code, 0);
}

TEST(Cli, SearchOutputDoesNotDependOnThreadCount) {
  const std::string args = "search --target hadamard --max-length 14 --method exhaustive";
  const CliRun one = cli("--threads 1 " + args);
  const CliRun three = cli("--threads 3 " + args);
  ASSERT_EQ(one.code, 0);
  const auto a = nlohmann::json::parse(one.out), b = nlohmann::json::parse(three.out);
  EXPECT_EQ(a["word"], b["word"]);
  EXPECT_EQ(a["epsilon"], b["epsilon"]);
  EXPECT_EQ(cli("--threads 2 search --target hadamard --max-length 14 --method mitm").out.empty(),
            false);
}

TEST(Cli, CompileCphaseWithGivenWeave) {
  const CliRun r = cli("compile-cphase --m 1 --weave-word 's1^2'");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["stage_lengths"].size(), 3u);
  EXPECT_EQ(j["total_length"], 2 + 4 + 2);
}
