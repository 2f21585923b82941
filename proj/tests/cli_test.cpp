#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/runner.hpp"
#include "cli/thread_pool.hpp"

namespace k3atlas::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "k3atlas");
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Outcome o = invoke(args);
  EXPECT_EQ(o.code, kExitOk) << o.err;
  return nlohmann::json::parse(o.out);
}

const nlohmann::json &check_by_id(const nlohmann::json &report, const std::string &id) {
  for (const auto &c : report["checks"])
    if (c["id"] == id) return c;
  throw std::runtime_error("no check " + id);
}

TEST(CliTest, VerifyPointsHas29PassRecords) {
  const nlohmann::json r = json_of({"verify-points"});
  EXPECT_EQ(r["checks"].size(), 29u);
  EXPECT_EQ(r["summary"]["pass"], "29");
  EXPECT_EQ(r["summary"]["fail"], "0");
  for (const auto &c : r["checks"]) EXPECT_EQ(c["status"], "pass") << c["id"];
  EXPECT_EQ(check_by_id(r, "points.K3(-9/17,6/289)")["values"]["coord2"], "6/289");
  ASSERT_EQ(r["tables"].size(), 4u);
  EXPECT_EQ(r["tables"][2]["curve"], "Ks");
  EXPECT_EQ(r["tables"][2]["convention"], "(z,w)");
}

TEST(CliTest, JsonNumbersAreStrings) {
  const nlohmann::json r = json_of({"modular", "--d", "11"});
  std::function<void(const nlohmann::json &)> walk = [&](const nlohmann::json &j) {
    EXPECT_FALSE(j.is_number()) << j.dump();
    if (j.is_structured())
      for (const auto &v : j) walk(v);
  };
  walk(r);
}

TEST(CliTest, ModularD163) {
  const nlohmann::json r = json_of({"modular", "--d", "163", "--bits", "256"});
  EXPECT_EQ(check_by_id(r, "tower.d163.recover_pair")["values"]["a3"], "-17");
  EXPECT_EQ(check_by_id(r, "tower.d163.recover_pair")["values"]["b3"], "150");
  EXPECT_EQ(check_by_id(r, "tower.d163.j")["values"]["j"], "-262537412640768000");
  EXPECT_EQ(check_by_id(r, "tower.d163.j")["values"]["gamma2"], "-640320");
  EXPECT_EQ(check_by_id(r, "tower.d163.W")["values"]["precision"], "256");
  EXPECT_EQ(check_by_id(r, "tower.d163.residual.S")["status"], "pass");
  const std::string w = check_by_id(r, "tower.d163.W")["values"]["W"];
  EXPECT_EQ(w.rfind("2.6586495295547364366e-2 +/- ", 0), 0u) << w;

  const Outcome text = invoke({"modular", "--d", "163", "--bits", "256"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("a3 = -17"), std::string::npos);
  EXPECT_NE(text.out.find("j = -262537412640768000"), std::string::npos);
}

TEST(CliTest, ModularFailsWithoutClassNumberOne) {
  const Outcome o = invoke({"modular", "--d", "51", "--format", "json"});
  EXPECT_EQ(o.code, kExitCheckFailed);
  const nlohmann::json r = nlohmann::json::parse(o.out);
  EXPECT_EQ(check_by_id(r, "tower.d51.recover_pair")["status"], "fail");
  EXPECT_EQ(check_by_id(r, "tower.d51.residuals")["status"], "skip");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({"search", "--curve", "ks", "--height", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"search", "--curve", "ks", "--box", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"search", "--curve", "k3", "--height", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"search", "--curve", "k6", "--box", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"search", "--height", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"modular"}).code, kExitUsage);
  EXPECT_EQ(invoke({"modular", "--d", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"modular", "--d", "99"}).code, kExitUsage);
  EXPECT_EQ(invoke({"modular", "--d", "11", "--bits", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify-maps", "--format", "csv"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify-points", "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliTest, UnwritableOutputIsIoError) {
  const Outcome o = invoke({"verify-points", "--out", "/nonexistent-dir/x/report.json"});
  EXPECT_EQ(o.code, kExitIo);
  EXPECT_NE(o.err.find("cannot write"), std::string::npos);
}

TEST(CliTest, OutFileAndCsv) {
  const auto path = std::filesystem::temp_directory_path() / "k3atlas_cli_test.csv";
  const Outcome o = invoke({"verify-points", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::ifstream in(path);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "curve,coord1,coord2,provenance,d");
  std::size_t rows = 0;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line), ++rows;
  EXPECT_EQ(rows, 29u);
  EXPECT_EQ(lines.front(), "K3,3,6,published,3");
  EXPECT_NE(std::find(lines.begin(), lines.end(), "Ks,1/2,-7/4,published,"), lines.end());
  std::filesystem::remove(path);
}

TEST(CliTest, SearchOutputs) {
  const nlohmann::json ks = json_of({"search", "--curve", "ks", "--height", "2", "--jobs", "3"});
  EXPECT_EQ(check_by_id(ks, "search.Ks.H2.reconcile")["values"]["found"], "9");
  EXPECT_EQ(check_by_id(ks, "search.Ks.H2.audit")["status"], "pass");
  ASSERT_EQ(ks["tables"].size(), 1u);
  EXPECT_EQ(ks["tables"][0]["points"].size(), 9u);
  EXPECT_EQ(ks["tables"][0]["points"][0]["provenance"], "search");

  const nlohmann::json k3 = json_of({"search", "--curve", "K3", "--box", "2"});
  const auto &rec = check_by_id(k3, "search.K3.B2.reconcile");
  EXPECT_EQ(rec["status"], "pass");
  EXPECT_EQ(rec["values"]["search_only"], "0");
  EXPECT_NE(rec["values"]["table_only"], "0");
}

TEST(CliTest, DeterministicApartFromTimestamps) {
  auto strip = [](nlohmann::json j) {
    j.erase("timestamp");
    j.erase("elapsed_ms");
    return j;
  };
  const std::vector<std::string> args{"report", "--jobs", "4"};
  EXPECT_EQ(strip(json_of(args)), strip(json_of(args)));
  const std::vector<std::string> search{"search", "--curve", "ks", "--height", "25", "--jobs", "1"};
  const std::vector<std::string> search4{"search", "--curve", "ks", "--height", "25", "--jobs", "4"};
  nlohmann::json a = strip(json_of(search)), b = strip(json_of(search4));
  a.erase("config");
  b.erase("config");
  EXPECT_EQ(a, b);
}

TEST(CliTest, FullReportPasses) {
  const nlohmann::json r = json_of({"report"});
  EXPECT_EQ(r["summary"]["fail"], "0");
  EXPECT_EQ(check_by_id(r, "singular.K3(1,2)")["details"], "double point");
  EXPECT_EQ(check_by_id(r, "search.Ks.H200.reconcile")["values"]["found"], "9");
  EXPECT_EQ(check_by_id(r, "search.K3.B50.reconcile")["values"]["found"], "9");
  EXPECT_EQ(check_by_id(r, "search.K1.B50.reconcile")["values"]["found"], "6");
}

TEST(ThreadPoolTest, RunsEveryTaskOnce) {
  std::vector<std::atomic<int>> hits(100);
  pool_executor(4)(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto &h : hits) EXPECT_EQ(h.load(), 1);
  pool_executor(8)(0, [](std::size_t) { FAIL(); });
}

TEST(ThreadPoolTest, PropagatesExceptions) {
  EXPECT_THROW(pool_executor(3)(10,
                                [](std::size_t i) {
                                  if (i == 7) throw std::runtime_error("boom");
                                }),
               std::runtime_error);
}

}  // namespace
}  // namespace k3atlas::cli
