#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <gtest/gtest.h>

#include "illposed_app/acceptance.hpp"

using namespace illposed::app;

namespace {

void check(int id) {
  const CriterionResult r = run_criterion(id, AcceptanceConfig{});
  std::cout << format_line(r) << std::endl;
  EXPECT_TRUE(r.pass) << r.detail;
}

}  // namespace

TEST(Acceptance, Criterion01) { check(1); }
TEST(Acceptance, Criterion02) { check(2); }
TEST(Acceptance, Criterion03) { check(3); }
TEST(Acceptance, Criterion04) { check(4); }
TEST(Acceptance, Criterion05) { check(5); }
TEST(Acceptance, Criterion06) { check(6); }
TEST(Acceptance, Criterion07) { check(7); }
TEST(Acceptance, Criterion08) { check(8); }
TEST(Acceptance, Criterion09) { check(9); }
TEST(Acceptance, Criterion10) { check(10); }
TEST(Acceptance, Criterion11) { check(11); }
TEST(Acceptance, Criterion12) { check(12); }

// Times the real report-all command; its exit status reflects the criteria above.
TEST(Acceptance, TotalRuntime) {
  const auto dir = std::filesystem::temp_directory_path() / "illposed_report_all";
  const std::string cmd = std::string("\"") + ILLPOSED_CLI + "\" report-all --no-svg --out \"" + dir.string() +
                          "\" > /dev/null";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = secs <= kTotalRuntimeBudget && status != -1 && std::filesystem::exists(dir / "report.json");
  std::cout << "[runtime] " << (pass ? "PASS" : "FAIL") << ": report-all took " << secs << " s (budget "
            << kTotalRuntimeBudget << " s)" << std::endl;
  EXPECT_TRUE(pass);
}
