#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

namespace illposed::app {

inline constexpr int kMaxGrid = 1024;
inline constexpr int kMaxGalerkin = 512;

enum ExitCode { kExitPass = 0, kExitUsage = 1, kExitCheckFailed = 2 };

struct RunConfig {
  std::string command;
  std::string op;
  std::string diff;  // empty: the natural partner of op
  double a = 1.0;
  double b = 2.0;
  int n = 256;
  int N = 128;
  int m = 12;
  std::uint64_t seed = 0xC0FFEE;
  std::filesystem::path out_dir = ".";
  std::string method = "auto";  // spectrum: auto | direct | commuting
  std::string basis = "sine";   // adversarial
  int basis_size = 8;           // adversarial
  int figure_id = 0;            // 0 = all figures
  int theorem = 0;
  int lemma = 0;
  int count = 0;
  bool write_svg = true;
};

// Writes artifacts under out_dir (ILLPOSED_OUT_DIR overrides it) and the main
// result to out. Returns kExitPass, kExitCheckFailed or kExitUsage.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace illposed::app
