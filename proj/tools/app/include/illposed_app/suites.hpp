#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "illposed/io.hpp"
#include "illposed/stability.hpp"

namespace illposed::app {

// Four significant digits for human-readable summaries.
inline std::string brief(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

struct SuiteOptions {
  int n = 256;
  int N = 128;
  int m = 12;
  std::uint64_t seed = 0xC0FFEE;
  int count = 0;  // 0 selects the default ensemble size of the suite
};

struct SuiteReport {
  Json json;
  int checked = 0;
  int violations = 0;
  int errors = 0;
  StabilityFit fit;  // theorem suites only
  std::string summary;
};

// Every suite draws from its own stream, Rng(seed + salt), with salt 100 + k
// for lemma k and 200 + k for theorem k, so results do not depend on run order.
std::uint64_t suite_seed(std::uint64_t seed, bool theorem, int k);

// Lemma 1 runs on both BerteroGrunbaum on [1,2] and Prolate (default 200 each);
// Lemmas 2 and 3 default to 1000 functions.
SuiteReport lemma_suite(int k, const SuiteOptions& opt);

// Theorem 1: LaplaceTT on [1,2], sine series. Theorem 2: adjoint Laplace on the
// half-line, p(x) exp(-sigma x). Theorem 3: FourierTT, Legendre series on [-1,1].
// Default 500 functions each.
SuiteReport theorem_suite(int k, const SuiteOptions& opt);

}  // namespace illposed::app
