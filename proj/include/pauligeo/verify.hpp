#pragma once

// The count table behind `pauligeo verify`: every check pairs a closed-form or
// published value with the value computed from scratch.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pauligeo/configurations.hpp"
#include "pauligeo/polar.hpp"

namespace pauligeo {

// Heavy N=4 artifacts, each computed on first use and never modified after.
class GeometryCache {
 public:
  explicit GeometryCache(unsigned jobs = 0) : jobs_(jobs) {}

  unsigned jobs() const { return jobs_; }
  const Quadric& quadric();
  const GeneratorSet& quadric_generators();
  const GeneratorSet& symplectic_generators();
  const std::vector<Ovoid>& ovoids();

 private:
  unsigned jobs_;
  std::once_flag quadric_once_, qgen_once_, sgen_once_, ovoids_once_;
  std::optional<Quadric> quadric_;
  std::optional<GeneratorSet> qgen_, sgen_;
  std::optional<std::vector<Ovoid>> ovoids_;
};

enum class VerifyLevel { quick, full };

struct CheckRow {
  std::string check;
  std::string expected;
  std::string computed;
  bool pass = false;
  double ms = 0;
};

struct VerificationReport {
  int n = 4;
  VerifyLevel level = VerifyLevel::quick;
  std::vector<CheckRow> rows;

  bool pass() const;
  const CheckRow* find(std::string_view check) const;
  std::string to_text(bool timings = true) const;
  std::string to_json(bool timings = true) const;
};

struct VerifyOptions {
  int n = 4;
  VerifyLevel level = VerifyLevel::quick;
  unsigned jobs = 0;
  bool exhaustive_oracle = false;
  std::optional<Ovoid> ovoid;  // reference ovoid for N=4, default Edge's
};

// Quick skips the pairwise ovoid census and the global tetrad dedup.
VerificationReport run_verification(const VerifyOptions& options, GeometryCache& cache);
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace pauligeo
