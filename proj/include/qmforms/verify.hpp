#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmforms/hecke.hpp"
#include "qmforms/json_io.hpp"

namespace qmf {

struct Check {
  std::string name;
  bool pass;
  std::optional<double> residual;  // empty for exact checks
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool all_pass() const;
  Json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20061;
  std::optional<int> samples;   // suite default when empty
  std::optional<double> tol;    // suite default when empty
  std::size_t order = 0;        // 0: default_series_order()
  CompositionExponent exponent = CompositionExponent::WeightMinusTwiceDepthMinusOne;
};

const std::vector<std::string>& suite_names();  // ramanujan, flatness, ..., all

// Runs one suite; throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace qmf
