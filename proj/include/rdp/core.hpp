#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rdp/error.hpp"

namespace rdp {

// One data row: binary outcome, optional binary treatment, running variable
// in cutoff-normalized units, optional cluster label.
struct Observation {
  double y = 0.0;
  std::optional<double> d;
  double w = 0.0;
  std::optional<std::string> cluster;
};

// Observability of the treatment side of the data, mirroring the three cases
// a fuzzy analysis can be in: (Y, D, W) jointly observed; (Y, W) observed
// with exposure limits supplied externally; (Y, W) only.
enum class DataScenario { FullTriplet, AggregateWithExposure, OutcomeOnly };

enum class DesignKind { Sharp, Fuzzy };

// Externally supplied exposure-rate limits e(0+), e(0-).
struct ExposureLimits {
  double e_plus = 1.0;
  double e_minus = 0.0;
};

// Throws InvalidArgument unless 0 <= e_minus < e_plus <= 1.
void check_exposure(const ExposureLimits& e);

// A validated collection of observations. Construct through validate_sample.
struct Sample {
  std::vector<Observation> records;
  double cutoff = 0.0;
  DataScenario scenario = DataScenario::OutcomeOnly;

  bool has_treatment() const { return !records.empty() && records.front().d.has_value(); }
  // Side rule: w >= cutoff is the right side, matching D = 1(W >= 0).
  bool is_right(const Observation& r) const { return r.w >= cutoff; }
};

// Validates invariants (binary values, uniform d-presence, >= 2 records per
// side, scenario consistent with d-presence) and assembles a Sample.
// Records with w exactly at the cutoff land on the right side.
Sample validate_sample(std::vector<Observation> records, double cutoff,
                       DataScenario scenario);

DataScenario classify_scenario(bool sample_has_d,
                               const std::optional<ExposureLimits>& exposure);

const char* scenario_name(DataScenario s);
const char* design_name(DesignKind d);

}  // namespace rdp
