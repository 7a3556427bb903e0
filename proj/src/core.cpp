#include "rdp/core.hpp"

#include <cmath>
#include <cstddef>

namespace rdp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedTreatmentPresence: return "MixedTreatmentPresence";
    case ErrorCode::InsufficientSideData: return "InsufficientSideData";
    case ErrorCode::ScenarioMismatch: return "ScenarioMismatch";
    case ErrorCode::NonBinaryValue: return "NonBinaryValue";
    case ErrorCode::SingularDesign: return "SingularDesign";
    case ErrorCode::DegenerateRunning: return "DegenerateRunning";
    case ErrorCode::WeakDenominator: return "WeakDenominator";
    case ErrorCode::WeakFirstStage: return "WeakFirstStage";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoVariance: return "NoVariance";
    case ErrorCode::IncoherentPlan: return "IncoherentPlan";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::IncoherentInputs: return "IncoherentInputs";
    case ErrorCode::InvalidDgp: return "InvalidDgp";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

void check_exposure(const ExposureLimits& e) {
  if (!(e.e_minus >= 0.0) || !(e.e_plus <= 1.0) || !(e.e_minus < e.e_plus)) {
    throw Error(ErrorCode::InvalidArgument,
                "exposure limits must satisfy 0 <= e_minus < e_plus <= 1, got e_plus=" +
                    std::to_string(e.e_plus) + " e_minus=" + std::to_string(e.e_minus));
  }
}

namespace {

bool is_binary(double v) { return v == 0.0 || v == 1.0; }

}  // namespace

Sample validate_sample(std::vector<Observation> records, double cutoff,
                       DataScenario scenario) {
  if (records.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no records supplied");
  }
  if (!std::isfinite(cutoff)) {
    throw Error(ErrorCode::InvalidArgument, "cutoff must be finite");
  }

  const bool has_d = records.front().d.has_value();
  std::size_t n_left = 0, n_right = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Observation& r = records[i];
    if (!std::isfinite(r.w)) {
      throw Error(ErrorCode::NonBinaryValue,
                  "record " + std::to_string(i) + ": running variable is not finite");
    }
    if (!is_binary(r.y)) {
      throw Error(ErrorCode::NonBinaryValue,
                  "record " + std::to_string(i) + ": y must be 0 or 1, got " +
                      std::to_string(r.y));
    }
    if (r.d.has_value() != has_d) {
      throw Error(ErrorCode::MixedTreatmentPresence,
                  "record " + std::to_string(i) +
                      ": treatment value presence differs from the first record");
    }
    if (r.d.has_value() && !is_binary(*r.d)) {
      throw Error(ErrorCode::NonBinaryValue,
                  "record " + std::to_string(i) + ": d must be 0 or 1, got " +
                      std::to_string(*r.d));
    }
    (r.w >= cutoff ? n_right : n_left)++;
  }

  if (n_left < 2 || n_right < 2) {
    throw Error(ErrorCode::InsufficientSideData,
                "need at least 2 records strictly on each side of the cutoff, got " +
                    std::to_string(n_left) + " left / " + std::to_string(n_right) +
                    " right");
  }
  if (scenario == DataScenario::FullTriplet && !has_d) {
    throw Error(ErrorCode::ScenarioMismatch,
                "FullTriplet scenario requires a treatment value on every record");
  }

  Sample s;
  s.records = std::move(records);
  s.cutoff = cutoff;
  s.scenario = scenario;
  return s;
}

DataScenario classify_scenario(bool sample_has_d,
                               const std::optional<ExposureLimits>& exposure) {
  if (sample_has_d) return DataScenario::FullTriplet;
  if (exposure.has_value()) return DataScenario::AggregateWithExposure;
  return DataScenario::OutcomeOnly;
}

const char* scenario_name(DataScenario s) {
  switch (s) {
    case DataScenario::FullTriplet: return "full_triplet";
    case DataScenario::AggregateWithExposure: return "aggregate_with_exposure";
    case DataScenario::OutcomeOnly: return "outcome_only";
  }
  return "?";
}

const char* design_name(DesignKind d) {
  return d == DesignKind::Sharp ? "sharp" : "fuzzy";
}

}  // namespace rdp
