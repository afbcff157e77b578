#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace tropamalg {

// Domain failure with a machine-readable kind and a witness object that the
// CLI serializes as {"error": {"kind": ..., "witness": ...}}.
//
// Kinds in use: MissingTop, NotLoopless, NotIntersectionClosed,
// CoveringAxiomViolated, NotAFlat, NotAFlag, LabelClash, RankZero,
// NotParallel, NotComparable, NotACut, LocallyUnbalanced, UnexpectedIndex,
// GroundsetMismatch, NegativeWeight, AxiomsFailDespitePositivity,
// RestrictionMismatch, NotSimple, NotWeak, NotCovering, MiddleMismatch,
// GroundsetTooLarge, UnknownLabel, PosetNotGraded, BadFile.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message,
              nlohmann::json witness = nlohmann::json::object())
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const { return kind_; }
  const nlohmann::json& witness() const { return witness_; }

 private:
  std::string kind_;
  nlohmann::json witness_;
};

}  // namespace tropamalg
