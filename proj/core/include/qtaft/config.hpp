#pragma once

#include <string>

#include "qtaft/classify.hpp"
#include "qtaft/invariants.hpp"

namespace qtaft {

/// JSON forms used by configs and reports. Serialization is canonical:
/// parsing a serialized value and re-serializing reproduces it byte for
/// byte. Scalars accept three input spellings: an exact rational string
/// "num/den" (or plain integer), a root of unity "zeta(L)^j", or the full
/// object {"order": L, "coeffs": ["num/den", ...]}; output always uses the
/// object form.
std::string cyc_to_json_text(const CycNum& value);
CycNum cyc_from_json_text(const std::string& text);

std::string action_spec_to_json(const ActionSpec& spec);
/// Throws parse_error with a field diagnostic on malformed input.
ActionSpec action_spec_from_json(const std::string& text);

/// Family parameter files carry a "family" tag: "rotation", "reflection"
/// or "exceptional".
enum class FamilyKind { rotation, reflection, exceptional };
struct FamilyConfig {
  FamilyKind family = FamilyKind::rotation;
  RotationParams rotation;
  ReflectionParams reflection;
  ExceptionalParams exceptional;
};
FamilyConfig family_config_from_json(const std::string& text);

std::string report_to_json(const ConstraintReport& report);

}  // namespace qtaft
