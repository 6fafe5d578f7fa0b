#pragma once

#include <string>

#include "heffter/arrays.hpp"
#include "heffter/spaces.hpp"
#include "heffter/topology.hpp"
#include "heffter/verify.hpp"

namespace heffter {

// All serialization uses symmetric representatives and deterministic field
// and element order, so outputs are byte-stable across runs. Parsers throw
// ParseError on malformed input.

std::string space_to_json(const RelativeHeffterSpace& space);
RelativeHeffterSpace space_from_json(const std::string& text);

std::string array_to_json(const HeffterArray& arr);
HeffterArray array_from_json(const std::string& text);

/// n lines of n whitespace-separated tokens, "." for an empty cell.
std::string array_to_grid(const HeffterArray& arr);

std::string decomposition_to_json(const CycleDecomposition& dec);
CycleDecomposition decomposition_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);

std::string orientation_to_string(const TourOrientation& o);  // "+-..." rows then ";" cols
TourOrientation orientation_from_strings(const std::string& rows, const std::string& cols);

std::string trace_to_json(const TourTrace& trace);

/// Distinguishes space/array/decomposition documents by their fields.
enum class DocumentKind { space, array, decomposition };
DocumentKind detect_document(const std::string& text);

}  // namespace heffter
