#pragma once

#include <string>

#include "abelatt/eutaxy.hpp"
#include "abelatt/group_ring.hpp"
#include "abelatt/lattice.hpp"
#include "abelatt/min_basis.hpp"
#include "abelatt/report.hpp"

namespace abelatt {

// JSON serialization with stable key order and exact "p/q" coefficient
// strings; identical inputs always produce identical bytes. Parsers throw
// ParseError on malformed input.

std::string to_json(const GroupRingElement& x);
GroupRingElement ring_element_from_json(const std::string& text);

std::string to_json(const LatticeDescription& L);

std::string to_json(const MinimalBasis& basis);

std::string to_json(const EutaxyCertificate& cert);
EutaxyCertificate certificate_from_json(const std::string& text);

std::string to_json(const AnalysisReport& report);
AnalysisReport analysis_report_from_json(const std::string& text);

/// Whitespace-separated integer matrix, one row per line.
std::string gram_text(const IntMatrix& gram);

}  // namespace abelatt
