#pragma once

#include <optional>
#include <string>

#include "nsurf/enumerate.hpp"
#include "nsurf/hyperbolic.hpp"

namespace nsurf {

// Aligned text table of the fundamental surfaces plus the derived constants.
std::string render_report_table(const FundamentalReport& rep,
                                std::optional<long long> genus);

// Machine-readable form.  Exact quantities are decimal strings, the
// constant c as "numerator/denominator"; byte-identical across runs.
std::string render_report_json(const FundamentalReport& rep,
                               std::optional<long long> genus);

std::string render_validate_text(const Triangulation& tri);
std::string render_validate_json(const Triangulation& tri);

std::string render_certificate_line(const RotationCertificate& cert);

}  // namespace nsurf
