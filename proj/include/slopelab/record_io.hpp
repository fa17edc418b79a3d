#pragma once

// JSON form of SlopeRecord and the CSV export of binned measures.

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "slopelab/slopes.hpp"

namespace slopelab {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Thrown for malformed record files.
class RecordFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const SlopeRecord& r);
SlopeRecord record_from_json(const nlohmann::json& j);

/// Canonical text of a record file: two-space indented JSON plus newline.
std::string serialize_record(const SlopeRecord& r);
SlopeRecord parse_record(std::string_view text);
/// tool_version stored in a record file, without interpreting the rest.
std::string record_tool_version(std::string_view text);

/// "bin_lo,bin_hi,mass_num,mass_den,mass_decimal" rows, one per bin.
void write_distribution_csv(std::ostream& os, const Histogram& h);

/// Human-readable record, as printed by `slopelab compute --text`.
std::string format_record_text(const SlopeRecord& r);

/// "a, b, c" with multiplicities expanded; "none" when empty.
std::string join_slopes(const std::vector<SlopeMult>& slopes);

}  // namespace slopelab
