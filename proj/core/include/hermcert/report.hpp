#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hermcert {

enum class OutputFormat { Records, Table };

/// One report record: ordered key=value pairs emitted on a single line.
/// Values never contain whitespace; free text goes into '#' comment lines,
/// which parsers skip. This keeps reports byte-deterministic and
/// round-trippable.
using Record = std::vector<std::pair<std::string, std::string>>;

void write_record(std::ostream& os, const Record& record);
void write_comment(std::ostream& os, const std::string& text);

/// Parses a record line back into pairs; returns false for comments and
/// blank lines.
bool parse_record_line(const std::string& line, Record* out);

/// Fixed-precision rendering for roots and other derived floats ("%.6f").
std::string double_str(double v);

/// Aligned human-readable table.
void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

}  // namespace hermcert
