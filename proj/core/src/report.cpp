#include "hermcert/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hermcert {

void write_record(std::ostream& os, const Record& record) {
    bool first = true;
    for (const auto& [key, value] : record) {
        if (key.find_first_of(" =\n") != std::string::npos ||
            value.find_first_of(" \n") != std::string::npos)
            throw std::invalid_argument("record fields may not contain spaces or newlines: " +
                                        key + "=" + value);
        if (!first) os << ' ';
        os << key << '=' << value;
        first = false;
    }
    os << '\n';
}

void write_comment(std::ostream& os, const std::string& text) { os << "# " << text << '\n'; }

bool parse_record_line(const std::string& line, Record* out) {
    out->clear();
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') return !out->empty();
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed record token '" + tok + "'");
        out->push_back({tok.substr(0, eq), tok.substr(eq + 1)});
    }
    return !out->empty();
}

std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size())
                os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
}

}  // namespace hermcert
