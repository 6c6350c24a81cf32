#include "csv_io.hpp"

#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spinwit/spin.hpp"

namespace spinwit::cli {

namespace {

double parse_spin_or_decimal(const std::string& token) {
    try {
        return parse_spin(token).value();
    } catch (const std::invalid_argument&) {
    }
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw std::invalid_argument("fit input: cannot parse s value '" + token + "'");
    return v;
}

double parse_number(const std::string& token, const char* what) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw std::invalid_argument(std::string("fit input: cannot parse ") + what + " '" +
                                    token + "'");
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        std::size_t a = field.find_first_not_of(" \t\r");
        std::size_t b = field.find_last_not_of(" \t\r");
        fields.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
    }
    return fields;
}

bool looks_like_header(const std::vector<std::string>& fields) {
    if (fields.empty()) return false;
    const std::string& first = fields[0];
    return !first.empty() && (first[0] < '0' || first[0] > '9');
}

}  // namespace

FitTable read_fit_table(std::istream& is) {
    FitTable table;
    std::string line;
    bool first_line = true;
    std::size_t expected_cols = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (first_line) {
            first_line = false;
            if (looks_like_header(fields)) continue;
        }
        if (fields.size() != 2 && fields.size() != 3)
            throw std::invalid_argument("fit input: expected 2 or 3 columns, got " +
                                        std::to_string(fields.size()));
        if (expected_cols == 0)
            expected_cols = fields.size();
        else if (fields.size() != expected_cols)
            throw std::invalid_argument("fit input: inconsistent column count");
        FitPoint point;
        point.s = parse_spin_or_decimal(fields[0]);
        point.f = parse_number(fields[1], "f value");
        table.points.push_back(point);
        if (fields.size() == 3) {
            double hw = parse_number(fields[2], "half_width");
            if (!(hw > 0.0))
                throw std::invalid_argument("fit input: half_width must be positive");
            table.half_widths.push_back(hw);
        }
    }
    if (table.points.empty()) throw std::invalid_argument("fit input: no data rows");
    return table;
}

}  // namespace spinwit::cli
