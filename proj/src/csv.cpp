#include "kgc/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "kgc/errors.hpp"

namespace kgc::io {

std::string format_value(double v) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.12e", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::size_t CsvTable::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw InvalidArgument("csv: no column named '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

void write_csv(std::ostream& os, const CsvTable& table) {
    for (const auto& c : table.comments) os << "# " << c << '\n';
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
        if (k) os << ',';
        os << table.columns[k];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << ',';
            os << format_value(row[k]);
        }
        os << '\n';
    }
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (auto& s : out) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        s = (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
    }
    return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
    double v = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw InvalidArgument("csv line " + std::to_string(line_no) + ": not a number '" + s + "'");
    }
    return v;
}

}  // namespace

CsvTable read_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (have_header) throw InvalidArgument("csv: comment after header at line " + std::to_string(line_no));
            std::string c = line.substr(1);
            if (!c.empty() && c.front() == ' ') c.erase(0, 1);
            table.comments.push_back(std::move(c));
            continue;
        }
        auto cells = split(line);
        if (!have_header) {
            table.columns = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != table.columns.size()) {
            throw InvalidArgument("csv line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(table.columns.size()) + " fields");
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_number(c, line_no));
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw InvalidArgument("csv: missing header line");
    return table;
}

CsvTable field_table(const Field2D& field, std::vector<std::string> comments) {
    field.check_shape();
    CsvTable table;
    table.comments = std::move(comments);
    table.columns = {"t", "x", "u"};
    table.rows.reserve(field.values.size());
    for (std::size_t i = 0; i < field.nt(); ++i) {
        for (std::size_t j = 0; j < field.nx(); ++j) {
            table.rows.push_back({field.ts[i], field.xs[j], field.at(i, j)});
        }
    }
    return table;
}

Field2D table_field(const CsvTable& table) {
    const auto ct = table.column("t");
    const auto cx = table.column("x");
    const auto cu = table.column("u");
    std::vector<double> ts;
    std::vector<double> xs;
    for (const auto& r : table.rows) {
        if (ts.empty() || r[ct] != ts.back()) ts.push_back(r[ct]);
        if (ts.size() == 1) xs.push_back(r[cx]);
    }
    if (xs.size() * ts.size() != table.rows.size()) throw ShapeError("csv: rows do not form a t-major grid");
    Field2D f(xs, ts, 0.0, Provenance::closed_form);
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        if (table.rows[k][cx] != xs[k % xs.size()]) throw ShapeError("csv: inconsistent x column");
        f.values[k] = table.rows[k][cu];
    }
    return f;
}

}  // namespace kgc::io
