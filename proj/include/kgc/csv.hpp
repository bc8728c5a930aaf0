#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kgc/field.hpp"

// CSV contract: comma separated, '\n' line endings, '#'-prefixed metadata
// lines before the column header, numbers printed with "%.12e".

namespace kgc::io {

std::string format_value(double v);

struct CsvTable {
    std::vector<std::string> comments;  // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Index of a named column; throws InvalidArgument if absent.
    std::size_t column(const std::string& name) const;
};

void write_csv(std::ostream& os, const CsvTable& table);

/// Parses what write_csv emits. Throws InvalidArgument on malformed input.
CsvTable read_csv(std::istream& is);

/// Long format t,x,u in t-major order.
CsvTable field_table(const Field2D& field, std::vector<std::string> comments = {});

/// Inverse of field_table; q and provenance are not recovered.
Field2D table_field(const CsvTable& table);

}  // namespace kgc::io
