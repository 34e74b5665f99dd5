#pragma once

#include <string>
#include <variant>
#include <vector>

namespace adslen::cli {

using Cell = std::variant<double, long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
    int column(const std::string& name) const;  // -1 if absent
};

// 17 significant digits, '.' decimal point.
std::string format_cell(const Cell& c);
// Header plus rows, LF line endings.
std::string to_csv(const Table& t);

// Line plot of column y against column x, one polyline per distinct value of the series
// column (or a single line when series is empty).
std::string to_svg(const Table& t, const std::string& x, const std::string& y, const std::string& series);

}  // namespace adslen::cli
