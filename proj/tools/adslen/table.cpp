#include "table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace adslen::cli {

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("table row width does not match the header");
    rows.push_back(std::move(row));
}

int Table::column(const std::string& name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

std::string format_cell(const Cell& c) {
    if (auto d = std::get_if<double>(&c)) {
        if (std::isnan(*d)) return "nan";
        if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", *d);
        return buf;
    }
    if (auto l = std::get_if<long>(&c)) return std::to_string(*l);
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
    out += '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + format_cell(r[i]);
        out += '\n';
    }
    return out;
}

namespace {

double numeric(const Cell& c) {
    if (auto d = std::get_if<double>(&c)) return *d;
    if (auto l = std::get_if<long>(&c)) return static_cast<double>(*l);
    return NAN;
}

}  // namespace

std::string to_svg(const Table& t, const std::string& x, const std::string& y, const std::string& series) {
    int xi = t.column(x), yi = t.column(y), si = series.empty() ? -1 : t.column(series);
    if (xi < 0 || yi < 0) throw std::invalid_argument("plot column '" + (xi < 0 ? x : y) + "' not in the table");

    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> lines;
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& r : t.rows) {
        double px = numeric(r[xi]), py = numeric(r[yi]);
        if (!std::isfinite(px) || !std::isfinite(py)) continue;
        std::string key = si >= 0 ? format_cell(r[si]) : y;
        if (!lines.count(key)) order.push_back(key);
        lines[key].push_back({px, py});
        x0 = std::min(x0, px);
        x1 = std::max(x1, px);
        y0 = std::min(y0, py);
        y1 = std::max(y1, py);
    }
    if (order.empty()) x0 = y0 = 0, x1 = y1 = 1;
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;

    const double W = 640, H = 400, M = 50;
    auto sx = [&](double v) { return M + (W - 2 * M) * (v - x0) / (x1 - x0); };
    auto sy = [&](double v) { return H - M - (H - 2 * M) * (v - y0) / (y1 - y0); };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

    std::ostringstream os;
    char buf[128];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<rect x=\"" << M << "\" y=\"" << M << "\" width=\"" << W - 2 * M << "\" height=\"" << H - 2 * M
       << "\" fill=\"none\" stroke=\"#888\"/>\n";
    std::snprintf(buf, sizeof buf, "%.6g", y1);
    os << "<text x=\"4\" y=\"" << M + 4 << "\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.6g", y0);
    os << "<text x=\"4\" y=\"" << H - M << "\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.6g", x0);
    os << "<text x=\"" << M << "\" y=\"" << H - M + 16 << "\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.6g", x1);
    os << "<text x=\"" << W - M - 30 << "\" y=\"" << H - M + 16 << "\" font-size=\"11\">" << buf << "</text>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" font-size=\"12\">" << x << "</text>\n";
    os << "<text x=\"" << M << "\" y=\"" << M - 10 << "\" font-size=\"12\">" << y << "</text>\n";
    for (std::size_t k = 0; k < order.size(); ++k) {
        const char* colour = palette[k % 7];
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [px, py] : lines[order[k]]) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(px), sy(py));
            os << buf;
        }
        os << "\"/>\n";
        if (si >= 0)
            os << "<text x=\"" << W - M + 4 << "\" y=\"" << M + 14 * (k + 1) << "\" font-size=\"11\" fill=\"" << colour
               << "\">" << order[k] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace adslen::cli
