#pragma once

// Plain-text point listings: one point per line, exact fractions first so
// downstream consumers never see rounded coordinates.
//
//   # construction=folded base=2 m=2 depth=4 points=4
//   x1,x2,x1_dec,x2_dec
//   7/16,7/16,0.4375,0.4375
//
// The reader accepts comma, tab, or space separated fields, skips '#' comment
// lines and any line whose first field is not a fraction (column headers),
// and keeps only the leading two fields — so the writer's decimal columns and
// bare "p/q,p/q" fixture files both round-trip.

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "zbnet/discrepancy.hpp"
#include "zbnet/netcore.hpp"
#include "zbnet/rational.hpp"

namespace zbnet {

enum class TableFormat { csv, tsv, plain };

inline char table_separator(TableFormat f) {
    switch (f) {
        case TableFormat::csv: return ',';
        case TableFormat::tsv: return '\t';
        case TableFormat::plain: return ' ';
    }
    return ',';
}

inline void write_points(std::ostream& os, const DigitalNet& net, const std::string& construction,
                         TableFormat format = TableFormat::csv) {
    const char sep = table_separator(format);
    os << "# construction=" << construction << " base=" << net.base() << " m=" << net.m()
       << " depth=" << net.n() << " points=" << net.points.size() << "\n";
    os << "x1" << sep << "x2" << sep << "x1_dec" << sep << "x2_dec\n";
    for (const NetPoint& p : net.points) {
        const Rational x1(p.num1, net.denom), x2(p.num2, net.denom);
        os << p.num1 << "/" << net.denom << sep << p.num2 << "/" << net.denom << sep
           << decimal_string(x1) << sep << decimal_string(x2) << "\n";
    }
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == '\t' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::vector<RatPoint> read_points(std::istream& is) {
    std::vector<RatPoint> pts;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_fields(line);
        if (fields.size() < 2) continue;
        const auto x = parse_rational(fields[0]);
        if (!x) continue;  // column-header or annotation line
        const auto y = parse_rational(fields[1]);
        require(static_cast<bool>(y), "point line has a fractional first field but unparsable second: " + line);
        require(*x >= 0 && *x < 1 && *y >= 0 && *y < 1, "point outside [0,1)^2: " + line);
        pts.push_back({*x, *y});
    }
    return pts;
}

}  // namespace zbnet
