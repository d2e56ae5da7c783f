#include "hkt/scan_io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hkt/error.hpp"

namespace hkt {
namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad number '" + s + "'");
    }
}

std::int64_t parse_int(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad integer '" + s + "'");
    }
}

}  // namespace

void write_cloud_csv(const PointCloud& cloud, std::ostream& out) {
    out << kCloudCsvHeader << '\n';
    for (const auto& e : cloud.entries()) {
        const Ray& r = e.point.ray();
        const Unit3& u = e.point.unit();
        const CP1Point z = stereographic(e.point);
        out << r[0] << ',' << r[1] << ',' << r[2] << ',' << fmt17(u[0]) << ',' << fmt17(u[1]) << ',' << fmt17(u[2])
            << ',';
        if (z.infinite)
            out << "inf,0";
        else
            out << fmt17(z.z.real()) << ',' << fmt17(z.z.imag());
        out << ',';
        for (std::size_t i = 0; i < e.witness.size(); ++i) out << (i ? ";" : "") << e.witness[i];
        out << '\n';
    }
}

std::vector<CloudCsvRow> read_cloud_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCloudCsvHeader)
        throw Error(ErrorKind::ParseError, "missing CSV header '" + std::string(kCloudCsvHeader) + "'");
    std::vector<CloudCsvRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 9)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 9 fields, got " +
                                                   std::to_string(f.size()));
        CloudCsvRow row;
        for (int a = 0; a < 3; ++a) {
            try {
                row.ray[a] = Integer(f[a], 10);
            } catch (const std::invalid_argument&) {
                throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad ray entry '" + f[a] + "'");
            }
            row.unit[a] = parse_double(f[3 + a], lineno);
        }
        if (f[6] == "inf") {
            row.cp1.infinite = true;
        } else {
            row.cp1.z = {parse_double(f[6], lineno), parse_double(f[7], lineno)};
        }
        for (const auto& w : split(f[8], ';')) row.witness.push_back(parse_int(w, lineno));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_cloud_svg(const PointCloud& cloud, std::ostream& out, const std::string& title) {
    constexpr double panel = 420, scale = 180 / std::numbers::sqrt2, margin = 30;
    const double height = panel + margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * panel << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << 2 * panel << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        out << "<text x=\"" << panel << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
            << title << " (" << cloud.size() << " points)</text>\n";
    const char* labels[2] = {"a >= 0 (centre I)", "a < 0 (centre -I)"};
    for (int side = 0; side < 2; ++side) {
        const double cx = panel * side + panel / 2, cy = margin + panel / 2;
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << scale * std::numbers::sqrt2
            << "\" fill=\"none\" stroke=\"#888\"/>\n";
        out << "<text x=\"" << cx << "\" y=\"" << height - 4
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << labels[side] << "</text>\n";
    }
    for (const auto& e : cloud.entries()) {
        const Unit3& u = e.point.unit();
        const int side = u[0] >= 0 ? 0 : 1;
        const double pole = side == 0 ? 1.0 : -1.0;
        const double theta = std::acos(std::clamp(pole * u[0], -1.0, 1.0));
        const double r = 2 * std::sin(theta / 2);
        const double rho = std::hypot(u[1], u[2]);
        const double dx = rho > 0 ? u[1] / rho : 0, dy = rho > 0 ? u[2] / rho : 0;
        const double cx = panel * side + panel / 2 + scale * r * dx;
        const double cy = margin + panel / 2 - scale * r * dy;
        out << "<circle cx=\"" << fmt17(cx) << "\" cy=\"" << fmt17(cy) << "\" r=\"1.5\" fill=\"#1f5fa8\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace hkt
