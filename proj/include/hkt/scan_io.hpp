#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hkt/scan.hpp"

namespace hkt {

inline constexpr const char* kCloudCsvHeader = "a,b,c,ux,uy,uz,cp1_re,cp1_im,witness";

/// One row per point in cloud order; floats with 17 significant digits,
/// `inf,0` for the point at infinity, witness as ';'-separated integers.
void write_cloud_csv(const PointCloud& cloud, std::ostream& out);

struct CloudCsvRow {
    Ray ray;
    Unit3 unit{};
    CP1Point cp1;
    BoxVector witness;
};

/// Throws ParseError.
std::vector<CloudCsvRow> read_cloud_csv(std::istream& in);

/// Lambert azimuthal equal-area projection of the a >= 0 hemisphere (left,
/// centred on I) and a < 0 hemisphere (right, centred on -I).
void write_cloud_svg(const PointCloud& cloud, std::ostream& out, const std::string& title = {});

}  // namespace hkt
