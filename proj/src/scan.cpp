#include "hkt/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>

#include "detail/box.hpp"
#include "hkt/error.hpp"

namespace hkt {
namespace {

using SmallRay = std::array<std::int64_t, 3>;

enum class ScanKind { Algebraic, NonGeneralType };

SmallRay primitive_small(const std::int64_t s[3]) {
    const std::int64_t g = std::gcd(std::gcd(s[0], s[1]), s[2]);
    return {s[0] / g, s[1] / g, s[2] / g};
}

Ray to_ray(const SmallRay& r) {
    return {Integer(static_cast<long>(r[0])), Integer(static_cast<long>(r[1])), Integer(static_cast<long>(r[2]))};
}

/// q(x, x) on box vectors, int64 when it cannot overflow.
class SelfPairing {
public:
    SelfPairing(const GramLattice& lattice, std::int64_t bound, std::span<const std::size_t> active)
        : lattice_(lattice), active_(active.begin(), active.end()) {
        Integer max_entry = 0;
        for (auto i : active_)
            for (auto j : active_)
                if (abs(lattice.gram()(i, j)) > max_entry) max_entry = abs(lattice.gram()(i, j));
        const unsigned long k = active_.size();
        const Integer worst = max_entry * bound * bound * k * k;
        fast_ = worst < Integer(std::numeric_limits<std::int64_t>::max() / 4);
        if (fast_) {
            small_.resize(k * k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) small_[a * k + b] = lattice.gram()(active_[a], active_[b]).get_si();
        }
    }

    bool positive(std::span<const std::int64_t> x) const {
        const std::size_t k = active_.size();
        if (fast_) {
            std::int64_t total = 0;
            for (std::size_t a = 0; a < k; ++a) {
                const std::int64_t xa = x[active_[a]];
                if (xa == 0) continue;
                std::int64_t row = 0;
                for (std::size_t b = 0; b < k; ++b) row += small_[a * k + b] * x[active_[b]];
                total += xa * row;
            }
            return total > 0;
        }
        Integer total = 0;
        for (auto i : active_) {
            if (x[i] == 0) continue;
            Integer row = 0;
            for (auto j : active_)
                if (x[j] != 0) row += lattice_.gram()(i, j) * static_cast<long>(x[j]);
            total += row * static_cast<long>(x[i]);
        }
        return total > 0;
    }

private:
    const GramLattice& lattice_;
    std::vector<std::size_t> active_;
    bool fast_ = false;
    std::vector<std::int64_t> small_;
};

using RayMap = std::map<Ray, BoxVector>;

/// Scans the vectors whose first active coordinate equals `lead`, in
/// lexicographic order, keeping the first witness per ray.
RayMap scan_slice(const PeriodData& data, const std::vector<std::size_t>& active, std::int64_t bound,
                  std::int64_t lead, ScanKind kind) {
    const std::vector<std::size_t> rest(active.begin() + 1, active.end());
    detail::BoxOdometer box(data.rank(), rest, bound);
    detail::RowProjector proj(data.triple().integer_rows(), bound, active.size());
    const SelfPairing pairing(data.lattice(), bound, active);
    BoxVector x(data.rank(), 0);

    std::map<SmallRay, BoxVector> small;
    RayMap big;
    do {
        const auto v = box.value();
        std::copy(v.begin(), v.end(), x.begin());
        x[active.front()] = lead;
        if (lead == 0 && box.is_zero()) continue;
        if (kind == ScanKind::Algebraic && !pairing.positive(x)) continue;

        // For positive x, q(x, omega_L) > 0 holds exactly on the orientation
        // of p(x) itself, so the signed ray of p(x) is pi(x).
        if (proj.fast()) {
            std::int64_t s[3];
            proj.apply(x, s);
            if (s[0] == 0 && s[1] == 0 && s[2] == 0) continue;
            small.try_emplace(primitive_small(s), x);
        } else {
            Integer s[3];
            proj.apply(x, s);
            if (s[0] == 0 && s[1] == 0 && s[2] == 0) continue;
            const auto p = primitive_integer(std::span<const Integer>(s, 3));
            big.try_emplace(Ray{p[0], p[1], p[2]}, x);
        }
    } while (box.advance());

    for (auto& [r, w] : small) big.try_emplace(to_ray(r), std::move(w));
    return big;
}

PointCloud run_scan(const PeriodData& data, const ScanConfig& config, ScanKind kind) {
    config.validate(data.rank());
    const auto active = config.active_indices(data.rank());
    const std::int64_t bound = config.box_bound;
    const std::size_t slices = static_cast<std::size_t>(2 * bound + 1);

    std::vector<RayMap> parts(slices);
    const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(slices)));
    if (workers == 1) {
        for (std::size_t s = 0; s < slices; ++s)
            parts[s] = scan_slice(data, active, bound, -bound + static_cast<std::int64_t>(s), kind);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t s; (s = next.fetch_add(1)) < slices;)
                    parts[s] = scan_slice(data, active, bound, -bound + static_cast<std::int64_t>(s), kind);
            });
    }

    // Slices are visited in lexicographic order, so first-wins keeps the
    // lexicographically smallest witness.
    RayMap merged;
    for (auto& part : parts)
        for (auto& [r, w] : part) merged.try_emplace(r, std::move(w));

    std::vector<CloudEntry> entries;
    entries.reserve(merged.size());
    for (auto& [r, w] : merged) entries.push_back({TwistorPoint::from_ray(r), std::move(w)});
    return PointCloud(std::move(entries));
}

}  // namespace

void ScanConfig::validate(std::size_t rank) const {
    if (box_bound < 1) throw Error(ErrorKind::InvalidConfig, "box bound must be at least 1");
    if (grid_resolution < 2) throw Error(ErrorKind::InvalidConfig, "grid resolution must be at least 2");
    std::vector<std::size_t> seen = coordinate_mask;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw Error(ErrorKind::InvalidConfig, "coordinate mask has repeated indices");
    for (auto i : coordinate_mask)
        if (i >= rank)
            throw Error(ErrorKind::InvalidConfig,
                        "mask index " + std::to_string(i) + " outside rank " + std::to_string(rank));
}

std::vector<std::size_t> ScanConfig::active_indices(std::size_t rank) const {
    std::vector<std::size_t> active = coordinate_mask;
    if (active.empty()) {
        active.resize(rank);
        std::iota(active.begin(), active.end(), std::size_t{0});
    }
    std::sort(active.begin(), active.end());
    return active;
}

void for_each_box_vector(std::size_t rank, const ScanConfig& config,
                         const std::function<bool(std::span<const std::int64_t>)>& visit) {
    if (config.box_bound < 1) throw Error(ErrorKind::InvalidConfig, "box bound must be at least 1");
    for (auto i : config.coordinate_mask)
        if (i >= rank) throw Error(ErrorKind::InvalidConfig, "mask index " + std::to_string(i) + " outside rank");
    detail::BoxOdometer box(rank, config.active_indices(rank), config.box_bound);
    do {
        if (box.is_zero()) continue;
        if (!visit(box.value())) return;
    } while (box.advance());
}

std::vector<BoxVector> box_vectors(std::size_t rank, const ScanConfig& config) {
    std::vector<BoxVector> out;
    for_each_box_vector(rank, config, [&](std::span<const std::int64_t> v) {
        out.emplace_back(v.begin(), v.end());
        return true;
    });
    return out;
}

const CloudEntry* PointCloud::find(const Ray& ray) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), ray,
                               [](const CloudEntry& e, const Ray& r) { return e.point.ray() < r; });
    if (it == entries_.end() || it->point.ray() != ray) return nullptr;
    return &*it;
}

bool PointCloud::is_subset_of(const PointCloud& other) const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const CloudEntry& e) { return other.contains(e.point.ray()); });
}

std::vector<Unit3> PointCloud::units() const {
    std::vector<Unit3> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.point.unit());
    return out;
}

PointCloud scan_algebraic(const PeriodData& data, const ScanConfig& config) {
    return run_scan(data, config, ScanKind::Algebraic);
}

PointCloud scan_non_general_type(const PeriodData& data, const ScanConfig& config) {
    return run_scan(data, config, ScanKind::NonGeneralType);
}

std::vector<Unit3> fibonacci_grid(int resolution) {
    if (resolution < 2) throw Error(ErrorKind::InvalidConfig, "grid resolution must be at least 2");
    const std::size_t n = static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<Unit3> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i);
        const double a = 1.0 - 2.0 * t / static_cast<double>(n - 1);
        const double rho = std::sqrt(std::max(0.0, 1.0 - a * a));
        const double theta = t * golden;
        grid[i] = {a, rho * std::cos(theta), rho * std::sin(theta)};
    }
    return grid;
}

double covering_radius(std::span<const Unit3> points, int grid_resolution) {
    if (points.empty()) throw Error(ErrorKind::EmptyCloud, "covering radius of an empty cloud");
    const auto grid = fibonacci_grid(grid_resolution);
    double worst = 0;
    for (const auto& g : grid) {
        double best_dot = -2;
        const Unit3* nearest = nullptr;
        for (const auto& p : points) {
            const double d = g[0] * p[0] + g[1] * p[1] + g[2] * p[2];
            if (d > best_dot) {
                best_dot = d;
                nearest = &p;
            }
        }
        worst = std::max(worst, angle_between(g, *nearest));
    }
    return worst;
}

double covering_radius(const PointCloud& cloud, int grid_resolution) {
    const auto units = cloud.units();
    return covering_radius(std::span<const Unit3>(units), grid_resolution);
}

}  // namespace hkt
