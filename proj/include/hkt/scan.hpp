#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hkt/twistor_core.hpp"

namespace hkt {

using BoxVector = std::vector<std::int64_t>;

struct ScanConfig {
    std::int64_t box_bound = 1;
    /// Basis indices to enumerate; others stay 0. Empty means all.
    std::vector<std::size_t> coordinate_mask;
    int grid_resolution = 200;
    unsigned threads = 1;

    /// Throws InvalidConfig.
    void validate(std::size_t rank) const;
    std::vector<std::size_t> active_indices(std::size_t rank) const;
};

/// Nonzero integer vectors with active coordinates in [-B, B], lexicographic
/// from (-B, ..., -B). Returning false from the callback stops early.
void for_each_box_vector(std::size_t rank, const ScanConfig& config,
                         const std::function<bool(std::span<const std::int64_t>)>& visit);
std::vector<BoxVector> box_vectors(std::size_t rank, const ScanConfig& config);

struct CloudEntry {
    TwistorPoint point;
    BoxVector witness;
};

/// Finite set of exact twistor points sorted by signed ray, one witness each.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(std::vector<CloudEntry> sorted_entries) : entries_(std::move(sorted_entries)) {}

    const std::vector<CloudEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const CloudEntry* find(const Ray& ray) const;
    bool contains(const Ray& ray) const { return find(ray) != nullptr; }
    bool is_subset_of(const PointCloud& other) const;
    std::vector<Unit3> units() const;

private:
    std::vector<CloudEntry> entries_;
};

/// { pi(omega) : omega integral in the box, q(omega, omega) > 0 }, witness the
/// lexicographically smallest omega. Throws InvalidConfig.
PointCloud scan_algebraic(const PeriodData& data, const ScanConfig& config);

/// { ray(p(lambda)) : lambda integral in the box, p(lambda) != 0 }; the box is
/// symmetric so both orientations of every line appear.
PointCloud scan_non_general_type(const PeriodData& data, const ScanConfig& config);

/// resolution^2 points: a_i = 1 - 2i/(N-1), azimuth i * golden angle.
std::vector<Unit3> fibonacci_grid(int resolution);

/// Max over the Fibonacci grid of the angle to the nearest cloud point.
/// Throws EmptyCloud; InvalidConfig for resolution < 2.
double covering_radius(const PointCloud& cloud, int grid_resolution);
double covering_radius(std::span<const Unit3> points, int grid_resolution);

}  // namespace hkt
