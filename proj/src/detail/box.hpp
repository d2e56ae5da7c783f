#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hkt/matrix.hpp"
#include "hkt/rational.hpp"

namespace hkt::detail {

/// Lexicographic odometer over [-bound, bound] on the active coordinates,
/// other coordinates fixed at 0. Starts at (-bound, ..., -bound).
class BoxOdometer {
public:
    BoxOdometer(std::size_t rank, std::vector<std::size_t> active, std::int64_t bound)
        : active_(std::move(active)), bound_(bound), v_(rank, 0) {
        for (auto i : active_) v_[i] = -bound_;
    }

    std::span<const std::int64_t> value() const noexcept { return v_; }

    bool is_zero() const noexcept {
        for (auto i : active_)
            if (v_[i] != 0) return false;
        return true;
    }

    /// Advances to the next vector; false once the box is exhausted.
    bool advance() {
        for (std::size_t k = active_.size(); k-- > 0;) {
            auto& x = v_[active_[k]];
            if (x < bound_) {
                ++x;
                return true;
            }
            x = -bound_;
        }
        return false;
    }

private:
    std::vector<std::size_t> active_;
    std::int64_t bound_;
    std::vector<std::int64_t> v_;
};

/// Evaluates S * x for a 3 x r integer matrix S on small integer vectors,
/// in int64 when the box bound makes overflow impossible, in GMP otherwise.
class RowProjector {
public:
    RowProjector(const Matrix<Integer>& rows, std::int64_t bound, std::size_t active_count) : rows_(rows) {
        Integer max_entry = 0;
        for (std::size_t a = 0; a < rows.rows(); ++a)
            for (std::size_t j = 0; j < rows.cols(); ++j)
                if (abs(rows(a, j)) > max_entry) max_entry = abs(rows(a, j));
        const Integer worst = max_entry * bound * static_cast<unsigned long>(active_count);
        fast_ = worst < Integer(std::numeric_limits<std::int64_t>::max() / 4);
        if (fast_) {
            small_.resize(rows.rows() * rows.cols());
            for (std::size_t a = 0; a < rows.rows(); ++a)
                for (std::size_t j = 0; j < rows.cols(); ++j) small_[a * rows.cols() + j] = rows(a, j).get_si();
        }
    }

    bool fast() const noexcept { return fast_; }

    /// Requires fast().
    void apply(std::span<const std::int64_t> x, std::int64_t out[3]) const {
        const std::size_t r = rows_.cols();
        for (std::size_t a = 0; a < 3; ++a) {
            std::int64_t s = 0;
            const std::int64_t* row = small_.data() + a * r;
            for (std::size_t j = 0; j < r; ++j) s += row[j] * x[j];
            out[a] = s;
        }
    }

    void apply(std::span<const std::int64_t> x, Integer out[3]) const {
        const std::size_t r = rows_.cols();
        for (std::size_t a = 0; a < 3; ++a) {
            out[a] = 0;
            for (std::size_t j = 0; j < r; ++j)
                if (x[j] != 0) out[a] += rows_(a, j) * static_cast<long>(x[j]);
        }
    }

private:
    const Matrix<Integer>& rows_;
    bool fast_ = false;
    std::vector<std::int64_t> small_;
};

}  // namespace hkt::detail
