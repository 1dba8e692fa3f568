#pragma once

/**
 * @file regions.hpp
 * @brief The monotone-property domains in the root plane (alpha, beta) and
 *        the coefficient plane (a, b), with exact rasterization.
 *
 * Root plane:
 *   D1: alpha + beta >= 1, alpha >= 1, |alpha| >= |beta|
 *   D2: |alpha + beta| >= |beta|, |alpha| >= |beta|
 *   D3: |beta| <= 1, |alpha| >= |beta|
 *   D : alpha + beta >= 1, alpha >= 1, |beta| <= 1
 * Coefficient plane (alpha, beta are the roots of x^2 - a x + b ordered by
 * modulus; for complex roots |alpha| = |beta| = sqrt(b)):
 *   D1': a >= 1, alpha >= 1, |alpha| >= |beta|
 *   D2': |a| >= |beta|, |alpha| >= |beta|
 *   D3': |beta| <= 1, |alpha| >= |beta|
 *   D' : a >= 1, a - 1 >= b >= -a - 1
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "monorec/execution.hpp"
#include "monorec/rational.hpp"

namespace monorec {

enum class RegionId { D1, D2, D3, D, D1P, D2P, D3P, DP, DP_BOUNDARY };

std::string_view region_name(RegionId region);
/// Accepts "D1".."D", "D1P".."DP", "DP_BOUNDARY"; nullopt otherwise.
std::optional<RegionId> parse_region(std::string_view name);
bool is_root_plane(RegionId region);

bool contains_root_plane(RegionId region, const Rational& alpha, const Rational& beta);
bool contains_coeff_plane(RegionId region, const Rational& a, const Rational& b);
/// Dispatches on the plane the region lives in.
bool contains(RegionId region, const Rational& x, const Rational& y);

struct BoundingBox {
    Rational x_min;
    Rational x_max;
    Rational y_min;
    Rational y_max;
};

/// Membership bitmap; row 0 is the top (y_max) edge, column 0 the left edge.
struct RasterGrid {
    BoundingBox bbox;
    std::int64_t resolution = 0;  // cells per axis
    std::vector<std::uint8_t> cells;  // row-major, 1 = member

    [[nodiscard]] bool at(std::int64_t row, std::int64_t col) const {
        return cells[static_cast<std::size_t>(row * resolution + col)] != 0;
    }
    [[nodiscard]] Rational center_x(std::int64_t col) const;
    [[nodiscard]] Rational center_y(std::int64_t row) const;
    [[nodiscard]] std::int64_t member_count() const;
};

/// Exact cell-center membership. Rows are filled in parallel for
/// Execution::parallel; the output is identical either way.
RasterGrid rasterize(RegionId region, const BoundingBox& bbox, std::int64_t resolution,
                     Execution exec = Execution::parallel);

/// Binary PGM (P5, maxval 255, member = 255).
void write_pgm(const RasterGrid& grid, std::ostream& out);
/// "x,y" per member cell center, 6 significant digits, row-major.
void write_csv(const RasterGrid& grid, std::ostream& out);

struct IdentityCheck {
    std::int64_t points = 0;
    std::int64_t mismatches = 0;
    std::optional<std::pair<Rational, Rational>> first_mismatch;
};

/// Compares the closed-form intersection (D or D') against the conjunction of
/// its three component regions at every cell center of the grid.
IdentityCheck verify_intersection_identity(RegionId intersection, const BoundingBox& bbox,
                                           std::int64_t resolution,
                                           Execution exec = Execution::parallel);

}  // namespace monorec
