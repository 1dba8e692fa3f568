#include "monorec/regions.hpp"

#include <array>
#include <cstdio>
#include <limits>
#include <ostream>

#include "monorec/error.hpp"
#include "monorec/qfield.hpp"

namespace monorec {

namespace {

constexpr std::array<std::pair<RegionId, std::string_view>, 9> kNames{{
    {RegionId::D1, "D1"},
    {RegionId::D2, "D2"},
    {RegionId::D3, "D3"},
    {RegionId::D, "D"},
    {RegionId::D1P, "D1P"},
    {RegionId::D2P, "D2P"},
    {RegionId::D3P, "D3P"},
    {RegionId::DP, "DP"},
    {RegionId::DP_BOUNDARY, "DP_BOUNDARY"},
}};

const Rational kOne(1);

void validate_grid(const BoundingBox& bbox, std::int64_t resolution) {
    if (resolution < 2) {
        throw InvalidArgument("raster resolution must be at least 2");
    }
    if (!(bbox.x_min < bbox.x_max) || !(bbox.y_min < bbox.y_max)) {
        throw InvalidArgument("bounding box must have positive area");
    }
}

std::array<RegionId, 3> components(RegionId intersection) {
    if (intersection == RegionId::D) {
        return {RegionId::D1, RegionId::D2, RegionId::D3};
    }
    if (intersection == RegionId::DP) {
        return {RegionId::D1P, RegionId::D2P, RegionId::D3P};
    }
    throw InvalidArgument("intersection identity is defined for D and DP only");
}

}  // namespace

std::string_view region_name(RegionId region) {
    for (const auto& [id, name] : kNames) {
        if (id == region) {
            return name;
        }
    }
    return "?";
}

std::optional<RegionId> parse_region(std::string_view name) {
    for (const auto& [id, text] : kNames) {
        if (text == name) {
            return id;
        }
    }
    return std::nullopt;
}

bool is_root_plane(RegionId region) {
    switch (region) {
        case RegionId::D1:
        case RegionId::D2:
        case RegionId::D3:
        case RegionId::D:
            return true;
        default:
            return false;
    }
}

bool contains_root_plane(RegionId region, const Rational& alpha, const Rational& beta) {
    if (!is_root_plane(region)) {
        throw InvalidArgument(std::string(region_name(region)) +
                              " lives in the coefficient plane");
    }
    const Rational sum = alpha + beta;
    const bool dominant = alpha.abs() >= beta.abs();
    switch (region) {
        case RegionId::D1:
            return sum >= kOne && alpha >= kOne && dominant;
        case RegionId::D2:
            return sum.abs() >= beta.abs() && dominant;
        case RegionId::D3:
            return beta.abs() <= kOne && dominant;
        default:  // D
            return sum >= kOne && alpha >= kOne && beta.abs() <= kOne;
    }
}

bool contains_coeff_plane(RegionId region, const Rational& a, const Rational& b) {
    if (is_root_plane(region)) {
        throw InvalidArgument(std::string(region_name(region)) + " lives in the root plane");
    }
    if (region == RegionId::DP) {
        return a >= kOne && a - kOne >= b && b >= -a - kOne;
    }
    if (region == RegionId::DP_BOUNDARY) {
        const bool on_left = a == kOne && b >= -a - kOne && b <= a - kOne;
        const bool on_upper = b == a - kOne && a >= kOne;
        const bool on_lower = b == -a - kOne && a >= kOne;
        return on_left || on_upper || on_lower;
    }

    const RootPair roots = characteristic_roots_unchecked(a, b);
    if (!roots.real()) {
        // |alpha| = |beta| = sqrt(b)
        switch (region) {
            case RegionId::D1P: return false;
            case RegionId::D2P: return a * a >= b;
            default: return b <= kOne;  // D3P
        }
    }
    const OrderedRoots ordered = order_by_modulus(roots);
    const bool dominant = cmp_abs(ordered.alpha, ordered.beta) >= 0;
    switch (region) {
        case RegionId::D1P:
            return a >= kOne && compare(ordered.alpha, QuadElem(kOne)) >= 0 && dominant;
        case RegionId::D2P:
            return cmp_abs(QuadElem(a), ordered.beta) >= 0 && dominant;
        default:  // D3P
            return cmp_abs(ordered.beta, QuadElem(kOne)) <= 0 && dominant;
    }
}

bool contains(RegionId region, const Rational& x, const Rational& y) {
    return is_root_plane(region) ? contains_root_plane(region, x, y)
                                 : contains_coeff_plane(region, x, y);
}

Rational RasterGrid::center_x(std::int64_t col) const {
    const Rational width = (bbox.x_max - bbox.x_min) / Rational(resolution);
    return bbox.x_min + width * Rational(2 * col + 1, 2);
}

Rational RasterGrid::center_y(std::int64_t row) const {
    const Rational height = (bbox.y_max - bbox.y_min) / Rational(resolution);
    return bbox.y_max - height * Rational(2 * row + 1, 2);
}

std::int64_t RasterGrid::member_count() const {
    std::int64_t count = 0;
    for (const auto cell : cells) {
        count += cell;
    }
    return count;
}

RasterGrid rasterize(RegionId region, const BoundingBox& bbox, std::int64_t resolution,
                     Execution exec) {
    validate_grid(bbox, resolution);
    RasterGrid grid;
    grid.bbox = bbox;
    grid.resolution = resolution;
    grid.cells.assign(static_cast<std::size_t>(resolution * resolution), 0);

    std::vector<Rational> xs(static_cast<std::size_t>(resolution));
    for (std::int64_t col = 0; col < resolution; ++col) {
        xs[static_cast<std::size_t>(col)] = grid.center_x(col);
    }
    auto fill_row = [&](std::int64_t row) {
        const Rational y = grid.center_y(row);
        for (std::int64_t col = 0; col < resolution; ++col) {
            grid.cells[static_cast<std::size_t>(row * resolution + col)] =
                contains(region, xs[static_cast<std::size_t>(col)], y) ? 1 : 0;
        }
    };

    if (exec == Execution::serial) {
        for (std::int64_t row = 0; row < resolution; ++row) {
            fill_row(row);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t row = 0; row < resolution; ++row) {
            fill_row(row);
        }
    }
    return grid;
}

void write_pgm(const RasterGrid& grid, std::ostream& out) {
    out << "P5\n" << grid.resolution << ' ' << grid.resolution << "\n255\n";
    for (const auto cell : grid.cells) {
        out.put(static_cast<char>(cell != 0 ? 255 : 0));
    }
}

void write_csv(const RasterGrid& grid, std::ostream& out) {
    std::array<char, 64> x_text{};
    std::array<char, 64> y_text{};
    for (std::int64_t row = 0; row < grid.resolution; ++row) {
        std::snprintf(y_text.data(), y_text.size(), "%.6g", grid.center_y(row).to_double());
        for (std::int64_t col = 0; col < grid.resolution; ++col) {
            if (!grid.at(row, col)) {
                continue;
            }
            std::snprintf(x_text.data(), x_text.size(), "%.6g", grid.center_x(col).to_double());
            out << x_text.data() << ',' << y_text.data() << '\n';
        }
    }
}

IdentityCheck verify_intersection_identity(RegionId intersection, const BoundingBox& bbox,
                                           std::int64_t resolution, Execution exec) {
    validate_grid(bbox, resolution);
    const auto parts = components(intersection);
    const RasterGrid whole = rasterize(intersection, bbox, resolution, exec);
    std::array<RasterGrid, 3> pieces{rasterize(parts[0], bbox, resolution, exec),
                                     rasterize(parts[1], bbox, resolution, exec),
                                     rasterize(parts[2], bbox, resolution, exec)};

    const auto total = static_cast<std::int64_t>(whole.cells.size());
    std::int64_t mismatches = 0;
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
    auto differs = [&](std::int64_t i) {
        const auto k = static_cast<std::size_t>(i);
        const bool conj = pieces[0].cells[k] != 0 && pieces[1].cells[k] != 0 &&
                          pieces[2].cells[k] != 0;
        return conj != (whole.cells[k] != 0);
    };
    if (exec == Execution::serial) {
        for (std::int64_t i = 0; i < total; ++i) {
            if (differs(i)) {
                ++mismatches;
                first = std::min(first, i);
            }
        }
    } else {
#pragma omp parallel for reduction(+ : mismatches) reduction(min : first)
        for (std::int64_t i = 0; i < total; ++i) {
            if (differs(i)) {
                ++mismatches;
                first = std::min(first, i);
            }
        }
    }

    IdentityCheck check;
    check.points = total;
    check.mismatches = mismatches;
    if (mismatches > 0) {
        check.first_mismatch.emplace(whole.center_x(first % resolution),
                                     whole.center_y(first / resolution));
    }
    return check;
}

}  // namespace monorec
