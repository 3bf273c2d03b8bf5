#pragma once

#include "parahoric/kernels.hpp"

namespace parahoric::kernels::detail {

std::size_t point_count(std::int64_t modulus, std::size_t dim, std::size_t cap);
void decode(std::size_t index, std::int64_t modulus, std::span<std::int64_t> out);
void mat_vec(const ResidueMatrix& m, std::span<const std::int64_t> x, std::span<std::int64_t> out);
void affine_image(const AffineMap& map, std::span<const std::int64_t> x, std::span<std::int64_t> out);

namespace serial {
std::vector<char> kernel_mask(const ResidueMatrix& c, std::size_t dim, std::size_t count);
std::vector<std::int64_t> image_points(const ResidueMatrix& basis, std::size_t count);
std::vector<std::int64_t> apply_rows(const ResidueMatrix& k, const PointTable& points);
std::vector<std::size_t> apply_maps(const PointTable& points, std::span<const AffineMap> maps);
std::uint64_t burnside_total(std::span<const AffineMap> maps, std::size_t cap);
}  // namespace serial

namespace parallel {
std::vector<char> kernel_mask(const ResidueMatrix& c, std::size_t dim, std::size_t count);
std::vector<std::int64_t> image_points(const ResidueMatrix& basis, std::size_t count);
std::vector<std::int64_t> apply_rows(const ResidueMatrix& k, const PointTable& points);
std::vector<std::size_t> apply_maps(const PointTable& points, std::span<const AffineMap> maps);
std::uint64_t burnside_total(std::span<const AffineMap> maps, std::size_t cap);
}  // namespace parallel

}  // namespace parahoric::kernels::detail
