// Reference implementations: straightforward loops, no threading.

#include "detail.hpp"

namespace parahoric::kernels::detail::serial {

std::vector<char> kernel_mask(const ResidueMatrix& c, std::size_t dim, std::size_t count) {
  std::vector<char> keep(count, 0);
  std::vector<std::int64_t> x(dim), y(c.rows);
  for (std::size_t idx = 0; idx < count; ++idx) {
    decode(idx, c.modulus, x);
    mat_vec(c, x, y);
    bool zero = true;
    for (auto v : y) zero = zero && v == 0;
    keep[idx] = zero ? 1 : 0;
  }
  return keep;
}

std::vector<std::int64_t> image_points(const ResidueMatrix& basis, std::size_t count) {
  std::vector<std::int64_t> flat(count * basis.rows);
  std::vector<std::int64_t> c(basis.cols);
  for (std::size_t idx = 0; idx < count; ++idx) {
    decode(idx, basis.modulus, c);
    mat_vec(basis, c, std::span<std::int64_t>(flat.data() + idx * basis.rows, basis.rows));
  }
  return flat;
}

std::vector<std::int64_t> apply_rows(const ResidueMatrix& k, const PointTable& points) {
  std::vector<std::int64_t> out(points.size() * k.rows);
  for (std::size_t i = 0; i < points.size(); ++i)
    mat_vec(k, points.point(i), std::span<std::int64_t>(out.data() + i * k.rows, k.rows));
  return out;
}

std::vector<std::size_t> apply_maps(const PointTable& points, std::span<const AffineMap> maps) {
  const std::size_t n = points.size();
  std::vector<std::size_t> images(maps.size() * n);
  std::vector<std::int64_t> y(points.dim());
  for (std::size_t g = 0; g < maps.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) {
      affine_image(maps[g], points.point(i), y);
      images[g * n + i] = points.find(y);
    }
  return images;
}

std::uint64_t burnside_total(std::span<const AffineMap> maps, std::size_t cap) {
  std::uint64_t total = 0;
  for (const auto& m : maps) total += count_fixed_points(m, cap);
  return total;
}

}  // namespace parahoric::kernels::detail::serial
