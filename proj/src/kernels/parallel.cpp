// OpenMP versions of the kernels in serial.cpp. Output is written by index,
// so results are identical to the serial reference regardless of scheduling.

#include "detail.hpp"

#include <cstdint>

namespace parahoric::kernels::detail::parallel {

std::vector<char> kernel_mask(const ResidueMatrix& c, std::size_t dim, std::size_t count) {
  std::vector<char> keep(count, 0);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    std::vector<std::int64_t> x(dim), y(c.rows);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      decode(static_cast<std::size_t>(idx), c.modulus, x);
      mat_vec(c, x, y);
      bool zero = true;
      for (auto v : y) zero = zero && v == 0;
      keep[static_cast<std::size_t>(idx)] = zero ? 1 : 0;
    }
  }
  return keep;
}

std::vector<std::int64_t> image_points(const ResidueMatrix& basis, std::size_t count) {
  std::vector<std::int64_t> flat(count * basis.rows);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    std::vector<std::int64_t> c(basis.cols);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      const auto i = static_cast<std::size_t>(idx);
      decode(i, basis.modulus, c);
      mat_vec(basis, c, std::span<std::int64_t>(flat.data() + i * basis.rows, basis.rows));
    }
  }
  return flat;
}

std::vector<std::int64_t> apply_rows(const ResidueMatrix& k, const PointTable& points) {
  std::vector<std::int64_t> out(points.size() * k.rows);
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    mat_vec(k, points.point(i), std::span<std::int64_t>(out.data() + i * k.rows, k.rows));
  }
  return out;
}

std::vector<std::size_t> apply_maps(const PointTable& points, std::span<const AffineMap> maps) {
  const std::size_t n = points.size();
  std::vector<std::size_t> images(maps.size() * n);
  const auto total = static_cast<std::int64_t>(maps.size() * n);
#pragma omp parallel
  {
    std::vector<std::int64_t> y(points.dim());
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto k = static_cast<std::size_t>(idx);
      affine_image(maps[k / n], points.point(k % n), y);
      images[k] = points.find(y);
    }
  }
  return images;
}

std::uint64_t burnside_total(std::span<const AffineMap> maps, std::size_t cap) {
  if (maps.empty()) return 0;
  const std::size_t dim = maps.front().matrix.cols;
  const std::int64_t L = maps.front().matrix.modulus;
  const std::size_t count = point_count(L, dim, cap);
  const auto total = static_cast<std::int64_t>(maps.size() * count);
  std::uint64_t fixed = 0;
#pragma omp parallel reduction(+ : fixed)
  {
    std::vector<std::int64_t> x(dim), y(dim);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto k = static_cast<std::size_t>(idx);
      const AffineMap& m = maps[k / count];
      decode(k % count, L, x);
      affine_image(m, x, y);
      if (x == y) ++fixed;
    }
  }
  return fixed;
}

}  // namespace parahoric::kernels::detail::parallel
