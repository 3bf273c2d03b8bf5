#include "detail.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace parahoric::kernels {
namespace detail {

std::size_t point_count(std::int64_t modulus, std::size_t dim, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (count > cap / static_cast<std::size_t>(modulus))
      throw CapExceeded("enumeration of (Z/" + std::to_string(modulus) + ")^" + std::to_string(dim) +
                        " exceeds cap " + std::to_string(cap));
    count *= static_cast<std::size_t>(modulus);
  }
  if (count > cap) throw CapExceeded("enumeration exceeds cap " + std::to_string(cap));
  return count;
}

// Most significant digit first, so index order is lexicographic order.
void decode(std::size_t index, std::int64_t modulus, std::span<std::int64_t> out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = static_cast<std::int64_t>(index % static_cast<std::size_t>(modulus));
    index /= static_cast<std::size_t>(modulus);
  }
}

void mat_vec(const ResidueMatrix& m, std::span<const std::int64_t> x, std::span<std::int64_t> out) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::int64_t acc = 0;
    const std::int64_t* row = m.data.data() + i * m.cols;
    for (std::size_t j = 0; j < m.cols; ++j) acc = (acc + row[j] * x[j]) % m.modulus;
    out[i] = acc;
  }
}

void affine_image(const AffineMap& map, std::span<const std::int64_t> x, std::span<std::int64_t> out) {
  mat_vec(map.matrix, x, out);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + map.shift[i]) % map.matrix.modulus;
}

}  // namespace detail

PointTable::PointTable(std::size_t dim, std::int64_t modulus, std::vector<std::int64_t> flat)
    : dim_(dim), modulus_(modulus) {
  if (dim == 0) throw InvalidInput("PointTable: zero dimension");
  const std::size_t n = flat.size() / dim;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * dim, flat.begin() + (a + 1) * dim,
                                        flat.begin() + b * dim, flat.begin() + (b + 1) * dim);
  };
  auto equal = [&](std::size_t a, std::size_t b) {
    return std::equal(flat.begin() + a * dim, flat.begin() + (a + 1) * dim, flat.begin() + b * dim);
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(), equal), order.end());
  data_.reserve(order.size() * dim);
  for (std::size_t idx : order)
    data_.insert(data_.end(), flat.begin() + idx * dim, flat.begin() + (idx + 1) * dim);
}

std::size_t PointTable::find(std::span<const std::int64_t> p) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto q = point(mid);
    if (std::lexicographical_compare(q.begin(), q.end(), p.begin(), p.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(p.begin(), p.end(), point(lo).begin())) return lo;
  return kNotFound;
}

std::size_t point_count(std::int64_t modulus, std::size_t dim, std::size_t cap) {
  return detail::point_count(modulus, dim, cap);
}

void decode(std::size_t index, std::int64_t modulus, std::span<std::int64_t> out) { detail::decode(index, modulus, out); }

std::int64_t checked_modulus(const Integer& modulus) {
  if (modulus <= 0) throw InvalidInput("modulus must be positive");
  if (modulus > kMaxModulus) throw CapExceeded("modulus " + modulus.get_str() + " exceeds the machine-integer kernel bound");
  return modulus.get_si();
}

ResidueMatrix to_residue_matrix(const IntMatrix& m, std::int64_t modulus) {
  ResidueMatrix r{m.rows(), m.cols(), modulus, std::vector<std::int64_t>(m.rows() * m.cols())};
  const Integer mod(static_cast<long>(modulus));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer x;
      mpz_fdiv_r(x.get_mpz_t(), m(i, j).get_mpz_t(), mod.get_mpz_t());
      r.data[i * m.cols() + j] = x.get_si();
    }
  return r;
}

std::vector<std::int64_t> to_residues(const QZVector& v, std::int64_t modulus) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational scaled = v[i].value() * Rational(static_cast<long>(modulus));
    if (scaled.get_den() != 1)
      throw InvalidInput("denominator of " + v[i].to_string() + " does not divide " + std::to_string(modulus));
    out[i] = Integer(scaled.get_num()).get_si();
  }
  return out;
}

QZVector from_residues(std::span<const std::int64_t> x, std::int64_t modulus) {
  QZVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = RationalModZ(Integer(static_cast<long>(x[i])), Integer(static_cast<long>(modulus)));
  return v;
}

PointTable enumerate_kernel(const ResidueMatrix& constraints, std::size_t dim, std::size_t cap, Policy policy) {
  if (constraints.cols != dim && constraints.rows != 0) throw InvalidInput("enumerate_kernel: dimension mismatch");
  const std::int64_t L = constraints.modulus;
  const std::size_t count = detail::point_count(L, dim, cap);
  const std::vector<char> keep = policy == Policy::Serial ? detail::serial::kernel_mask(constraints, dim, count)
                                                          : detail::parallel::kernel_mask(constraints, dim, count);
  std::vector<std::int64_t> flat;
  std::vector<std::int64_t> x(dim);
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (!keep[idx]) continue;
    detail::decode(idx, L, x);
    flat.insert(flat.end(), x.begin(), x.end());
  }
  return PointTable(dim, L, std::move(flat));
}

PointTable enumerate_image(const ResidueMatrix& basis, std::size_t cap, Policy policy) {
  const std::size_t count = detail::point_count(basis.modulus, basis.cols, cap);
  std::vector<std::int64_t> flat = policy == Policy::Serial ? detail::serial::image_points(basis, count)
                                                            : detail::parallel::image_points(basis, count);
  return PointTable(basis.rows, basis.modulus, std::move(flat));
}

std::vector<std::int64_t> apply_rows(const ResidueMatrix& key_matrix, const PointTable& points, Policy policy) {
  if (key_matrix.cols != points.dim()) throw InvalidInput("apply_rows: dimension mismatch");
  return policy == Policy::Serial ? detail::serial::apply_rows(key_matrix, points)
                                  : detail::parallel::apply_rows(key_matrix, points);
}

std::vector<std::size_t> apply_maps(const PointTable& points, std::span<const AffineMap> maps, Policy policy) {
  for (const auto& m : maps)
    if (m.matrix.rows != points.dim() || m.matrix.cols != points.dim() || m.matrix.modulus != points.modulus())
      throw InvalidInput("apply_maps: map does not act on the point table");
  return policy == Policy::Serial ? detail::serial::apply_maps(points, maps) : detail::parallel::apply_maps(points, maps);
}

std::vector<std::size_t> orbit_labels(const PointTable& points, std::span<const AffineMap> maps, Policy policy) {
  const std::size_t n = points.size();
  const std::vector<std::size_t> images = apply_maps(points, maps, policy);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t g = 0; g < maps.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = images[g * n + i];
      if (j == kNotFound) throw InvalidInput("group action does not preserve the point set");
      std::size_t a = root(i), b = root(j);
      if (a == b) continue;
      if (a < b) std::swap(a, b);
      parent[a] = b;
    }
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = root(i);
  return labels;
}

std::vector<std::size_t> orbit_labels_bfs(const PointTable& points, std::span<const AffineMap> maps) {
  const std::size_t n = points.size();
  std::vector<std::size_t> labels(n, kNotFound);
  std::vector<std::int64_t> image(points.dim());
  for (std::size_t start = 0; start < n; ++start) {
    if (labels[start] != kNotFound) continue;
    std::queue<std::size_t> queue;
    queue.push(start);
    labels[start] = start;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop();
      for (const auto& map : maps) {
        detail::affine_image(map, points.point(cur), image);
        const std::size_t j = points.find(image);
        if (j == kNotFound) throw InvalidInput("group action does not preserve the point set");
        if (labels[j] == kNotFound) {
          labels[j] = start;
          queue.push(j);
        }
      }
    }
  }
  return labels;
}

std::uint64_t count_fixed_points(const AffineMap& map, std::size_t cap) {
  const std::size_t dim = map.matrix.cols;
  const std::size_t count = detail::point_count(map.matrix.modulus, dim, cap);
  std::vector<std::int64_t> x(dim), y(dim);
  std::uint64_t fixed = 0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    detail::decode(idx, map.matrix.modulus, x);
    detail::affine_image(map, x, y);
    if (x == y) ++fixed;
  }
  return fixed;
}

std::uint64_t burnside_total(std::span<const AffineMap> maps, std::size_t cap, Policy policy) {
  return policy == Policy::Serial ? detail::serial::burnside_total(maps, cap) : detail::parallel::burnside_total(maps, cap);
}

}  // namespace parahoric::kernels
