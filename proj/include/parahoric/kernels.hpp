#pragma once

// Data-parallel inner loops over finite torsion sets, in machine integers.
//
// Every kernel has two implementations selected by Policy: a plain serial
// loop, kept as the reference, and an OpenMP version. Both must produce
// identical output; tests/test_kernels.cpp and bench/ compare them.
//
// Points of T[L] = (Z/L)^dim are stored as residue rows 0 <= x_i < L.
// Conversion from exact matrices goes through to_residue_matrix, which
// reduces entries mod L first and refuses moduli above kMaxModulus, so
// no intermediate product can overflow int64.

#include "parahoric/exactalg.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace parahoric::kernels {

enum class Policy { Serial, Parallel };

inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 20;
inline constexpr std::size_t kNotFound = static_cast<std::size_t>(-1);

/// Integer matrix reduced mod `modulus`, row-major.
struct ResidueMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> data;
};

/// x -> matrix * x + shift (mod modulus), a map of (Z/L)^dim into itself.
struct AffineMap {
  ResidueMatrix matrix;
  std::vector<std::int64_t> shift;
};

/// Lexicographically sorted, duplicate-free set of residue vectors.
class PointTable {
 public:
  PointTable(std::size_t dim, std::int64_t modulus) : dim_(dim), modulus_(modulus) {}
  /// Sorts and deduplicates `flat` (rows of length dim).
  PointTable(std::size_t dim, std::int64_t modulus, std::vector<std::int64_t> flat);

  std::size_t dim() const { return dim_; }
  std::int64_t modulus() const { return modulus_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  std::span<const std::int64_t> point(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  const std::vector<std::int64_t>& flat() const { return data_; }

  /// Index of `p`, or kNotFound.
  std::size_t find(std::span<const std::int64_t> p) const;

 private:
  std::size_t dim_;
  std::int64_t modulus_;
  std::vector<std::int64_t> data_;
};

std::int64_t checked_modulus(const Integer& modulus);
/// L^dim, or CapExceeded when it is larger than cap.
std::size_t point_count(std::int64_t modulus, std::size_t dim, std::size_t cap);
/// The residue vector at position `index` in lexicographic order.
void decode(std::size_t index, std::int64_t modulus, std::span<std::int64_t> out);
ResidueMatrix to_residue_matrix(const IntMatrix& m, std::int64_t modulus);
/// Residues of L * v for v in Q/Z^n with denominators dividing L.
std::vector<std::int64_t> to_residues(const QZVector& v, std::int64_t modulus);
QZVector from_residues(std::span<const std::int64_t> x, std::int64_t modulus);

/// All x in (Z/L)^dim with C x = 0 mod L. Enumerates L^dim points.
PointTable enumerate_kernel(const ResidueMatrix& constraints, std::size_t dim, std::size_t cap, Policy policy);

/// All images of (Z/L)^k under x -> B x mod L (B is dim x k), deduplicated.
PointTable enumerate_image(const ResidueMatrix& basis, std::size_t cap, Policy policy);

/// Row i of the result is key_matrix * point(i) mod L.
std::vector<std::int64_t> apply_rows(const ResidueMatrix& key_matrix, const PointTable& points, Policy policy);

/// images[g * n + i] = index of map g applied to point i, kNotFound if the image leaves the table.
std::vector<std::size_t> apply_maps(const PointTable& points, std::span<const AffineMap> maps, Policy policy);

/// Orbit label of each point: the smallest index in its orbit. Since tables are
/// sorted, that index is also the lexicographically least orbit member.
/// Throws InvalidInput when some image leaves the table.
std::vector<std::size_t> orbit_labels(const PointTable& points, std::span<const AffineMap> maps, Policy policy);

/// Reference orbit computation by breadth-first search; same output as orbit_labels.
std::vector<std::size_t> orbit_labels_bfs(const PointTable& points, std::span<const AffineMap> maps);

/// Number of x in (Z/L)^dim fixed by the affine map.
std::uint64_t count_fixed_points(const AffineMap& map, std::size_t cap);

/// Sum over maps of count_fixed_points: the numerator of a Burnside count.
std::uint64_t burnside_total(std::span<const AffineMap> maps, std::size_t cap, Policy policy);

}  // namespace parahoric::kernels
