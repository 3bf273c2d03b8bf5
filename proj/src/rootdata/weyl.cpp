#include "parahoric/rootdata.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

namespace parahoric {
namespace {

using Small = std::vector<long>;

struct SmallHash {
  std::size_t operator()(const Small& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

Small to_small(const IntMatrix& m) {
  Small out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) throw CapExceeded("matrix entry too large for enumeration");
      out[i * m.cols() + j] = m(i, j).get_si();
    }
  return out;
}

IntMatrix from_small(const Small& s, std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s[i * n + j];
  return m;
}

// a * b for n x n matrices stored flat.
Small mul(const Small& a, const Small& b, std::size_t n) {
  Small c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const long x = a[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
    }
  return c;
}

Small mat_vec(const Small& a, const Small& v, std::size_t n) {
  Small out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += a[i * n + j] * v[j];
  return out;
}

// 2 rho^vee: sum of positive coroots. Its W-orbit is regular, so w -> w(2 rho^vee) is injective.
Small regular_coweight(const RootDatum& d) {
  Small v(d.rank, 0);
  for (const auto& c : d.positive_coroots)
    for (std::size_t i = 0; i < d.rank; ++i) v[i] += c[i].get_si();
  return v;
}

}  // namespace

WeylElement simple_reflection(const RootDatum& d, std::size_t i) {
  if (i < 1 || i > d.rank) throw InvalidInput("simple reflection index " + std::to_string(i) + " out of range");
  IntMatrix s = IntMatrix::identity(d.rank);
  for (std::size_t j = 0; j < d.rank; ++j) s(i - 1, j) -= d.cartan(i - 1, j);
  return WeylElement{std::move(s), {static_cast<int>(i)}};
}

std::optional<unsigned> matrix_order(const IntMatrix& m, unsigned max_order) {
  if (!m.is_square()) throw InvalidInput("matrix_order of a non-square matrix");
  IntMatrix p = m;
  for (unsigned k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

std::vector<WeylElement> weyl_group_elements(const RootDatum& d, std::size_t cap) {
  const std::size_t n = d.rank;
  std::vector<Small> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(to_small(simple_reflection(d, i).matrix));
  const Small rho = regular_coweight(d);

  std::vector<Small> mats;
  std::vector<std::vector<int>> words;
  std::unordered_map<Small, std::size_t, SmallHash> seen;
  mats.push_back(to_small(IntMatrix::identity(n)));
  words.emplace_back();
  seen.emplace(rho, 0);
  for (std::size_t head = 0; head < mats.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      // s_i * w, so the new word is i followed by the word of w.
      Small key = mat_vec(gens[i], mat_vec(mats[head], rho, n), n);
      if (seen.count(key)) continue;
      if (mats.size() >= cap) throw CapExceeded("Weyl group of " + d.type.label() + " exceeds cap " + std::to_string(cap));
      seen.emplace(std::move(key), mats.size());
      mats.push_back(mul(gens[i], mats[head], n));
      std::vector<int> w{static_cast<int>(i + 1)};
      w.insert(w.end(), words[head].begin(), words[head].end());
      words.push_back(std::move(w));
    }
  }
  std::vector<WeylElement> out;
  out.reserve(mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k) out.push_back(WeylElement{from_small(mats[k], n), std::move(words[k])});
  return out;
}

std::size_t weyl_order(const RootDatum& d, std::size_t cap) {
  // Orbit of a regular vector under the simple reflections; W acts on it simply transitively.
  const std::size_t n = d.rank;
  std::vector<Small> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(to_small(simple_reflection(d, i).matrix));
  std::unordered_map<Small, char, SmallHash> seen;
  std::deque<Small> queue;
  const Small rho = regular_coweight(d);
  seen.emplace(rho, 1);
  queue.push_back(rho);
  while (!queue.empty()) {
    const Small v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Small u = mat_vec(g, v, n);
      if (seen.count(u)) continue;
      if (seen.size() >= cap) throw CapExceeded("Weyl group of " + d.type.label() + " exceeds cap " + std::to_string(cap));
      seen.emplace(u, 1);
      queue.push_back(std::move(u));
    }
  }
  return seen.size();
}

LatticeAutomorphism diagram_automorphism(const RootDatum& d, const std::vector<int>& perm) {
  const std::size_t r = d.rank;
  if (perm.size() != r) throw InvalidInput("node permutation must have " + std::to_string(r) + " entries");
  std::vector<bool> hit(r, false);
  for (int p : perm) {
    if (p < 1 || static_cast<std::size_t>(p) > r || hit[static_cast<std::size_t>(p - 1)])
      throw InvalidInput("node permutation is not a permutation of 1.." + std::to_string(r));
    hit[static_cast<std::size_t>(p - 1)] = true;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (d.cartan(static_cast<std::size_t>(perm[i] - 1), static_cast<std::size_t>(perm[j] - 1)) != d.cartan(i, j))
        throw InvalidInput("node permutation is not a symmetry of the " + d.type.label() + " diagram");
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) m(static_cast<std::size_t>(perm[i] - 1), i) = 1;
  unsigned order = 1;
  for (std::size_t i = 0; i < r; ++i) {
    unsigned len = 1;
    for (std::size_t j = static_cast<std::size_t>(perm[i] - 1); j != i; j = static_cast<std::size_t>(perm[j] - 1)) ++len;
    order = std::lcm(order, len);
  }
  return LatticeAutomorphism{std::move(m), order};
}

std::vector<WeylElement> fixed_weyl_subgroup(const RootDatum& d, const LatticeAutomorphism& a, std::size_t cap) {
  if (a.matrix.rows() != d.rank || !a.matrix.is_square()) throw InvalidInput("automorphism has wrong size");
  std::vector<WeylElement> out;
  for (auto& w : weyl_group_elements(d, cap))
    if (a.matrix * w.matrix == w.matrix * a.matrix) out.push_back(std::move(w));
  return out;
}

std::vector<WeylElement> generating_subset(const std::vector<WeylElement>& group) {
  if (group.empty()) return {};
  const std::size_t n = group.front().matrix.rows();
  std::set<Small> closure{to_small(IntMatrix::identity(n))};
  std::vector<Small> gens;
  std::vector<WeylElement> chosen;
  for (const auto& w : group) {
    Small m = to_small(w.matrix);
    if (closure.count(m)) continue;
    gens.push_back(m);
    chosen.push_back(w);
    // Regenerate the closure from the identity with the enlarged generator set.
    std::vector<Small> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Small> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          Small y = mul(x, g, n);
          if (closure.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
  }
  if (closure.size() != group.size()) throw InvalidInput("generating_subset: input is not a group");
  return chosen;
}

}  // namespace parahoric
