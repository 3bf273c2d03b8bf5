#include "parahoric/alcove.hpp"

#include <algorithm>
#include <exception>
#include <set>

namespace parahoric {
namespace {

constexpr std::size_t kMaxReductionSteps = 1'000'000;

bool root_values_less(const RootDatum& d, const AlcovePoint& a, const AlcovePoint& b) {
  const auto va = root_values(d, a), vb = root_values(d, b);
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

void check_dim(const RootDatum& d, const AlcovePoint& x) {
  if (x.coords.size() != d.rank) throw InvalidInput("point has wrong dimension for " + d.type.label());
}

}  // namespace

AlcovePoint point_from_root_values(const RootDatum& d, const RationalVector& values) {
  if (values.size() != d.rank)
    throw InvalidInput(d.type.label() + " needs " + std::to_string(d.rank) + " root values, got " +
                       std::to_string(values.size()));
  const auto inv = rational_inverse(d.cartan);
  AlcovePoint x{RationalVector(d.rank)};
  for (std::size_t i = 0; i < d.rank; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < d.rank; ++j) acc += inv[i][j] * values[j];
    acc.canonicalize();
    x.coords[i] = acc;
  }
  return x;
}

RationalVector root_values(const RootDatum& d, const AlcovePoint& x) { return d.simple_root_values(x.coords); }

Rational theta_value(const RootDatum& d, const AlcovePoint& x) { return d.pairing(d.highest_root, x.coords); }

bool in_fundamental_alcove(const RootDatum& d, const AlcovePoint& x) {
  for (const auto& v : root_values(d, x))
    if (v < 0) return false;
  return theta_value(d, x) <= 1;
}

AlcovePoint affine_reflection(const RootDatum& d, const AlcovePoint& x, std::size_t node) {
  check_dim(d, x);
  if (node > d.rank) throw InvalidInput("affine node out of range");
  AlcovePoint y = x;
  if (node == 0) {
    const Rational shift = theta_value(d, x) - 1;
    for (std::size_t i = 0; i < d.rank; ++i) y.coords[i] -= shift * Rational(d.highest_coroot[i]);
  } else {
    y.coords[node - 1] -= root_values(d, x)[node - 1];
  }
  for (auto& c : y.coords) c.canonicalize();
  return y;
}

AlcovePoint translate(const AlcovePoint& x, const IntVector& coroot_vector) {
  if (coroot_vector.size() != x.coords.size()) throw InvalidInput("translation has wrong dimension");
  AlcovePoint y = x;
  for (std::size_t i = 0; i < y.coords.size(); ++i) {
    y.coords[i] += Rational(coroot_vector[i]);
    y.coords[i].canonicalize();
  }
  return y;
}

AlcoveReduction reduce_to_alcove(const RootDatum& d, const AlcovePoint& x) {
  check_dim(d, x);
  AlcoveReduction r{x, {}};
  for (std::size_t step = 0; step < kMaxReductionSteps; ++step) {
    const RationalVector values = root_values(d, r.point);
    std::size_t wall = d.rank + 1;
    for (std::size_t i = 0; i < d.rank && wall > d.rank; ++i)
      if (values[i] < 0) wall = i + 1;
    if (wall > d.rank) {
      if (theta_value(d, r.point) <= 1) return r;
      wall = 0;
    }
    r.point = affine_reflection(d, r.point, wall);
    r.word.push_back(wall);
  }
  throw CapExceeded("alcove reduction did not terminate within the step bound");
}

FacetDescriptor facet_of(const RootDatum& d, const AlcovePoint& x0) {
  check_dim(d, x0);
  if (!in_fundamental_alcove(d, x0)) throw InvalidInput("facet_of: point is not in the fundamental alcove");
  FacetDescriptor f;
  if (theta_value(d, x0) == 1) f.walls.push_back(0);
  const RationalVector values = root_values(d, x0);
  for (std::size_t i = 0; i < d.rank; ++i)
    if (values[i] == 0) f.walls.push_back(i + 1);
  f.kind = f.walls.size() == d.rank ? FacetKind::Vertex : f.walls.empty() ? FacetKind::Iwahori : FacetKind::Intermediate;
  f.special = true;
  for (const auto& root : d.positive_roots)
    if (d.pairing(root, x0.coords).get_den() != 1) f.special = false;
  return f;
}

std::string to_string(FacetKind kind) {
  switch (kind) {
    case FacetKind::Vertex: return "vertex";
    case FacetKind::Iwahori: return "Iwahori";
    case FacetKind::Intermediate: return "facet";
  }
  return "?";
}

std::string describe(const FacetDescriptor& f) {
  if (f.kind == FacetKind::Iwahori) return "Iwahori";
  std::string s = to_string(f.kind) + " {";
  for (std::size_t i = 0; i < f.walls.size(); ++i) s += (i ? "," : "") + std::to_string(f.walls[i]);
  s += "}";
  if (f.special) s += ", hyperspecial";
  return s;
}

SplitDegree min_split_degree(const RootDatum& d, const AlcovePoint& x, long characteristic) {
  check_dim(d, x);
  if (characteristic < 0) throw InvalidInput("characteristic must be 0 or a prime");
  std::vector<Integer> dens;
  for (const auto& root : d.positive_roots) dens.push_back(d.pairing(root, x.coords).get_den());
  SplitDegree s{lcm_of(dens), true};
  if (characteristic > 1) s.tame = s.degree % characteristic != 0;
  return s;
}

TwistedFacet type_to_alcove(const RootDatum& d, const QZVector& rep, unsigned e, const AlcovePoint& base) {
  check_dim(d, base);
  if (rep.size() != d.rank) throw InvalidInput("type representative has wrong dimension");
  if (e == 0) throw InvalidInput("order must be positive");
  AlcovePoint x = base;
  for (std::size_t i = 0; i < d.rank; ++i) {
    if (Integer(e) % rep[i].denominator() != 0)
      throw InvalidInput("representative " + to_string(rep) + " is not e-torsion for e = " + std::to_string(e));
    x.coords[i] += rep[i].value();
    x.coords[i].canonicalize();
  }
  AlcovePoint reduced = reduce_to_alcove(d, x).point;
  FacetDescriptor f = facet_of(d, reduced);
  return TwistedFacet{std::move(reduced), std::move(f)};
}

std::vector<AlcovePoint> apartment_orbit_types(const RootDatum& d, const AlcovePoint& a, unsigned e, std::size_t cap,
                                               kernels::Policy policy) {
  check_dim(d, a);
  if (e == 0) throw InvalidInput("order must be positive");
  // W is contained in W_aff, so w(a) + nu/e reduces like a + w^-1(nu)/e: the translates suffice.
  const std::int64_t L = kernels::checked_modulus(Integer(e));
  const std::size_t count = kernels::point_count(L, d.rank, cap);
  std::vector<AlcovePoint> reduced(count);
  const auto total = static_cast<std::int64_t>(count);
  auto body = [&](std::int64_t idx) {
    std::vector<std::int64_t> nu(d.rank);
    kernels::decode(static_cast<std::size_t>(idx), L, nu);
    AlcovePoint x = a;
    for (std::size_t i = 0; i < d.rank; ++i) {
      x.coords[i] += Rational(static_cast<long>(nu[i]), static_cast<long>(e));
      x.coords[i].canonicalize();
    }
    reduced[static_cast<std::size_t>(idx)] = reduce_to_alcove(d, x).point;
  };
  if (policy == kernels::Policy::Serial) {
    for (std::int64_t idx = 0; idx < total; ++idx) body(idx);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      try {
        body(idx);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const AlcovePoint& p, const AlcovePoint& q) { return root_values_less(d, p, q); });
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  return reduced;
}

VertexPrimeData vertex_prime_data(const CartanType& type, bool twisted) {
  const RootDatum d = build_root_datum(type);
  VertexPrimeData v;
  const std::size_t n = d.rank;
  std::set<long> primes;
  for (const auto& m : d.marks)
    for (long p : prime_divisors(m)) primes.insert(p);
  v.mark_primes.assign(primes.begin(), primes.end());

  if (twisted && type.family != 'A') throw InvalidInput("twisted affine data is only available for type A");
  if (type.family == 'A') {
    if (twisted) {
      if (n < 2) throw InvalidInput("2A_n needs n >= 2");
      v.diagram = "2A" + std::to_string(n);
      v.affine_aut_order = Integer(n % 2 == 1 ? 2 : 1);
    } else {
      v.diagram = "A" + std::to_string(n);
      // The affine A_1 diagram has two nodes, so only the swap survives.
      v.affine_aut_order = Integer(n == 1 ? 2 : 2 * (n + 1));
    }
  } else {
    v.diagram = type.label();
  }

  std::set<long> excluded{2};
  switch (type.family) {
    case 'A':
      for (long p : prime_divisors(Integer(static_cast<unsigned long>(n + 1)))) excluded.insert(p);
      break;
    case 'B':
    case 'C':
    case 'D':
      break;
    case 'E':
      excluded.insert(3);
      if (n == 8) excluded.insert(5);
      break;
    default:
      excluded.insert(3);
      break;
  }
  v.excluded_characteristics.assign(excluded.begin(), excluded.end());
  return v;
}

}  // namespace parahoric
