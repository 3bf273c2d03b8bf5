#include "parahoric/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace parahoric {
namespace {

using Coeffs = std::vector<long>;

struct Diagram {
  std::vector<long> length2;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based
};

Diagram dynkin_diagram(const CartanType& t) {
  const std::size_t n = t.rank;
  Diagram d;
  d.length2.assign(n, 2);
  auto chain = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i + 1 < to; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case 'A':
      chain(0, n);
      break;
    case 'B':
      chain(0, n);
      for (std::size_t i = 0; i + 1 < n; ++i) d.length2[i] = 4;
      break;
    case 'C':
      chain(0, n);
      d.length2[n - 1] = 4;
      break;
    case 'D':
      chain(0, n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      chain(2, n);
      break;
    case 'F':
      chain(0, 4);
      d.length2 = {4, 4, 2, 2};
      break;
    case 'G':
      d.edges.emplace_back(0, 1);
      d.length2 = {2, 6};
      break;
    default:
      throw InvalidInput("unknown Cartan family");
  }
  return d;
}

long height(const Coeffs& c) { return std::accumulate(c.begin(), c.end(), 0L); }

IntVector to_int_vector(const Coeffs& c) { return IntVector(c.begin(), c.end()); }

// Root strings: for a positive root b and simple alpha_i, b + alpha_i is a root
// iff q > 0 where q = p - <b, alpha_i^vee> and p is the length of the string below b.
std::vector<Coeffs> positive_root_system(const std::vector<std::vector<long>>& cartan) {
  const std::size_t r = cartan.size();
  std::set<Coeffs> roots;
  std::vector<Coeffs> layer;
  for (std::size_t i = 0; i < r; ++i) {
    Coeffs c(r, 0);
    c[i] = 1;
    roots.insert(c);
    layer.push_back(c);
  }
  while (!layer.empty()) {
    std::vector<Coeffs> next;
    for (const Coeffs& b : layer) {
      for (std::size_t i = 0; i < r; ++i) {
        long pairing = 0;
        for (std::size_t j = 0; j < r; ++j) pairing += b[j] * cartan[j][i];
        long p = 0;
        Coeffs down = b;
        for (;;) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;
        Coeffs up = b;
        up[i] += 1;
        if (roots.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  std::vector<Coeffs> out(roots.begin(), roots.end());
  std::stable_sort(out.begin(), out.end(), [](const Coeffs& a, const Coeffs& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a < b;
  });
  return out;
}

}  // namespace

CartanType parse_cartan_type(const std::string& label, std::size_t rank) {
  if (label.empty()) throw InvalidInput("empty group label");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  std::size_t parsed_rank = 0;
  if (label.size() > 1) {
    const std::string digits = label.substr(1);
    if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InvalidInput("cannot parse group label '" + label + "'");
    parsed_rank = std::stoul(digits);
    if (rank != 0 && rank != parsed_rank)
      throw InvalidInput("label '" + label + "' disagrees with rank " + std::to_string(rank));
  }
  t.rank = parsed_rank != 0 ? parsed_rank : rank;
  if (t.rank == 0) throw InvalidInput("missing rank for group '" + label + "'");
  const std::size_t n = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = n >= 1 && n <= 64; break;
    case 'B': ok = n >= 2 && n <= 64; break;
    case 'C': ok = n >= 2 && n <= 64; break;
    case 'D': ok = n >= 4 && n <= 64; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) throw InvalidInput("unsupported group " + std::string(1, t.family) + std::to_string(n));
  return t;
}

Integer RootDatum::pairing(const IntVector& root, const IntVector& x) const {
  Integer acc = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    if (root[i] == 0) continue;
    for (std::size_t j = 0; j < rank; ++j) acc += root[i] * cartan(i, j) * x[j];
  }
  return acc;
}

Rational RootDatum::pairing(const IntVector& root, const RationalVector& x) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    if (root[i] == 0) continue;
    for (std::size_t j = 0; j < rank; ++j) acc += Rational(root[i] * cartan(i, j)) * x[j];
  }
  acc.canonicalize();
  return acc;
}

RationalVector RootDatum::simple_root_values(const RationalVector& x) const {
  if (x.size() != rank) throw InvalidInput("point has wrong dimension for " + type.label());
  return cartan.apply(x);
}

RootDatum build_root_datum(const CartanType& type) {
  const CartanType t = parse_cartan_type(type.label());
  const std::size_t r = t.rank;
  const Diagram diagram = dynkin_diagram(t);

  std::vector<std::vector<long>> gram(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) gram[i][i] = diagram.length2[i];
  for (auto [i, j] : diagram.edges) {
    const long g = -std::max(diagram.length2[i], diagram.length2[j]) / 2;
    gram[i][j] = gram[j][i] = g;
  }
  std::vector<std::vector<long>> cartan(r, std::vector<long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan[i][j] = 2 * gram[i][j] / diagram.length2[j];

  RootDatum d;
  d.type = t;
  d.rank = r;
  d.cartan = IntMatrix::from_rows(cartan);
  d.length2 = diagram.length2;

  for (const Coeffs& c : positive_root_system(cartan)) {
    long len2 = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) len2 += c[i] * c[j] * gram[i][j];
    IntVector coroot(r);
    for (std::size_t i = 0; i < r; ++i) {
      const long num = c[i] * diagram.length2[i];
      if (num % len2 != 0) throw ConsistencyError("non-integral coroot in " + t.label());
      coroot[i] = num / len2;
    }
    d.positive_roots.push_back(to_int_vector(c));
    d.positive_coroots.push_back(std::move(coroot));
  }
  d.highest_root = d.positive_roots.back();
  d.highest_coroot = d.positive_coroots.back();
  for (std::size_t k = 0; k + 1 < d.positive_roots.size(); ++k) {
    Integer h = 0, top = 0;
    for (const auto& x : d.positive_roots[k]) h += x;
    for (const auto& x : d.highest_root) top += x;
    if (h == top) throw ConsistencyError("highest root of " + t.label() + " is not unique");
  }
  d.marks = d.highest_root;
  return d;
}

RootDatum build_root_datum(const std::string& label, std::size_t rank) {
  return build_root_datum(parse_cartan_type(label, rank));
}

}  // namespace parahoric
