#include "parahoric/cli.hpp"

#include <sstream>

namespace parahoric::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

ActionSpec parse_action(const std::string& text) {
  ActionSpec a;
  a.text = text;
  if (text == "trivial") return a;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("unknown action '" + text + "'");
  const std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
  if (kind == "diagram") {
    a.kind = ActionSpec::Kind::Diagram;
    for (const auto& p : split(arg, ',')) {
      try {
        std::size_t used = 0;
        a.permutation.push_back(std::stoi(p, &used));
        if (used != p.size()) throw InvalidInput("");
      } catch (const std::exception&) {
        throw InvalidInput("diagram permutation must be a comma-separated list of nodes, got '" + arg + "'");
      }
    }
    return a;
  }
  if (kind == "sl") {
    a.kind = ActionSpec::Kind::Sl;
    a.involution = parse_involution(arg);
    return a;
  }
  if (kind == "su") {
    a.kind = ActionSpec::Kind::Su;
    a.su_case = parse_su_case(arg);
    return a;
  }
  throw InvalidInput("unknown action '" + text + "' (expected trivial, diagram:..., sl:... or su:...)");
}

RationalVector parse_rational_list(const std::string& text) {
  RationalVector v;
  for (const auto& p : split(text, ',')) {
    Rational q;
    if (p.empty() || q.set_str(p, 10) != 0 || q.get_den() == 0)
      throw InvalidInput("cannot parse rational '" + p + "' in '" + text + "'");
    q.canonicalize();
    v.push_back(q);
  }
  if (v.empty()) throw InvalidInput("empty point");
  return v;
}

TypesReport compute_types(const GroupSpec& spec, std::size_t cap) {
  if (spec.order == 0) throw InvalidInput("order must be positive");
  TypesReport r;
  r.datum = build_root_datum(spec.type);
  const RootDatum& d = r.datum;
  r.base = AlcovePoint{RationalVector(d.rank)};
  if (!spec.point.empty()) {
    if (spec.action.kind != ActionSpec::Kind::Trivial)
      throw InvalidInput("a base point is only supported for the trivial action");
    r.base = point_from_root_values(d, spec.point);
  }

  using Kind = ActionSpec::Kind;
  switch (spec.action.kind) {
    case Kind::Trivial: {
      r.action = GammaAction::trivial(d, spec.order, spec.characteristic);
      const H1Classes h = h1_elements(d, r.action, cap);
      r.h1 = h.structure;
      r.classes = h.representatives;
      const LiftProvider lifts = base_point_lifts(d, r.action, r.base.coords);
      r.types = local_types(d, r.action, &lifts, cap);
      break;
    }
    case Kind::Diagram: {
      r.action = GammaAction::lattice(diagram_automorphism(d, spec.action.permutation), spec.order,
                                      spec.characteristic);
      const H1Classes h = h1_elements(d, r.action, cap);
      r.h1 = h.structure;
      r.classes = h.representatives;
      r.note = "local types need lifts t_w of W^Gamma for a pinned outer action; only H^1 is computed";
      break;
    }
    case Kind::Sl:
    case Kind::Su: {
      if (d.type.family != 'A') throw InvalidInput("SL_n actions need a group of type A");
      if (spec.order != 2) throw InvalidInput("SL_n involutions have order 2; use --order 2");
      const std::size_t n = d.rank + 1;
      InvolutionKind kind = spec.action.involution;
      std::optional<SuReport> su;
      if (spec.action.kind == Kind::Su) {
        su = su_special_vertex_types(n, spec.action.su_case, cap);
        kind = su->involution == "J'" ? InvolutionKind::JPrime
               : su->involution == "case-B" ? InvolutionKind::CaseB
                                             : InvolutionKind::J;
        r.reduction = su->reduction;
      }
      const InvolutionSpec inv = make_involution(kind, n);
      r.involution = inv.name;
      r.action = GammaAction{ActionMode::SlMatrix, 2, sl_induced_lattice_action(inv), spec.characteristic};
      const H1Classes h = h1_elements(d, r.action, cap);
      r.h1 = h.structure;
      r.classes = h.representatives;
      const LiftProvider lifts = sl_lift_provider(inv);
      r.types = local_types(d, r.action, &lifts, cap);
      const std::size_t diagonal_count = sl_local_types(n, inv, cap).size();
      if (diagonal_count != r.types->size() || (su && su->types != diagonal_count))
        throw ConsistencyError("SL_" + std::to_string(n) + " types: coroot-lattice route gives " +
                               std::to_string(r.types->size()) + ", diagonal route " + std::to_string(diagonal_count));
      break;
    }
  }
  if (r.types)
    for (const auto& t : *r.types) r.cocycles.push_back(cocycle_of(t.representative, r.action));
  return r;
}

}  // namespace parahoric::cli
