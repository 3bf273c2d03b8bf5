#include "parahoric/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace parahoric::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Options {
  std::string group;
  std::size_t rank = 0;
  unsigned order = 1;
  std::string action = "trivial";
  std::string point;
  long cls = -1;
  std::string format = "text";
  std::string config;
  std::size_t cap = kDefaultCap;
  long characteristic = 0;
  bool twisted = false;
  std::size_t tuple_cap = 0;  // 0: same as cap
};

std::string rat(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string rat_text(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + rat(v[i]);
  return s + ")";
}

Json rat_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rat(q));
  return a;
}

Json qz_json(const QZVector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(z.to_string());
  return a;
}

Json group_json(const CartanType& t) { return Json{{"label", std::string(1, t.family)}, {"rank", t.rank}}; }

Json h1_json(const TypesReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.h1.invariant_factors) factors.push_back(f.get_str());
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(qz_json(c));
  return Json{{"order", r.h1.order().get_str()}, {"invariant_factors", factors}, {"classes", classes}};
}

Json facet_json(const RootDatum& d, const AlcovePoint& x, const FacetDescriptor& f) {
  return Json{{"point", rat_json(x.coords)},
              {"root_values", rat_json(root_values(d, x))},
              {"facet", describe(f)},
              {"kind", to_string(f.kind)},
              {"walls", f.walls},
              {"special", f.special}};
}

std::string facet_text(const RootDatum& d, const AlcovePoint& x, const FacetDescriptor& f) {
  return "coroot coordinates " + rat_text(x.coords) + " root values " + rat_text(root_values(d, x)) + " facet: " + describe(f);
}

GroupSpec make_spec(const Options& o) {
  if (o.group.empty()) throw InvalidInput("--group is required");
  GroupSpec s;
  s.type = parse_cartan_type(o.group, o.rank);
  s.order = o.order;
  s.action = parse_action(o.action);
  if (!o.point.empty()) s.point = parse_rational_list(o.point);
  s.characteristic = o.characteristic;
  return s;
}

Json header(const std::string& command) { return Json{{"schema_version", kSchemaVersion}, {"command", command}}; }

void emit(std::ostream& out, const Options& o, const Json& doc, const std::string& text) {
  if (o.format == "json")
    out << doc.dump(2) << "\n";
  else
    out << text;
}

int cmd_types(const Options& o, std::ostream& out) {
  const GroupSpec spec = make_spec(o);
  const TypesReport r = compute_types(spec, o.cap);
  Json doc = header("types");
  doc["group"] = group_json(spec.type);
  doc["action"] = spec.action.text;
  doc["order"] = spec.order;
  doc["characteristic"] = spec.characteristic;
  doc["gamma0"] = gamma0_convention(spec.order);
  doc["base_point"] = rat_json(root_values(r.datum, r.base));
  if (!r.involution.empty()) doc["involution"] = r.involution;
  if (!r.reduction.empty()) doc["reduction"] = r.reduction;
  doc["h1"] = h1_json(r);

  std::ostringstream t;
  t << "group: " << spec.type.label() << "\n"
    << "action: " << spec.action.text << "\n"
    << "order: " << spec.order << "\n"
    << "gamma0: " << gamma0_convention(spec.order) << "\n";
  if (!spec.point.empty()) t << "base point (root values): " << rat_text(spec.point) << "\n";
  if (!r.involution.empty()) t << "involution: " << r.involution << "\n";
  if (!r.reduction.empty()) t << "reduction: " << r.reduction << "\n";
  t << "H1: " << r.h1.to_string() << " (order " << r.h1.order().get_str() << ")\n";

  if (!r.types) {
    doc["types"] = nullptr;
    doc["type_list"] = nullptr;
    doc["note"] = r.note;
    t << "types: unavailable (" << r.note << ")\n";
    for (std::size_t c = 0; c < r.classes.size(); ++c) t << "class " << c << ": " << to_string(r.classes[c]) << "\n";
  } else {
    doc["types"] = r.types->size();
    Json list = Json::array();
    t << "types: " << r.types->size() << "\n";
    for (std::size_t k = 0; k < r.types->size(); ++k) {
      const LocalType& lt = (*r.types)[k];
      Json cocycle = Json::array();
      for (const auto& v : r.cocycles[k]) cocycle.push_back(qz_json(v));
      list.push_back(Json{{"index", lt.index},
                          {"representative", qz_json(lt.representative)},
                          {"orbit_size", lt.orbit_size},
                          {"cocycle", cocycle}});
      t << "type " << k << ": " << to_string(lt.representative) << " classes " << lt.orbit_size << "\n  cocycle:";
      for (const auto& v : r.cocycles[k]) t << " " << to_string(v);
      t << "\n";
    }
    doc["type_list"] = list;
  }
  emit(out, o, doc, t.str());
  return kOk;
}

int cmd_twist(const Options& o, std::ostream& out) {
  const GroupSpec spec = make_spec(o);
  if (spec.action.kind != ActionSpec::Kind::Trivial)
    throw InvalidInput("twist supports only the trivial action (action '" + spec.action.text + "')");
  const TypesReport r = compute_types(spec, o.cap);
  const RootDatum& d = r.datum;
  Json doc = header("twist");
  doc["group"] = group_json(spec.type);
  doc["order"] = spec.order;
  doc["base_point"] = rat_json(root_values(d, r.base));
  std::ostringstream t;
  t << "group: " << spec.type.label() << "\norder: " << spec.order << "\nbase point (root values): "
    << rat_text(root_values(d, r.base)) << "\n";

  if (o.cls >= 0) {
    if (static_cast<std::size_t>(o.cls) >= r.classes.size())
      throw InvalidInput("--class " + std::to_string(o.cls) + " out of range: H^1 has " +
                         std::to_string(r.classes.size()) + " classes");
    const QZVector& rep = r.classes[static_cast<std::size_t>(o.cls)];
    const TwistedFacet tf = type_to_alcove(d, rep, spec.order, r.base);
    doc["class"] = o.cls;
    doc["representative"] = qz_json(rep);
    doc["twisted"] = facet_json(d, tf.point, tf.facet);
    t << "class " << o.cls << ": " << to_string(rep) << "\n"
      << facet_text(d, tf.point, tf.facet) << "\n"
      << "special: " << (tf.facet.special ? "yes" : "no") << "\n";
  } else {
    Json list = Json::array();
    std::size_t special = 0;
    t << "types: " << r.types->size() << "\n";
    for (const auto& lt : *r.types) {
      const TwistedFacet tf = type_to_alcove(d, lt.representative, spec.order, r.base);
      if (tf.facet.special) ++special;
      Json item = facet_json(d, tf.point, tf.facet);
      item["index"] = lt.index;
      item["representative"] = qz_json(lt.representative);
      list.push_back(item);
      t << "type " << lt.index << ": " << to_string(lt.representative) << " " << facet_text(d, tf.point, tf.facet)
        << "\n";
    }
    doc["types"] = list;
    doc["special_types"] = special;
    t << "special types: " << special << "\n";
  }
  emit(out, o, doc, t.str());
  return kOk;
}

Json prime_data_json(const VertexPrimeData& v) {
  Json doc{{"diagram", v.diagram}, {"mark_primes", v.mark_primes}};
  doc["affine_automorphism_order"] = v.affine_aut_order ? Json(v.affine_aut_order->get_str()) : Json(nullptr);
  doc["excluded_characteristics"] = v.excluded_characteristics;
  return doc;
}

std::string list_text(const std::vector<long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string prime_data_text(const VertexPrimeData& v) {
  std::ostringstream t;
  t << "diagram: " << v.diagram << "\n"
    << "mark primes: " << list_text(v.mark_primes) << "\n"
    << "affine diagram automorphisms: " << (v.affine_aut_order ? v.affine_aut_order->get_str() : "n/a") << "\n"
    << "excluded characteristics: " << list_text(v.excluded_characteristics) << "\n";
  return t.str();
}

int cmd_split_degree(const Options& o, std::ostream& out) {
  if (o.point.empty()) throw InvalidInput("split-degree needs --point");
  const GroupSpec spec = make_spec(o);
  const RootDatum d = build_root_datum(spec.type);
  const AlcovePoint x = point_from_root_values(d, spec.point);
  const SplitDegree s = min_split_degree(d, x, spec.characteristic);
  const VertexPrimeData v = vertex_prime_data(spec.type, o.twisted);
  Json doc = header("split-degree");
  doc["group"] = group_json(spec.type);
  doc["point"] = rat_json(spec.point);
  doc["degree"] = s.degree.get_str();
  doc["characteristic"] = spec.characteristic;
  doc["tame"] = s.tame;
  doc["data"] = prime_data_json(v);
  std::ostringstream t;
  t << "group: " << spec.type.label() << "\npoint (root values): " << rat_text(spec.point) << "\n"
    << "degree: " << s.degree.get_str() << "\n"
    << "characteristic " << spec.characteristic << ": " << (s.tame ? "tame" : "wild") << "\n"
    << prime_data_text(v);
  emit(out, o, doc, t.str());
  return kOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const GroupSpec spec = make_spec(o);
  if (spec.action.kind != ActionSpec::Kind::Trivial) throw InvalidInput("orbit supports only the trivial action");
  const RootDatum d = build_root_datum(spec.type);
  const AlcovePoint a = spec.point.empty() ? AlcovePoint{RationalVector(d.rank)} : point_from_root_values(d, spec.point);
  const auto points = apartment_orbit_types(d, a, spec.order, o.cap);
  Json doc = header("orbit");
  doc["group"] = group_json(spec.type);
  doc["order"] = spec.order;
  doc["base_point"] = rat_json(root_values(d, a));
  Json list = Json::array();
  std::ostringstream t;
  t << "group: " << spec.type.label() << "\norder: " << spec.order << "\nbase point (root values): "
    << rat_text(root_values(d, a)) << "\norbits: " << points.size() << "\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    const FacetDescriptor f = facet_of(d, points[k]);
    list.push_back(facet_json(d, points[k], f));
    t << "orbit " << k << ": " << facet_text(d, points[k], f) << "\n";
  }
  doc["orbits"] = points.size();
  doc["orbit_list"] = list;
  emit(out, o, doc, t.str());
  return kOk;
}

int cmd_data(const Options& o, std::ostream& out) {
  if (o.group.empty()) throw InvalidInput("--group is required");
  const CartanType type = parse_cartan_type(o.group, o.rank);
  const VertexPrimeData v = vertex_prime_data(type, o.twisted);
  Json doc = header("data");
  doc["group"] = group_json(type);
  doc["data"] = prime_data_json(v);
  emit(out, o, doc, "group: " + type.label() + "\n" + prime_data_text(v));
  return kOk;
}

GroupSpec branch_point_spec(const Json& bp) {
  if (!bp.is_object()) throw InvalidInput("branch point must be an object");
  GroupSpec s;
  const Json& g = bp.at("group");
  s.type = parse_cartan_type(g.at("label").get<std::string>(), g.value("rank", std::size_t{0}));
  const long order = bp.at("order").get<long>();
  if (order <= 0) throw InvalidInput("branch point order must be positive");
  s.order = static_cast<unsigned>(order);
  s.action = parse_action(bp.value("action", std::string("trivial")));
  if (bp.contains("point")) {
    const Json& p = bp.at("point");
    if (p.is_string()) {
      s.point = parse_rational_list(p.get<std::string>());
    } else {
      std::string joined;
      for (const auto& q : p) joined += (joined.empty() ? "" : ",") + q.get<std::string>();
      s.point = parse_rational_list(joined);
    }
  }
  s.characteristic = bp.value("characteristic", 0L);
  return s;
}

int cmd_global(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.config.empty()) throw InvalidInput("global needs --config");
  std::ifstream in(o.config);
  if (!in) throw InvalidInput("cannot open config '" + o.config + "'");
  const Json config = Json::parse(in);
  if (config.value("schema_version", 0) != kSchemaVersion)
    throw InvalidInput("config schema_version must be " + std::to_string(kSchemaVersion));
  const Json& points = config.at("branch_points");
  if (!points.is_array()) throw InvalidInput("branch_points must be an array");

  Json doc = header("global");
  Json bps = Json::array();
  std::ostringstream t;
  std::vector<std::size_t> counts;
  Integer product = 1;
  for (const auto& bp : points) {
    const std::string name = bp.at("name").get<std::string>();
    const GroupSpec spec = branch_point_spec(bp);
    const TypesReport r = compute_types(spec, o.cap);
    if (!r.types) throw InvalidInput("branch point '" + name + "': " + r.note);
    counts.push_back(r.types->size());
    product *= static_cast<unsigned long>(r.types->size());
    Json reps = Json::array();
    for (const auto& lt : *r.types) reps.push_back(qz_json(lt.representative));
    bps.push_back(Json{{"name", name},
                       {"group", group_json(spec.type)},
                       {"order", spec.order},
                       {"action", spec.action.text},
                       {"types", r.types->size()},
                       {"representatives", reps}});
    t << "branch point " << name << ": " << spec.type.label() << " " << spec.action.text << " order " << spec.order
      << ": " << r.types->size() << " types\n";
  }
  doc["branch_points"] = bps;
  doc["pi0"] = product.get_str();
  t << "pi0: " << product.get_str() << "\n";

  const std::size_t tuple_cap = o.tuple_cap ? o.tuple_cap : o.cap;
  if (product > static_cast<unsigned long>(tuple_cap)) {
    doc["tuples"] = nullptr;
    emit(out, o, doc, t.str());
    err << "error: " << product.get_str() << " tuples exceed the tuple cap " << tuple_cap << "\n";
    return kCap;
  }
  Json tuples = Json::array();
  const std::size_t total = product.get_ui();
  std::vector<std::size_t> digits(counts.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    tuples.push_back(Json{{"types", digits}, {"realizable", true}});
    t << "(";
    for (std::size_t i = 0; i < digits.size(); ++i) t << (i ? ", " : "") << digits[i];
    t << ") realizable\n";
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < counts[i]) break;
      digits[i] = 0;
    }
  }
  doc["tuples"] = tuples;
  emit(out, o, doc, t.str());
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--cap", o.cap, "enumeration cap")->envname("PARAHORIC_CAP")->check(CLI::PositiveNumber);
}

void add_group(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "Cartan type, e.g. A or A3")->required();
  sub->add_option("--rank", o.rank, "rank, when --group is a bare family letter");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local types of equivariant torsors on tame covers, and their twisted parahorics"};
  app.name("parahoric");
  app.require_subcommand(1, 1);

  auto* types = app.add_subcommand("types", "H^1(Gamma, T) and local types");
  auto* twist = app.add_subcommand("twist", "facet of the twisted parahoric attached to a class or to every type");
  auto* split = app.add_subcommand("split-degree", "minimal splitting degree of a point and prime data");
  auto* orbit = app.add_subcommand("orbit", "alcove representatives of the translates a + lambda/e");
  auto* data = app.add_subcommand("data", "mark primes, affine automorphisms and excluded characteristics");
  auto* global = app.add_subcommand("global", "product of local type counts over the branch points of a config");

  for (auto* sub : {types, twist, split, orbit, data, global}) add_common(sub, o);
  for (auto* sub : {types, twist, split, orbit, data}) add_group(sub, o);
  for (auto* sub : {types, twist, orbit}) {
    sub->add_option("--order", o.order, "order e of the inertia group")->check(CLI::PositiveNumber);
    sub->add_option("--point", o.point, "base point as simple-root values, e.g. 1/3,1/3");
  }
  for (auto* sub : {types, twist, orbit})
    sub->add_option("--action", o.action, "trivial, diagram:<perm>, sl:J|J-prime|case-B, su:odd-A|odd-B|even-m|even-0");
  twist->add_option("--class", o.cls, "H^1 class index (default: every type)");
  split->add_option("--point", o.point, "point as simple-root values")->required();
  for (auto* sub : {types, split}) sub->add_option("--char", o.characteristic, "residue characteristic, 0 for none");
  for (auto* sub : {split, data}) sub->add_flag("--twisted", o.twisted, "use the twisted affine diagram 2A_n");
  global->add_option("--config", o.config, "JSON config file")->required();
  global->add_option("--tuple-cap", o.tuple_cap, "largest product to list (default: --cap)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*types) return cmd_types(o, out);
    if (*twist) return cmd_twist(o, out);
    if (*split) return cmd_split_degree(o, out);
    if (*orbit) return cmd_orbit(o, out);
    if (*data) return cmd_data(o, out);
    if (*global) return cmd_global(o, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad config: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace parahoric::cli
