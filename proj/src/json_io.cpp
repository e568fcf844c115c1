#include "permutokit/json_io.hpp"

#include <cctype>

#include "permutokit/error.hpp"

namespace permutokit::json_io {

namespace {

const json& field(const json& j, const char* name) {
  require(j.is_object() && j.contains(name), std::string("json: missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<Label> labels_from_json(const json& j) {
  require(j.is_array(), "json: expected an array of labels");
  std::vector<Label> out;
  for (const auto& e : j) out.push_back(label_from_json(e));
  return out;
}

std::string subset_key(const GroundSet& g, Mask a) {
  std::string out = "{";
  bool first = true;
  for_each_bit(a, [&](std::size_t i) {
    out += (first ? "" : ",") + to_string(g[i]);
    first = false;
  });
  return out + "}";
}

Mask subset_from_key(const GroundSet& g, const std::string& key) {
  if (!key.empty() && key.front() != '{') {
    for (char c : key) require(std::isdigit(static_cast<unsigned char>(c)) != 0, "boolean function: bad subset key " + key);
    const unsigned long long m = std::stoull(key);
    require(m <= g.full(), "boolean function: bitmask outside the ground set");
    return static_cast<Mask>(m);
  }
  require(key.size() >= 2 && key.back() == '}', "boolean function: bad subset key " + key);
  const std::string body = key.substr(1, key.size() - 2);
  Mask out = 0;
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string::npos) end = body.size();
    std::string item = body.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    const auto idx = g.index_of(label_from_key(item));
    require(idx.has_value(), "boolean function: subset key mentions a label outside the ground set");
    out |= Mask{1} << *idx;
    start = end + 1;
  }
  return out;
}

json coord_map(const GroundSet& g, const std::vector<std::int64_t>& coords) {
  json out = json::object();
  for (std::size_t i = 0; i < g.size(); ++i) out[label_key(g[i])] = coords[i];
  return out;
}

}  // namespace

json to_json(const Label& l) {
  if (const auto* i = std::get_if<std::int64_t>(&l)) return *i;
  return std::get<std::string>(l);
}

Label label_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  require(j.is_string(), "json: labels must be integers or strings");
  return j.get<std::string>();
}

std::string label_key(const Label& l) { return to_string(l); }

Label label_from_key(const std::string& key) {
  std::size_t start = (!key.empty() && key[0] == '-') ? 1 : 0;
  bool digits = key.size() > start && key.size() - start <= 18;
  for (std::size_t i = start; i < key.size() && digits; ++i) digits = std::isdigit(static_cast<unsigned char>(key[i])) != 0;
  if (digits) return static_cast<std::int64_t>(std::stoll(key));
  return key;
}

json to_json(const GroundSet& g) {
  json out = json::array();
  for (const auto& l : g.labels()) out.push_back(to_json(l));
  return out;
}

GroundSet ground_from_json(const json& j) { return GroundSet(labels_from_json(j)); }

json to_json(const setcomp::Composition& f) {
  json out = json::array();
  for (const auto& lump : f.lump_labels()) {
    json l = json::array();
    for (const auto& a : lump) l.push_back(to_json(a));
    out.push_back(l);
  }
  return out;
}

setcomp::Composition composition_from_json(const json& j) {
  require(j.is_array(), "composition: expected an array of lumps");
  std::vector<std::vector<Label>> lumps;
  for (const auto& l : j) lumps.push_back(labels_from_json(l));
  return setcomp::Composition::from_lumps(lumps);
}

json to_json(const setcomp::Bijection& sigma) {
  json out = json::object();
  for (const auto& l : sigma.source().labels()) out[label_key(l)] = to_json(sigma(l));
  return out;
}

setcomp::Bijection bijection_from_json(const json& j) {
  require(j.is_object(), "bijection: expected an object mapping source labels to target labels");
  std::vector<std::pair<Label, Label>> pairs;
  for (auto it = j.begin(); it != j.end(); ++it) pairs.emplace_back(label_from_key(it.key()), label_from_json(it.value()));
  return setcomp::Bijection::from_pairs(pairs);
}

json to_json(const setcomp::Perm& beta) { return beta.one_line(); }

setcomp::Perm perm_from_json(const json& j) {
  require(j.is_array(), "permutation: expected a one-line array");
  std::vector<int> line;
  for (const auto& e : j) {
    require(e.is_number_integer(), "permutation: entries must be integers");
    line.push_back(e.get<int>());
  }
  return setcomp::Perm::from_one_line(line);
}

json to_json(const preposet::AugPreposet& p) {
  if (p.is_bottom()) return {{"bottom", true}, {"ground", to_json(p.ground())}};
  json rel = json::array();
  for (const auto& [a, b] : p.value().pairs()) rel.push_back({to_json(a), to_json(b)});
  return {{"ground", to_json(p.ground())}, {"rel", rel}};
}

preposet::AugPreposet preposet_from_json(const json& j) {
  require(j.is_object(), "preposet: expected an object");
  const GroundSet g = j.contains("ground") ? ground_from_json(j.at("ground")) : GroundSet();
  if (j.contains("bottom")) {
    require(j.at("bottom") == true, "preposet: \"bottom\" must be true when present");
    return preposet::AugPreposet::bottom(g);
  }
  require(j.contains("ground"), "json: missing field \"ground\"");
  std::vector<std::pair<Label, Label>> pairs;
  if (j.contains("rel")) {
    require(j.at("rel").is_array(), "preposet: rel must be an array of pairs");
    for (const auto& e : j.at("rel")) {
      require(e.is_array() && e.size() == 2, "preposet: each relation entry is a pair");
      pairs.emplace_back(label_from_json(e[0]), label_from_json(e[1]));
    }
  }
  return preposet::Preposet::from_pairs(g, pairs);
}

json to_json(const cones::CoweightVector& h) { return {{"coords", coord_map(h.ground(), h.coords())}}; }

cones::CoweightVector coweight_from_json(const json& j) { return cones::CoweightVector(point_from_json(j)); }

json point_to_json(const LatticePoint& h) { return coord_map(h.ground(), h.coords()); }

LatticePoint point_from_json(const json& j) {
  const json& m = (j.is_object() && j.contains("coords") && j.at("coords").is_object()) ? j.at("coords") : j;
  require(m.is_object(), "point: expected a coordinate map");
  std::vector<Label> labels;
  for (auto it = m.begin(); it != m.end(); ++it) {
    require(it.value().is_number_integer(), "point: coordinates must be integers");
    labels.push_back(label_from_key(it.key()));
  }
  GroundSet g(labels);
  std::vector<std::int64_t> coords(g.size());
  for (auto it = m.begin(); it != m.end(); ++it) coords[*g.index_of(label_from_key(it.key()))] = it.value().get<std::int64_t>();
  return LatticePoint(std::move(g), std::move(coords));
}

json to_json(const boolfun::BooleanFunction& z) {
  json values = json::object();
  for (Mask a = 0; a < z.values().size(); ++a) values[subset_key(z.ground(), a)] = z(a);
  return {{"ground", to_json(z.ground())}, {"values", values}};
}

boolfun::BooleanFunction boolfun_from_json(const json& j) {
  const GroundSet g = ground_from_json(field(j, "ground"));
  require(g.size() <= boolfun::kMaxBooleanGround, "boolean function: ground set too large for dense storage");
  const json& m = field(j, "values");
  require(m.is_object(), "boolean function: values must be an object");
  std::vector<std::int64_t> values(std::size_t{1} << g.size(), 0);
  std::vector<bool> seen(values.size(), false);
  for (auto it = m.begin(); it != m.end(); ++it) {
    require(it.value().is_number_integer(), "boolean function: values must be integers");
    const Mask a = subset_from_key(g, it.key());
    require(!seen[a], "boolean function: subset given twice");
    seen[a] = true;
    values[a] = it.value().get<std::int64_t>();
  }
  require(seen[0], "boolean function: value at the empty set is mandatory");
  for (bool s : seen) require(s, "boolean function: a value is required for every subset");
  return boolfun::BooleanFunction(g, std::move(values));
}

json to_json(const points::Rational& q) { return q.get_str(); }

points::Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return points::Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  require(j.is_string(), "rational: expected \"p/q\" or an integer");
  const std::string s = j.get<std::string>();
  points::Rational q;
  require(!s.empty() && q.set_str(s, 10) == 0, "rational: cannot parse " + s);
  require(q.get_den() != 0, "rational: zero denominator");
  q.canonicalize();
  return q;
}

json to_json(const points::PermPoint& x) {
  json coords = json::object();
  for (std::size_t i = 0; i < x.coords().size(); ++i) coords[label_key(x.ground()[i])] = to_json(x.coords()[i]);
  return {{"orbit", to_json(x.orbit())}, {"coords", coords}};
}

points::PermPoint permpoint_from_json(const json& j) {
  const auto orbit = composition_from_json(field(j, "orbit"));
  const json& m = field(j, "coords");
  require(m.is_object(), "point: coords must be an object");
  require(m.size() == orbit.ground().size(), "point: one scalar per label required");
  std::vector<points::Rational> coords(orbit.ground().size());
  for (auto it = m.begin(); it != m.end(); ++it) {
    const auto idx = orbit.ground().index_of(label_from_key(it.key()));
    require(idx.has_value(), "point: scalar given for a label outside the orbit");
    coords[*idx] = rational_from_json(it.value());
  }
  return points::PermPoint(orbit, std::move(coords));
}

json to_json(const sections::SectionBasis& s) {
  json pts = json::array();
  for (const auto& h : s.points()) pts.push_back(point_to_json(h));
  return {{"z", to_json(s.z())}, {"points", pts}};
}

sections::SectionBasis sections_from_json(const json& j) {
  auto z = boolfun_from_json(field(j, "z"));
  const json& pts = field(j, "points");
  require(pts.is_array(), "section basis: points must be an array");
  std::vector<LatticePoint> points;
  for (const auto& p : pts) {
    auto h = point_from_json(p);
    require(h.ground() == z.ground(), "section basis: point ground differs from z");
    points.push_back(std::move(h));
  }
  return sections::SectionBasis(std::move(z), std::move(points));
}

json to_json(const opens::ToricOpen& u) {
  json orbits = json::array();
  for (const auto& t : u.orbits()) {
    json tuple = json::array();
    for (const auto& h : t) tuple.push_back(to_json(h));
    orbits.push_back(tuple);
  }
  return {{"shape", to_json(u.shape())}, {"orbits", orbits}};
}

opens::ToricOpen open_from_json(const json& j) {
  auto shape = composition_from_json(field(j, "shape"));
  const json& orbits = field(j, "orbits");
  require(orbits.is_array(), "open: orbits must be an array");
  std::set<opens::OrbitTuple> tuples;
  for (const auto& t : orbits) {
    require(t.is_array(), "open: each orbit is an array of compositions");
    opens::OrbitTuple tuple;
    for (const auto& h : t) tuple.push_back(composition_from_json(h));
    tuples.insert(std::move(tuple));
  }
  return opens::ToricOpen(std::move(shape), tuples);
}

json to_json(const axioms::LawReport& r) {
  json out = {{"law", r.law}, {"cases", r.cases}, {"exhaustive", r.exhaustive}, {"passed", r.passed}};
  out["counterexample"] = r.passed ? json(nullptr) : json(r.counterexample);
  return out;
}

}  // namespace permutokit::json_io
