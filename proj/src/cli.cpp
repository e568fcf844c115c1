#include "permutokit/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "permutokit/error.hpp"
#include "permutokit/instances.hpp"
#include "permutokit/json_io.hpp"
#include "permutokit/plates.hpp"

namespace permutokit::cli {

namespace {

using json = nlohmann::json;
using namespace json_io;

struct Options {
  std::int64_t bound = 3;
  std::size_t size = 3;
  std::uint64_t seed = 1;
  std::size_t budget = 20000;
  std::string format = "json";
  std::string input;
  bool mutate = false;
  bool size_given = false;
};

struct Result {
  json data = json::object();
  int code = 0;
};

class Input {
 public:
  Input(json j) : j_(std::move(j)) {}
  /// The named field; a lone argument may also be given as the whole input.
  const json& get(const char* name, bool sole = false) const {
    if (j_.is_object() && j_.contains(name)) return j_.at(name);
    if (sole) return j_;
    throw ValidationError(std::string("input: missing field \"") + name + "\"");
  }
  bool has(const char* name) const { return j_.is_object() && j_.contains(name); }

 private:
  json j_;
};

GroundSet subset_of(const json& j) {
  require(j.is_array(), "input: a subset is an array of labels");
  std::vector<Label> labels;
  for (const auto& e : j) labels.push_back(label_from_json(e));
  return GroundSet(std::move(labels));
}

std::pair<Mask, Mask> split_of(const GroundSet& ground, const Input& in) {
  const GroundSet s = subset_of(in.get("S"));
  const GroundSet t = subset_of(in.get("T"));
  require(s.is_subset_of(ground) && t.is_subset_of(ground), "input: S and T must lie in the ground set");
  const Mask sm = ground.mask_of(s), tm = ground.mask_of(t);
  require((sm & tm) == 0 && (sm | tm) == ground.full(), "input: (S, T) must be a decomposition of the ground set");
  return {sm, tm};
}

GroundSet ground_of(const Input& in, const Options& opt) {
  if (in.has("ground")) return ground_from_json(in.get("ground"));
  return GroundSet::range(static_cast<int>(opt.size));
}

using Handler = std::function<Result(const Input&, const Options&)>;

std::map<std::string, std::map<std::string, Handler>> handlers() {
  std::map<std::string, std::map<std::string, Handler>> h;

  auto& comp = h["comp"];
  comp["tits"] = [](const Input& in, const Options&) {
    Result r;
    r.data["composition"] =
        to_json(setcomp::tits_product(composition_from_json(in.get("F")), composition_from_json(in.get("G"))));
    return r;
  };
  comp["concat"] = [](const Input& in, const Options&) {
    Result r;
    r.data["composition"] =
        to_json(setcomp::concatenate(composition_from_json(in.get("H")), composition_from_json(in.get("K"))));
    return r;
  };
  comp["restrict"] = [](const Input& in, const Options&) {
    Result r;
    r.data["composition"] = to_json(setcomp::restrict(composition_from_json(in.get("H")), subset_of(in.get("S"))));
    return r;
  };
  comp["refines"] = [](const Input& in, const Options&) {
    Result r;
    r.data["refines"] = setcomp::refines(composition_from_json(in.get("G")), composition_from_json(in.get("F")));
    return r;
  };
  comp["relabel"] = [](const Input& in, const Options&) {
    Result r;
    r.data["composition"] =
        to_json(setcomp::relabel(bijection_from_json(in.get("sigma")), composition_from_json(in.get("F"))));
    return r;
  };
  comp["permute"] = [](const Input& in, const Options&) {
    Result r;
    r.data["composition"] =
        to_json(setcomp::permute_lumps(perm_from_json(in.get("beta")), composition_from_json(in.get("F"))));
    return r;
  };
  comp["hat-beta"] = [](const Input& in, const Options&) {
    Result r;
    r.data["perm"] = to_json(setcomp::hat_beta(perm_from_json(in.get("beta")), composition_from_json(in.get("F")),
                                               composition_from_json(in.get("G"))));
    return r;
  };
  comp["all"] = [](const Input& in, const Options& opt) {
    Result r;
    json all = json::array();
    for (const auto& f : setcomp::all_compositions(ground_of(in, opt))) all.push_back(to_json(f));
    r.data["count"] = all.size();
    r.data["compositions"] = all;
    return r;
  };

  auto& pre = h["preposet"];
  pre["leq"] = [](const Input& in, const Options&) {
    Result r;
    r.data["leq"] = preposet::preposet_leq(preposet_from_json(in.get("q")), preposet_from_json(in.get("p")));
    return r;
  };
  pre["mul"] = [](const Input& in, const Options&) {
    Result r;
    r.data["preposet"] = to_json(preposet::o_mul(preposet_from_json(in.get("p")), preposet_from_json(in.get("q"))));
    return r;
  };
  pre["comul"] = [](const Input& in, const Options&) {
    Result r;
    const auto p = preposet_from_json(in.get("p"));
    const auto [s, t] = split_of(p.ground(), in);
    const auto [a, b] = preposet::o_comul(p, s, t);
    r.data["left"] = to_json(a);
    r.data["right"] = to_json(b);
    return r;
  };
  pre["total"] = [](const Input& in, const Options&) {
    Result r;
    r.data["preposet"] = to_json(preposet::AugPreposet(preposet::total_of_composition(composition_from_json(in.get("F", true)))));
    return r;
  };
  pre["composition"] = [](const Input& in, const Options&) {
    Result r;
    const auto p = preposet_from_json(in.get("p", true));
    require(!p.is_bottom(), "composition of total preposet: bottom is not total");
    r.data["composition"] = to_json(preposet::composition_of_total(p.value()));
    return r;
  };
  pre["upward"] = [](const Input& in, const Options&) {
    Result r;
    const auto p = preposet_from_json(in.get("p", true));
    require(!p.is_bottom(), "upward pairs: bottom has no relation");
    json pairs = json::array();
    for (const auto& u : preposet::upward_pairs(p.value()))
      pairs.push_back({to_json(p.ground().subset(u.s)), to_json(p.ground().subset(u.t))});
    r.data["pairs"] = pairs;
    return r;
  };
  pre["enumerate"] = [](const Input& in, const Options& opt) {
    Result r;
    json all = json::array();
    for (const auto& p : preposet::enumerate_preposets(ground_of(in, opt))) all.push_back(to_json(preposet::AugPreposet(p)));
    r.data["count"] = all.size();
    r.data["preposets"] = all;
    return r;
  };

  auto& cone = h["cone"];
  cone["points"] = [](const Input& in, const Options& opt) {
    Result r;
    json pts = json::array();
    for (const auto& p : cones::cone_lattice_points(preposet_from_json(in.get("p", true)), Box(opt.bound)))
      pts.push_back(to_json(p));
    r.data["count"] = pts.size();
    r.data["points"] = pts;
    return r;
  };
  cone["contains"] = [](const Input& in, const Options&) {
    Result r;
    r.data["contains"] = cones::cone_contains(preposet_from_json(in.get("p")), coweight_from_json(in.get("h")));
    return r;
  };
  cone["face"] = [](const Input& in, const Options&) {
    Result r;
    const auto p = preposet_from_json(in.get("p"));
    require(!p.is_bottom(), "cone face: bottom has no cone");
    const auto [s, t] = split_of(p.ground(), in);
    r.data["preposet"] = to_json(cones::cone_face(p.value(), s, t));
    return r;
  };
  cone["coroot"] = [](const Input& in, const Options& opt) {
    Result r;
    r.data["coweight"] =
        to_json(cones::coroot(label_from_json(in.get("i1")), label_from_json(in.get("i2")), ground_of(in, opt)));
    return r;
  };

  auto& bf = h["bf"];
  bf["mul"] = [](const Input& in, const Options&) {
    Result r;
    r.data["z"] = to_json(boolfun::bf_mul(boolfun_from_json(in.get("z1")), boolfun_from_json(in.get("z2"))));
    return r;
  };
  bf["comul"] = [](const Input& in, const Options&) {
    Result r;
    const auto z = boolfun_from_json(in.get("z"));
    const auto [s, t] = split_of(z.ground(), in);
    const auto [a, b] = boolfun::bf_comul(z, s, t);
    r.data["left"] = to_json(a);
    r.data["right"] = to_json(b);
    return r;
  };
  bf["equiv"] = [](const Input& in, const Options&) {
    Result r;
    const auto z1 = boolfun_from_json(in.get("z1"));
    const auto z2 = boolfun_from_json(in.get("z2"));
    require(z1.ground() == z2.ground(), "equivalence: ground sets differ");
    const auto h = boolfun::bf_equivalent(z1, z2);
    r.data["equivalent"] = h.has_value();
    r.data["h"] = h ? point_to_json(*h) : json(nullptr);
    return r;
  };
  bf["is-gp"] = [](const Input& in, const Options&) {
    Result r;
    r.data["is_gp"] = boolfun::is_generalized_permutohedron(boolfun_from_json(in.get("z", true)));
    return r;
  };
  bf["heights"] = [](const Input& in, const Options&) {
    Result r;
    r.data["heights"] = boolfun::heights_along(boolfun_from_json(in.get("z")), composition_from_json(in.get("F")));
    return r;
  };

  auto plate_of = [](const Input& in) {
    return plates::Plate(composition_from_json(in.get("H")), boolfun_from_json(in.get("z")));
  };
  auto& plate = h["plate"];
  plate["points"] = [plate_of](const Input& in, const Options& opt) {
    Result r;
    json pts = json::array();
    for (const auto& p : plates::plate_lattice_points(plate_of(in), Box(opt.bound))) pts.push_back(point_to_json(p));
    r.data["count"] = pts.size();
    r.data["points"] = pts;
    return r;
  };
  plate["contains"] = [plate_of](const Input& in, const Options&) {
    Result r;
    r.data["contains"] = plates::plate_contains(plate_of(in), point_from_json(in.get("h")));
    return r;
  };
  plate["face"] = [plate_of](const Input& in, const Options&) {
    Result r;
    const auto pl = plate_of(in);
    const auto f = composition_from_json(in.get("F"));
    r.data["contains"] = plates::plate_F_face_contains(pl, f, point_from_json(in.get("h")));
    if (auto w = plates::face_escape_witness(pl, f))
      r.data["escape"] = {{"segment", to_json(pl.ground().subset(w->segment))}, {"direction", to_json(w->direction)}};
    return r;
  };
  plate["flat"] = [plate_of](const Input& in, const Options&) {
    Result r;
    const auto flat = plates::max_affine_flat(plate_of(in));
    r.data["flat"] = {{"F", to_json(flat.f())}, {"heights", flat.heights()}};
    return r;
  };

  auto& sec = h["sections"];
  sec["basis"] = [](const Input& in, const Options&) {
    Result r;
    r.data["basis"] = to_json(sections::global_sections(boolfun_from_json(in.get("z", true))));
    return r;
  };
  sec["count"] = [](const Input& in, const Options&) {
    Result r;
    r.data["count"] = sections::global_sections(boolfun_from_json(in.get("z", true))).size();
    return r;
  };
  sec["mul"] = [](const Input& in, const Options&) {
    Result r;
    r.data["basis"] = to_json(sections::sections_mul(sections::global_sections(boolfun_from_json(in.get("z1"))),
                                                     sections::global_sections(boolfun_from_json(in.get("z2")))));
    return r;
  };
  sec["comul"] = [](const Input& in, const Options&) {
    Result r;
    const auto z = boolfun_from_json(in.get("z"));
    const auto [s, t] = split_of(z.ground(), in);
    const auto h = point_from_json(in.get("h"));
    require(h.ground() == z.ground(), "section comultiplication: point ground differs from z");
    const auto word = sections::sections_comul(sections::global_sections(z), h, s, t);
    r.data["zero"] = word.is_zero();
    if (!word.is_zero()) {
      r.data["left"] = point_to_json(word.factors()[0]);
      r.data["right"] = point_to_json(word.factors()[1]);
    }
    return r;
  };

  auto& pt = h["point"];
  pt["mul"] = [](const Input& in, const Options&) {
    Result r;
    r.data["point"] = to_json(points::point_mul(permpoint_from_json(in.get("x1")), permpoint_from_json(in.get("x2"))));
    return r;
  };
  pt["comul"] = [](const Input& in, const Options&) {
    Result r;
    const auto x = permpoint_from_json(in.get("x"));
    const auto [s, t] = split_of(x.ground(), in);
    const auto [a, b] = points::point_comul(x, s, t);
    r.data["left"] = to_json(a);
    r.data["right"] = to_json(b);
    return r;
  };
  pt["eval"] = [](const Input& in, const Options&) {
    Result r;
    const auto x = permpoint_from_json(in.get("x"));
    const auto chart = in.has("H") ? composition_from_json(in.get("H")) : x.orbit();
    r.data["value"] = to_json(points::evaluate(x, chart, coweight_from_json(in.get("h"))));
    return r;
  };
  pt["relabel"] = [](const Input& in, const Options&) {
    Result r;
    r.data["point"] = to_json(points::point_relabel(bijection_from_json(in.get("sigma")), permpoint_from_json(in.get("x"))));
    return r;
  };

  auto& op = h["opens"];
  op["of-preposet"] = [](const Input& in, const Options&) {
    Result r;
    r.data["open"] = to_json(opens::open_of_preposet(preposet_from_json(in.get("p", true))));
    return r;
  };
  op["pullback"] = [](const Input& in, const Options&) {
    Result r;
    const auto u = open_from_json(in.get("U"));
    const std::string along = in.get("along").get<std::string>();
    const auto c = composition_from_json(in.get("composition"));
    if (along == "comul")
      r.data["open"] = to_json(opens::pullback_comul(u, c));
    else if (along == "mul")
      r.data["open"] = to_json(opens::pullback_mul(u, c));
    else
      throw ValidationError("pullback: \"along\" must be \"comul\" or \"mul\"");
    return r;
  };
  op["check-indexing"] = [](const Input& in, const Options& opt) {
    Result r;
    const auto report = opens::check_indexing(ground_of(in, opt), opt.mutate);
    r.data["passed"] = report.passed;
    r.data["cases"] = report.cases;
    r.data["counterexample"] = report.passed ? json(nullptr) : json(report.counterexample);
    r.code = report.passed ? 0 : 1;
    return r;
  };
  return h;
}

template <class E>
Result run_laws(const axioms::BimonoidInstance<E>& instance, const Options& opt) {
  Result r;
  const auto reports =
      axioms::check_all(instance, GroundSet::range(static_cast<int>(opt.size)), opt.budget, opt.seed);
  json arr = json::array();
  bool ok = true;
  for (const auto& rep : reports) {
    arr.push_back(to_json(rep));
    ok = ok && rep.passed;
  }
  r.data["instance"] = instance.name;
  r.data["size"] = opt.size;
  r.data["seed"] = opt.seed;
  r.data["budget"] = opt.budget;
  r.data["reports"] = arr;
  r.code = ok ? 0 : 1;
  return r;
}

Result run_check(const std::string& name, const Options& opt) {
  if (name == "sigma") return run_laws(axioms::sigma_instance(opt.mutate), opt);
  if (name == "o-bullet") return run_laws(axioms::o_bullet_instance(opt.mutate), opt);
  if (name == "bf") return run_laws(axioms::bf_instance(opt.mutate), opt);
  if (name == "points") return run_laws(axioms::points_instance(opt.mutate), opt);
  throw ValidationError("check: unknown instance \"" + name + "\" (sigma, o-bullet, bf, points)");
}

std::string render_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_table(const json& data, std::ostream& out) {
  if (data.contains("reports")) {
    out << "instance " << render_value(data["instance"]) << "  size " << data["size"] << "  seed " << data["seed"]
        << "\n";
    out << std::left << std::setw(26) << "law" << std::setw(10) << "cases" << std::setw(12) << "mode"
        << "result\n";
    for (const auto& rep : data["reports"]) {
      out << std::left << std::setw(26) << rep["law"].get<std::string>() << std::setw(10) << rep["cases"].dump()
          << std::setw(12) << (rep["exhaustive"].get<bool>() ? "exhaustive" : "sampled")
          << (rep["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
      if (!rep["passed"].get<bool>()) out << "  counterexample: " << rep["counterexample"].get<std::string>() << "\n";
    }
    return;
  }
  if (data.size() == 1) {
    out << render_value(data.begin().value()) << "\n";
    return;
  }
  for (auto it = data.begin(); it != data.end(); ++it) out << it.key() << ": " << render_value(it.value()) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto table = handlers();
  CLI::App app{"permutokit: set compositions, preposets, cones, plates and permutohedral space"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--bound", opt.bound, "L-infinity window radius")->check(CLI::NonNegativeNumber);
  auto* size_opt = app.add_option("--size", opt.size, "ground set size n, labels 1..n")->check(CLI::Range(0, 12));
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--budget", opt.budget, "cases per law before sampling");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--input", opt.input, "read the JSON input from this file instead of stdin");
  app.add_flag("--mutate", opt.mutate, "use the deliberately broken variant");

  std::string group_name, op_name, instance_name;
  for (const auto& [group, ops] : table) {
    auto* sub = app.add_subcommand(group, "operations on " + group);
    std::vector<std::string> names;
    for (const auto& kv : ops) names.push_back(kv.first);
    sub->add_option("op", op_name, "operation")->required()->check(CLI::IsMember(names));
    sub->callback([&group_name, g = group] { group_name = g; });
  }
  auto* check = app.add_subcommand("check", "verify the bimonoid laws of an instance");
  check->add_option("instance", instance_name, "sigma, o-bullet, bf or points")
      ->required()
      ->check(CLI::IsMember({"sigma", "o-bullet", "bf", "points"}));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  opt.size_given = size_opt->count() > 0;

  try {
    Result result;
    if (check->parsed()) {
      result = run_check(instance_name, opt);
    } else {
      const Handler& handler = table.at(group_name).at(op_name);
      const bool needs_input = !(group_name == "opens" && op_name == "check-indexing") &&
                               !((op_name == "enumerate" || op_name == "all") && opt.size_given);
      json input = json::object();
      if (needs_input) {
        std::stringstream buf;
        if (!opt.input.empty()) {
          std::ifstream file(opt.input);
          require(file.good(), "input: cannot open " + opt.input);
          buf << file.rdbuf();
        } else {
          buf << in.rdbuf();
        }
        input = json::parse(buf.str());
        if (input.is_object() && input.contains("schema"))
          require(input["schema"] == kSchema, std::string("input: unsupported schema, expected ") + kSchema);
      }
      result = handler(Input(input), opt);
    }
    if (opt.format == "table") {
      print_table(result.data, out);
    } else {
      json doc = result.data;
      doc["schema"] = kSchema;
      out << doc.dump(2) << "\n";
    }
    return result.code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace permutokit::cli
