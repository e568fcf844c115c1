#include "permutokit/opens.hpp"

#include <map>

#include "permutokit/error.hpp"

namespace permutokit::opens {

using preposet::AugPreposet;
using setcomp::Composition;

namespace {

GroundSet lump_ground(const Composition& f, std::size_t i) { return f.ground().subset(f.lump(i)); }

/// Cartesian product of per-position choices.
template <class T, class Fn>
void for_each_choice(const std::vector<std::vector<T>>& choices, Fn&& fn) {
  std::vector<T> current;
  current.reserve(choices.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      fn(current);
      return;
    }
    for (const auto& c : choices[i]) {
      current.push_back(c);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

/// For G <= F: the lump of G containing each lump of F.
std::vector<std::size_t> block_of(const Composition& f, const Composition& g) {
  require(setcomp::refines(g, f), "pullback: shapes are not related by refinement");
  std::vector<std::size_t> out;
  std::size_t j = 0;
  for (Mask lump : f.lumps()) {
    while (!is_subset(lump, g.lump(j))) ++j;
    out.push_back(j);
  }
  return out;
}

std::string describe(const OrbitTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + setcomp::to_string(t[i]);
  return out + ")";
}

}  // namespace

ToricOpen::ToricOpen(Composition shape, const std::set<OrbitTuple>& orbits) : shape_(std::move(shape)) {
  for (const auto& t : orbits) {
    require(t.size() == shape_.length(), "open: orbit tuple length differs from the shape's");
    for (std::size_t i = 0; i < t.size(); ++i)
      require(t[i].ground() == lump_ground(shape_, i), "open: orbit ground differs from its shape lump");
    if (orbits_.count(t)) continue;
    std::vector<std::vector<Composition>> below;
    for (const auto& h : t) below.push_back(setcomp::coarsenings(h));
    for_each_choice(below, [&](const OrbitTuple& k) { orbits_.insert(k); });
  }
}

ToricOpen ToricOpen::whole(const Composition& shape) {
  ToricOpen out;
  out.shape_ = shape;
  for (auto& t : all_orbit_tuples(shape)) out.orbits_.insert(std::move(t));
  return out;
}

ToricOpen ToricOpen::empty(const Composition& shape) {
  ToricOpen out;
  out.shape_ = shape;
  return out;
}

bool ToricOpen::is_down_closed() const {
  for (const auto& t : orbits_) {
    std::vector<std::vector<Composition>> below;
    for (const auto& h : t) below.push_back(setcomp::coarsenings(h));
    bool ok = true;
    for_each_choice(below, [&](const OrbitTuple& k) { ok = ok && orbits_.count(k) != 0; });
    if (!ok) return false;
  }
  return true;
}

std::string to_string(const ToricOpen& u) {
  std::string out = setcomp::to_string(u.shape()) + "{";
  bool first = true;
  for (const auto& t : u.orbits()) {
    out += (first ? "" : ", ") + describe(t);
    first = false;
  }
  return out + "}";
}

std::vector<OrbitTuple> all_orbit_tuples(const Composition& shape) {
  std::vector<std::vector<Composition>> choices;
  for (std::size_t i = 0; i < shape.length(); ++i) choices.push_back(setcomp::all_compositions(lump_ground(shape, i)));
  std::vector<OrbitTuple> out;
  for_each_choice(choices, [&](const OrbitTuple& t) { out.push_back(t); });
  return out;
}

ToricOpen open_of_preposet(const AugPreposet& p) {
  const Composition shape = Composition::single_lump(p.ground());
  std::set<OrbitTuple> orbits;
  if (!p.is_bottom())
    for (auto& h : setcomp::all_compositions(p.ground()))
      if (preposet::total_of_composition(h).includes(p.value())) orbits.insert(OrbitTuple{h});
  return ToricOpen(shape, orbits);
}

ToricOpen pullback_comul(const ToricOpen& u, const Composition& g) {
  const Composition& f = u.shape();
  require(f.ground() == g.ground(), "pullback: shapes have different ground sets");
  const auto block = block_of(f, g);
  std::set<OrbitTuple> orbits;
  for (const auto& k : all_orbit_tuples(g)) {
    OrbitTuple image;
    for (std::size_t i = 0; i < f.length(); ++i) image.push_back(setcomp::restrict(k[block[i]], lump_ground(f, i)));
    if (u.contains(image)) orbits.insert(k);
  }
  return ToricOpen(g, orbits);
}

ToricOpen pullback_mul(const ToricOpen& u, const Composition& f) {
  const Composition& g = u.shape();
  require(f.ground() == g.ground(), "pullback: shapes have different ground sets");
  const auto block = block_of(f, g);
  std::set<OrbitTuple> orbits;
  for (const auto& h : all_orbit_tuples(f)) {
    OrbitTuple image(g.length());
    for (std::size_t i = 0; i < f.length(); ++i) image[block[i]] = setcomp::concatenate(image[block[i]], h[i]);
    if (u.contains(image)) orbits.insert(h);
  }
  return ToricOpen(f, orbits);
}

ToricOpen open_product(const std::vector<ToricOpen>& factors) {
  Composition shape;
  std::vector<std::vector<OrbitTuple>> choices;
  for (const auto& u : factors) {
    shape = setcomp::concatenate(shape, u.shape());
    choices.emplace_back(u.orbits().begin(), u.orbits().end());
  }
  std::set<OrbitTuple> orbits;
  for_each_choice(choices, [&](const std::vector<OrbitTuple>& parts) {
    OrbitTuple t;
    for (const auto& part : parts) t.insert(t.end(), part.begin(), part.end());
    orbits.insert(std::move(t));
  });
  return ToricOpen(shape, orbits);
}

namespace {

/// Lifted comultiplication of augmented preposets: split p along the lumps of
/// f one lump at a time. Bottom pieces if any split fails.
std::vector<AugPreposet> split_along(const AugPreposet& p, const Composition& f, bool mutate) {
  std::vector<AugPreposet> out;
  AugPreposet rest = p;
  for (std::size_t i = 0; i < f.length(); ++i) {
    const Mask lump = rest.ground().mask_of(lump_ground(f, i));
    auto [head, tail] = preposet::o_comul(rest, lump, rest.ground().full() & ~lump);
    out.push_back(head);
    rest = tail;
  }
  bool bottom = false;
  for (const auto& q : out) bottom = bottom || q.is_bottom();
  if (mutate && !p.is_bottom()) bottom = !bottom;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const GroundSet lg = lump_ground(f, i);
    if (bottom)
      out[i] = AugPreposet::bottom(lg);
    else
      out[i] = p.value().restrict(p.ground().mask_of(lg));
  }
  return out;
}

std::string describe(const std::vector<AugPreposet>& ps) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + preposet::to_string(ps[i]);
  return out + ")";
}

}  // namespace

IndexingReport check_indexing(const GroundSet& ground, bool mutate) {
  if (ground.size() > kMaxIndexingSize)
    throw SizeGuardError("indexing check: ground sets above " + std::to_string(kMaxIndexingSize) +
                         " elements are not supported");
  std::map<GroundSet, std::vector<AugPreposet>> family;
  std::map<AugPreposet, ToricOpen> opens;
  auto preposets_on = [&](const GroundSet& g) -> const std::vector<AugPreposet>& {
    auto it = family.find(g);
    if (it == family.end()) it = family.emplace(g, preposet::enumerate_aug_preposets(g)).first;
    return it->second;
  };
  auto open_of = [&](const AugPreposet& p) -> const ToricOpen& {
    auto it = opens.find(p);
    if (it == opens.end()) it = opens.emplace(p, open_of_preposet(p)).first;
    return it->second;
  };

  IndexingReport report;
  auto fail = [&](const std::string& what) {
    if (report.passed) report.counterexample = what;
    report.passed = false;
  };

  for (const auto& f : setcomp::all_compositions(ground)) {
    for (const auto& g : setcomp::coarsenings(f)) {
      const auto block = block_of(f, g);

      // Multiplication: pullback along comultiplication of a product of U_p.
      std::vector<std::vector<AugPreposet>> f_choices;
      for (std::size_t i = 0; i < f.length(); ++i) f_choices.push_back(preposets_on(lump_ground(f, i)));
      for_each_choice(f_choices, [&](const std::vector<AugPreposet>& ps) {
        ++report.cases;
        std::vector<ToricOpen> factors;
        for (const auto& p : ps) factors.push_back(open_of(p));
        const ToricOpen lhs = pullback_comul(open_product(factors), g);
        std::vector<AugPreposet> merged(g.length());
        std::vector<bool> started(g.length(), false);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          merged[block[i]] = started[block[i]] ? preposet::o_mul(merged[block[i]], ps[i]) : ps[i];
          started[block[i]] = true;
        }
        std::vector<ToricOpen> rhs_factors;
        for (const auto& q : merged) rhs_factors.push_back(open_of(q));
        const ToricOpen rhs = open_product(rhs_factors);
        if (!(lhs == rhs))
          fail("multiplication: F=" + setcomp::to_string(f) + " G=" + setcomp::to_string(g) + " p=" + describe(ps) +
               " pullback has " + std::to_string(lhs.size()) + " orbits, product of U has " +
               std::to_string(rhs.size()));
      });

      // Comultiplication: pullback along multiplication of a product of U_p.
      std::vector<std::vector<AugPreposet>> g_choices;
      for (std::size_t j = 0; j < g.length(); ++j) g_choices.push_back(preposets_on(lump_ground(g, j)));
      for_each_choice(g_choices, [&](const std::vector<AugPreposet>& ps) {
        ++report.cases;
        std::vector<ToricOpen> factors;
        for (const auto& p : ps) factors.push_back(open_of(p));
        const ToricOpen lhs = pullback_mul(open_product(factors), f);
        std::vector<ToricOpen> rhs_factors;
        for (std::size_t j = 0; j < g.length(); ++j) {
          const Composition fj = setcomp::restrict(f, g.lump(j));
          for (const auto& q : split_along(ps[j], fj, mutate)) rhs_factors.push_back(open_of(q));
        }
        const ToricOpen rhs = open_product(rhs_factors);
        if (!(lhs == rhs))
          fail("comultiplication: F=" + setcomp::to_string(f) + " G=" + setcomp::to_string(g) + " p=" + describe(ps) +
               " pullback has " + std::to_string(lhs.size()) + " orbits, product of U has " +
               std::to_string(rhs.size()));
      });
    }
  }
  return report;
}

}  // namespace permutokit::opens
