#include <chrono>
#include <functional>
#include <iostream>

#include "checks.hpp"
#include "oracles.hpp"

using namespace checks;
using tsupport::N;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome o;
  for (const auto& p : parts) o.merge(p);
  return o;
}

Outcome o_bullet_laws() {
  const auto inst = axioms::o_bullet_instance();
  Outcome o;
  for (const auto& r : axioms::check_all(inst, N(3), 1000000, 1)) {
    o.cases += r.cases;
    if (!r.exhaustive) o.fail(r.law + " was not exhaustive at size 3");
    if (!r.passed) o.fail(r.law + ": " + r.counterexample);
  }
  o.merge(laws_pass(axioms::check_all(inst, N(4), 30000, 2), 10000));
  return o;
}

Outcome indexing() {
  Outcome o;
  for (int n = 0; n <= 4; ++n) {
    const auto r = opens::check_indexing(N(n));
    o.cases += r.cases;
    if (!r.passed) o.fail(r.counterexample);
  }
  return o;
}

Outcome section_counts() {
  Outcome o;
  auto brute = [](const boolfun::BooleanFunction& z) {
    std::size_t count = 0;
    const std::size_t n = z.ground().size();
    for (auto& h : enumerate_window(z.ground(), std::vector<std::int64_t>(n, 0), 2 * z.height(), z.height()))
      count += sections::is_section(z, h) ? 1 : 0;
    return count;
  };
  const auto z3 = tsupport::permutohedron(3);
  const auto z4 = tsupport::permutohedron(4);
  o.cases = 2;
  if (section_count(z3) != 7) o.fail("n=3 count is " + std::to_string(section_count(z3)));
  if (oracles::labeled_forests(3) != 7) o.fail("forest oracle disagrees at n=3");
  const std::size_t c4 = section_count(z4);
  if (c4 != brute(z4)) o.fail("n=4 count differs from brute force");
  if (c4 != oracles::labeled_forests(4))
    o.fail("n=4 count " + std::to_string(c4) + " differs from " + std::to_string(oracles::labeled_forests(4)) + " forests");
  return o;
}

Outcome point_laws() {
  const auto inst = axioms::points_instance();
  Outcome o;
  for (int n = 1; n <= 4; ++n) o.merge(laws_pass(axioms::check_all(inst, N(n), 500, 10 + n), 500));
  o.merge(point_duality(4, 500, 3));
  return o;
}

Outcome bf_laws() {
  const auto inst = axioms::bf_instance();
  Outcome o;
  for (int n = 0; n <= 3; ++n) o.merge(laws_pass(axioms::check_all(inst, N(n), 1000, 20 + n), 1000));
  o.merge(height_additivity(1000, 4));
  return o;
}

template <class E>
Outcome harness_witness(const axioms::BimonoidInstance<E>& good, const axioms::BimonoidInstance<E>& broken,
                        int size, std::size_t budget) {
  Outcome o;
  for (const auto& r : axioms::check_all(good, N(size), budget, 5)) {
    const bool lifted = r.law.rfind("beta-naturality", 0) == 0 || r.law.rfind("merge-independence", 0) == 0 ||
                        r.law == "general-bimonoid";
    if (!lifted) continue;
    o.cases += r.cases;
    if (!r.passed) o.fail(good.name + " " + r.law + ": " + r.counterexample);
  }
  bool caught = false;
  for (const auto& r : axioms::check_all(broken, N(size), budget, 5))
    caught = caught || (!r.passed && !r.counterexample.empty());
  if (!caught) o.fail("mutated " + broken.name + " produced no counterexample");
  return o;
}

Outcome joyal_witness() {
  return all_of({
      harness_witness(axioms::sigma_instance(), axioms::sigma_instance(true), 4, 20000),
      harness_witness(axioms::o_bullet_instance(), axioms::o_bullet_instance(true), 3, 20000),
      harness_witness(axioms::bf_instance(), axioms::bf_instance(true), 4, 1000),
      harness_witness(axioms::points_instance(), axioms::points_instance(true), 4, 500),
  });
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "O-bullet bimonoid laws", 60, o_bullet_laws},
      {2, "cone product and face", 60, [] { return all_of({cone_product(4, 3), cone_faces(4, 3)}); }},
      {3, "coroot dichotomy", 5, [] { return coroot_dichotomy(4); }},
      {4, "indexing by opens", 120, indexing},
      {5, "plate factorization", 120,
       [] { return all_of({plate_products(4, 3, 500, 1), plate_faces(4, 3, 500, 2)}); }},
      {6, "global section counts", 10, section_counts},
      {7, "section bialgebra", 30, [] { return section_products(4, 500, 7); }},
      {8, "point bimonoid laws and duality", 30, point_laws},
      {9, "BF bimonoid laws", 10, bf_laws},
      {10, "lifted laws and mutation detection", 60, joyal_witness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + " s");
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.cases
              << " cases, " << static_cast<int>(secs * 1000) << " ms)";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
