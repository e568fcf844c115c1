#include "permutokit/axioms.hpp"

namespace permutokit::axioms {

std::vector<std::vector<Mask>> decompositions(std::size_t n, std::size_t k) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> blocks(k, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < k; ++b) {
      blocks[b] |= Mask{1} << i;
      self(self, i + 1);
      blocks[b] &= ~(Mask{1} << i);
    }
  };
  rec(rec, 0);
  return out;
}

GroundSet letters(std::size_t n) {
  require(n <= 26, "letters: at most 26 labels");
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(std::string(1, static_cast<char>('a' + i)));
  return GroundSet(std::move(labels));
}

std::vector<std::size_t> blocks_of(const Composition& f, const Composition& g) {
  require(setcomp::refines(g, f), "lifted operation: G must be <= F");
  std::vector<std::size_t> out;
  std::size_t j = 0;
  for (Mask lump : f.lumps()) {
    while (!is_subset(lump, g.lump(j))) ++j;
    out.push_back(j);
  }
  return out;
}

Perm lump_matching(const Composition& fg, const Composition& gf) {
  require(fg.length() == gf.length(), "lump matching: different lump counts");
  std::vector<std::size_t> image(fg.length());
  for (std::size_t a = 0; a < fg.length(); ++a) {
    std::size_t b = 0;
    while (b < gf.length() && gf.lump(b) != fg.lump(a)) ++b;
    require(b < gf.length(), "lump matching: lumps differ");
    image[a] = b;
  }
  return Perm(std::move(image));
}

std::string describe(const GroundSet& ground, const Skeleton& s) {
  std::string out = "I=" + to_string(ground);
  if (!s.blocks.empty()) {
    out += " blocks=(";
    for (std::size_t i = 0; i < s.blocks.size(); ++i) out += (i ? ", " : "") + to_string(ground.subset(s.blocks[i]));
    out += ")";
  }
  if (s.f.length() > 0) out += " F=" + setcomp::to_string(s.f);
  if (s.g.length() > 0) out += " G=" + setcomp::to_string(s.g);
  if (s.beta.degree() > 0) {
    out += " beta=[";
    const auto line = s.beta.one_line();
    for (std::size_t i = 0; i < line.size(); ++i) out += (i ? "," : "") + std::to_string(line[i]);
    out += "]";
  }
  if (!s.sigma.source().empty()) {
    out += " sigma={";
    for (std::size_t j = 0; j < s.sigma.source().size(); ++j)
      out += (j ? "," : "") + to_string(s.sigma.source()[j]) + "->" + to_string(s.sigma(s.sigma.source()[j]));
    out += "}";
  }
  return out;
}

std::vector<Skeleton> split_skeletons(const GroundSet& ground, std::size_t blocks, bool whole_slot) {
  std::vector<Skeleton> out;
  for (auto& d : decompositions(ground.size(), blocks)) {
    Skeleton s;
    s.blocks = d;
    if (whole_slot)
      s.slots = {ground};
    else
      for (Mask b : d) s.slots.push_back(ground.subset(b));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Skeleton> relabel_skeletons(const GroundSet& ground, bool whole_slot) {
  std::vector<Skeleton> out;
  const GroundSet source = letters(ground.size());
  for (const auto& perm : setcomp::all_perms(ground.size())) {
    const Bijection sigma(source, ground, perm.image());
    for (auto& s : split_skeletons(ground, 2, whole_slot)) {
      s.sigma = sigma;
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Skeleton> bimonoid_skeletons(const GroundSet& ground) {
  std::vector<Skeleton> out;
  for (auto& d : decompositions(ground.size(), 4)) {
    Skeleton s;
    s.blocks = d;
    s.slots = {ground.subset(d[0] | d[1]), ground.subset(d[2] | d[3])};
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Skeleton> refinement_skeletons(const GroundSet& ground, bool with_beta, bool mul_slots) {
  std::vector<Skeleton> out;
  for (const auto& f : setcomp::all_compositions(ground))
    for (const auto& g : setcomp::coarsenings(f)) {
      std::vector<Perm> betas{Perm::identity(g.length())};
      if (with_beta) betas = setcomp::all_perms(g.length());
      for (const auto& beta : betas) {
        Skeleton s;
        s.f = f;
        s.g = g;
        if (with_beta) s.beta = beta;
        const Composition& sh = mul_slots ? f : g;
        for (Mask lump : sh.lumps()) s.slots.push_back(ground.subset(lump));
        out.push_back(std::move(s));
      }
    }
  return out;
}

std::vector<Skeleton> pair_skeletons(const GroundSet& ground) {
  std::vector<Skeleton> out;
  const auto all = setcomp::all_compositions(ground);
  for (const auto& f : all)
    for (const auto& g : all) {
      Skeleton s;
      s.f = f;
      s.g = g;
      for (Mask lump : f.lumps()) s.slots.push_back(ground.subset(lump));
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace permutokit::axioms
