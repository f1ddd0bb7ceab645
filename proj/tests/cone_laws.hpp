#pragma once

// The structural laws every finitely generated cone has to satisfy, checked
// against the Caratheodory oracle. Returns an empty string when all hold.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symcone/cone.hpp"
#include "symcone/linalg.hpp"

namespace laws {

using namespace symcone;

inline std::vector<std::vector<std::string>> as_set(std::vector<VectorXq> vs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& v : vs) out.push_back(to_strings(v));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VectorXq> all_generators(const GeneratorSplit& s) {
  std::vector<VectorXq> out = s.rays;
  for (const auto& l : s.lineality) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

inline VectorXq random_point_in(std::mt19937_64& rng, const std::vector<VectorXq>& gens, int dim) {
  std::uniform_int_distribution<int> w(0, 3);
  VectorXq p = VectorXq::Zero(dim);
  for (const auto& g : gens) p += g * Rational(w(rng));
  return p;
}

inline std::string check(const std::vector<VectorXq>& input, int dim, std::mt19937_64& rng) {
  const RationalCone k(dim, input);
  const RationalCone kd = dual(k);
  const auto& gens = k.generators();

  // double duality, as canonical minimal generator sets
  const RationalCone kdd = dual(kd);
  if (!same_cone(kdd, k)) return "double dual differs";
  if (as_set(kdd.minimal().rays) != as_set(k.minimal().rays) ||
      as_set(kdd.minimal().lineality) != as_set(k.minimal().lineality))
    return "double dual has different canonical generators";

  // codim K = ldim(dual), ldim K = codim(dual)
  const int span = oracle::rank_of(gens, dim);
  if (k.dim() != span) return "span dimension";
  if (dim - span != lineality(kd).dim) return "codim K != ldim dual";
  if (lineality(k).dim != dim - kd.dim()) return "ldim K != codim dual";

  // minimal generators and facet half-spaces both give K back
  if (!same_cone(RationalCone(dim, all_generators(k.minimal())), k)) return "minimal generators round trip";
  for (int trial = 0; trial < 12; ++trial) {
    const VectorXq p = oracle::random_vector(rng, dim, 4);
    if (k.contains(p) != oracle::in_cone(gens, p)) return "half-space membership disagrees with oracle";
  }
  if (k.is_salient()) {
    std::vector<std::vector<std::string>> oracle_rays;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<VectorXq> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i && !positively_parallel(gens[j], gens[i])) others.push_back(gens[j]);
      if (!oracle::in_cone(others, gens[i])) oracle_rays.push_back(to_strings(gens[i]));
    }
    std::sort(oracle_rays.begin(), oracle_rays.end());
    if (as_set(extremal_rays(k)) != oracle_rays) return "extremal rays disagree with oracle";
  }

  // relative interiors of the faces partition K
  const auto fs = faces(k);
  auto in_face = [&](const FaceDescriptor& f, const VectorXq& p) {
    std::vector<VectorXq> fg;
    for (int i : f.generator_indices) fg.push_back(gens[static_cast<std::size_t>(i)]);
    return oracle::in_cone(fg, p);
  };
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<VectorXq> probes = gens;
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<VectorXq> some;
    for (const auto& g : gens)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) some.push_back(g);
    probes.push_back(random_point_in(rng, some, dim));
  }
  probes.push_back(VectorXq::Zero(dim));
  for (const auto& p : probes) {
    int owners = 0;
    for (const auto& f : fs) {
      if (!in_face(f, p)) continue;
      bool in_smaller = false;
      for (const auto& g : fs)
        if (subset(g.generator_indices, f.generator_indices) && in_face(g, p)) in_smaller = true;
      if (!in_smaller) ++owners;
    }
    if (owners != 1) return "a point lies in " + std::to_string(owners) + " relative interiors";
  }

  // every face is perfect and face duality is a dimension-reversing bijection
  const auto dual_faces = faces(kd);
  std::set<std::vector<int>> hit;
  for (const auto& f : fs) {
    if (!is_perfect(f) || !f.is_perfect) return "face not perfect";
    const FaceDescriptor fh = dual_face(f);
    if (f.dim + fh.dim != dim) return "face duality does not reverse dimension";
    if (!hit.insert(fh.generator_indices).second) return "face duality is not injective";
    const FaceDescriptor back = dual_face(fh);
    std::vector<VectorXq> fg, bg;
    for (int i : f.generator_indices) fg.push_back(gens[static_cast<std::size_t>(i)]);
    for (int i : back.generator_indices) bg.push_back(back.cone.generators()[static_cast<std::size_t>(i)]);
    if (!same_cone(RationalCone(dim, fg), RationalCone(dim, bg))) return "dual of dual face differs";
  }
  if (hit.size() != dual_faces.size()) return "face duality is not onto";
  for (const auto& f : dual_faces)
    if (!hit.count(f.generator_indices)) return "face duality misses a dual face";
  return "";
}

}  // namespace laws
