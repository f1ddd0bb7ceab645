#include "symcone/cone.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "symcone/linalg.hpp"

namespace symcone {

namespace {

using Bits = boost::dynamic_bitset<>;

Rational dot(const VectorXq& a, const VectorXq& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != 0 && b(i) != 0) s += a(i) * b(i);
  return s;
}

bool is_zero(const VectorXq& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool vec_equal(const VectorXq& a, const VectorXq& b) { return a.size() == b.size() && a == b; }

void require_dim(const VectorXq& v, int dim, const char* what) {
  if (v.size() != dim)
    throw DomainError(std::string(what) + ": expected a vector of length " + std::to_string(dim) +
                      ", got " + std::to_string(v.size()));
}

Eigen::Index rank_of_rows(const std::vector<VectorXq>& rows, const std::vector<int>& which, int dim) {
  if (which.empty()) return 0;
  MatrixXq m(static_cast<Eigen::Index>(which.size()), dim);
  for (std::size_t i = 0; i < which.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = rows[static_cast<std::size_t>(which[i])].transpose();
  return rank(m);
}

Eigen::Index rank_of(const std::vector<VectorXq>& vs, int dim) {
  if (vs.empty()) return 0;
  MatrixXq m(static_cast<Eigen::Index>(vs.size()), dim);
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  return rank(m);
}

/// Reduced row echelon basis of span(vs), rows rescaled to primitive form.
std::vector<VectorXq> canonical_basis(const std::vector<VectorXq>& vs, int dim) {
  if (vs.empty()) return {};
  MatrixXq m(static_cast<Eigen::Index>(vs.size()), dim);
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  const auto ech = rref(m);
  std::vector<VectorXq> out;
  for (std::size_t i = 0; i < ech.pivots.size(); ++i)
    out.push_back(primitive(ech.reduced.row(static_cast<Eigen::Index>(i)).transpose()));
  return out;
}

/// Orthogonal projection of v onto the complement of span(basis).
VectorXq project_off(const VectorXq& v, const std::vector<VectorXq>& basis, int dim) {
  if (basis.empty()) return v;
  const MatrixXq b = as_columns(basis, dim);
  const MatrixXq gram = b.transpose() * b;
  const VectorXq coef = solve(gram, VectorXq(b.transpose() * v));
  return v - b * coef;
}

void sort_unique(std::vector<VectorXq>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end(), vec_equal), vs.end());
}

}  // namespace

GeneratorSplit double_description(const std::vector<VectorXq>& inequalities, int dim) {
  std::vector<VectorXq> rows;
  for (const auto& a : inequalities) {
    require_dim(a, dim, "double_description");
    if (!is_zero(a)) rows.push_back(primitive(a));
  }
  sort_unique(rows);
  const std::size_t k_total = rows.size();

  struct Ray {
    VectorXq v;
    Bits tight;
  };
  std::vector<VectorXq> lin;
  for (int i = 0; i < dim; ++i) {
    VectorXq e = VectorXq::Zero(dim);
    e(i) = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < k_total; ++k) {
    const VectorXq& a = rows[k];
    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pick = i;
        break;
      }

    if (pick < lin.size()) {
      VectorXq l0 = lin[pick];
      Rational s = dot(a, l0);
      if (s < 0) {
        l0 = -l0;
        s = -s;
      }
      std::vector<VectorXq> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pick) continue;
        next_lin.push_back(primitive(VectorXq(lin[i] - (dot(a, lin[i]) / s) * l0)));
      }
      for (auto& r : rays) {
        r.v = primitive(VectorXq(r.v - (dot(a, r.v) / s) * l0));
        r.tight.set(k);
      }
      Bits t(k_total);
      for (std::size_t j = 0; j < k; ++j) t.set(j);
      rays.push_back({primitive(l0), std::move(t)});
      lin = std::move(next_lin);
      continue;
    }

    std::vector<Rational> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i].v);
    std::vector<Ray> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (val[i] == 0) {
        next.push_back(rays[i]);
        next.back().tight.set(k);
      } else {
        neg.push_back(i);
      }
    }
    const std::size_t need = static_cast<std::size_t>(std::max<long>(0, dim - static_cast<long>(lin.size()) - 2));
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (common.count() < need) continue;
        std::vector<int> which;
        for (auto j = common.find_first(); j != Bits::npos; j = common.find_next(j))
          which.push_back(static_cast<int>(j));
        const Eigen::Index face_dim = dim - rank_of_rows(rows, which, dim);
        if (face_dim != static_cast<Eigen::Index>(lin.size()) + 2) continue;
        VectorXq v = val[p] * rays[q].v - val[q] * rays[p].v;
        common.set(k);
        next.push_back({primitive(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  GeneratorSplit out;
  out.lineality = canonical_basis(lin, dim);
  for (const auto& r : rays) {
    VectorXq v = project_off(r.v, out.lineality, dim);
    if (!is_zero(v)) out.rays.push_back(primitive(v));
  }
  sort_unique(out.rays);
  return out;
}

struct RationalCone::Impl {
  int dim = 0;
  std::vector<VectorXq> gens;
  ConeLimits limits;

  mutable std::once_flag h_once;
  mutable HRep h;
  mutable std::once_flag m_once;
  mutable GeneratorSplit m;
};

RationalCone::RationalCone(int ambient_dim, const std::vector<VectorXq>& generators, ConeLimits limits) {
  if (ambient_dim < 0) throw DomainError("ambient dimension must be >= 0");
  if (ambient_dim > limits.max_ambient)
    throw ResourceError("ambient dimension " + std::to_string(ambient_dim) + " exceeds the bound " +
                        std::to_string(limits.max_ambient));
  auto impl = std::make_shared<Impl>();
  impl->dim = ambient_dim;
  impl->limits = limits;
  for (const auto& g : generators) {
    require_dim(g, ambient_dim, "RationalCone");
    if (is_zero(g)) continue;
    VectorXq p = primitive(g);
    if (std::none_of(impl->gens.begin(), impl->gens.end(), [&](const VectorXq& h) { return h == p; }))
      impl->gens.push_back(std::move(p));
  }
  impl_ = std::move(impl);
}

int RationalCone::ambient_dim() const { return impl_->dim; }
const std::vector<VectorXq>& RationalCone::generators() const { return impl_->gens; }
const ConeLimits& RationalCone::limits() const { return impl_->limits; }

const HRep& RationalCone::h_rep() const {
  std::call_once(impl_->h_once, [this] {
    GeneratorSplit s = double_description(impl_->gens, impl_->dim);
    impl_->h.inequalities = std::move(s.rays);
    impl_->h.equations = std::move(s.lineality);
  });
  return impl_->h;
}

const GeneratorSplit& RationalCone::minimal() const {
  std::call_once(impl_->m_once, [this] {
    const HRep& h = h_rep();
    std::vector<VectorXq> rows = h.inequalities;
    for (const auto& e : h.equations) {
      rows.push_back(e);
      rows.push_back(-e);
    }
    impl_->m = double_description(rows, impl_->dim);
  });
  return impl_->m;
}

int RationalCone::dim() const { return impl_->dim - static_cast<int>(h_rep().equations.size()); }

bool RationalCone::contains(const VectorXq& v) const {
  require_dim(v, impl_->dim, "contains");
  const HRep& h = h_rep();
  for (const auto& e : h.equations)
    if (dot(e, v) != 0) return false;
  for (const auto& a : h.inequalities)
    if (dot(a, v) < 0) return false;
  return true;
}

bool RationalCone::is_salient() const { return minimal().lineality.empty(); }

bool same_cone(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

RationalCone dual(const RationalCone& k) {
  const HRep& h = k.h_rep();
  std::vector<VectorXq> gens = h.inequalities;
  for (const auto& e : h.equations) gens.push_back(e);
  for (const auto& e : h.equations) gens.push_back(-e);
  return RationalCone(k.ambient_dim(), gens, k.limits());
}

LinealityInfo lineality(const RationalCone& k) {
  const auto& basis = k.minimal().lineality;
  return {static_cast<int>(basis.size()), basis};
}

std::vector<VectorXq> extremal_rays(const RationalCone& k) {
  const auto lin = lineality(k);
  if (lin.dim > 0) {
    std::string w;
    for (const auto& s : to_strings(lin.basis.front())) w += (w.empty() ? "" : ", ") + s;
    throw DomainError("cone is not salient; it contains the line through (" + w + ")");
  }
  const HRep& h = k.h_rep();
  const int n = k.ambient_dim();
  std::vector<VectorXq> out;
  for (const auto& g : k.generators()) {
    std::vector<VectorXq> tight = h.equations;
    for (const auto& a : h.inequalities)
      if (dot(a, g) == 0) tight.push_back(a);
    if (rank_of(tight, n) == n - 1) out.push_back(g);
  }
  return out;
}

namespace {

std::vector<VectorXq> pick(const std::vector<VectorXq>& vs, const std::vector<int>& idx) {
  std::vector<VectorXq> out;
  for (int i : idx) out.push_back(vs[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<VectorXq> dual_generators(const HRep& h) {
  std::vector<VectorXq> out = h.inequalities;
  for (const auto& e : h.equations) out.push_back(e);
  for (const auto& e : h.equations) out.push_back(-e);
  return out;
}

}  // namespace

bool is_perfect(const FaceDescriptor& f) {
  const RationalCone& k = f.cone;
  const auto face_gens = pick(k.generators(), f.generator_indices);
  std::vector<VectorXq> annihilators;
  for (const auto& l : dual_generators(k.h_rep()))
    if (std::all_of(face_gens.begin(), face_gens.end(), [&](const VectorXq& g) { return dot(l, g) == 0; }))
      annihilators.push_back(l);
  return f.dim + rank_of(annihilators, k.ambient_dim()) == k.ambient_dim();
}

FaceDescriptor face_of(const RationalCone& k, const std::vector<int>& generator_indices) {
  const auto& gens = k.generators();
  for (int i : generator_indices)
    if (i < 0 || i >= static_cast<int>(gens.size())) throw DomainError("face_of: generator index out of range");
  const HRep& h = k.h_rep();
  const int n = k.ambient_dim();

  std::vector<std::size_t> tight_facets;
  for (std::size_t f = 0; f < h.inequalities.size(); ++f)
    if (std::all_of(generator_indices.begin(), generator_indices.end(),
                    [&](int i) { return dot(h.inequalities[f], gens[static_cast<std::size_t>(i)]) == 0; }))
      tight_facets.push_back(f);

  FaceDescriptor face{k, {}, 0, std::nullopt, true, true};
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (std::all_of(tight_facets.begin(), tight_facets.end(),
                    [&](std::size_t f) { return dot(h.inequalities[f], gens[j]) == 0; }))
      face.generator_indices.push_back(static_cast<int>(j));
  face.dim = static_cast<int>(rank_of(pick(gens, face.generator_indices), n));
  VectorXq support = VectorXq::Zero(n);
  for (std::size_t f : tight_facets) support += h.inequalities[f];
  face.supporting_functional = primitive(support);
  face.is_perfect = is_perfect(face);
  return face;
}

std::vector<FaceDescriptor> faces(const RationalCone& k) {
  const auto& gens = k.generators();
  const HRep& h = k.h_rep();
  std::vector<int> all(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) all[i] = static_cast<int>(i);

  std::vector<FaceDescriptor> out;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{all};
  seen.insert(all);
  // faces are intersections of facets, so walking down one facet at a time
  // from K reaches all of them
  for (std::size_t head = 0; head < queue.size(); ++head) {
    FaceDescriptor f = face_of(k, queue[head]);
    for (const auto& a : h.inequalities) {
      std::vector<int> sub;
      for (int i : f.generator_indices)
        if (dot(a, gens[static_cast<std::size_t>(i)]) == 0) sub.push_back(i);
      if (sub.size() == f.generator_indices.size()) continue;
      FaceDescriptor g = face_of(k, sub);
      if (seen.insert(g.generator_indices).second) queue.push_back(g.generator_indices);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.generator_indices < b.generator_indices;
  });
  return out;
}

FaceDescriptor dual_face(const FaceDescriptor& f) {
  const RationalCone d = dual(f.cone);
  const auto face_gens = pick(f.cone.generators(), f.generator_indices);
  std::vector<int> idx;
  for (std::size_t j = 0; j < d.generators().size(); ++j)
    if (std::all_of(face_gens.begin(), face_gens.end(),
                    [&](const VectorXq& g) { return dot(d.generators()[j], g) == 0; }))
      idx.push_back(static_cast<int>(j));
  return face_of(d, idx);
}

int affine_dimension(const std::vector<VectorXq>& points) {
  if (points.empty()) return -1;
  std::vector<VectorXq> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank_of(diffs, static_cast<int>(points[0].size())));
}

PolytopePoints hull_vertices(const std::vector<VectorXq>& points, ConeLimits limits) {
  PolytopePoints out;
  out.points = points;
  if (points.empty()) return out;
  const int n = static_cast<int>(points.front().size());
  out.ambient_dim = n;
  if (n > limits.max_ambient)
    throw ResourceError("hull_vertices: ambient dimension " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(limits.max_ambient));
  for (const auto& p : points) require_dim(p, n, "hull_vertices");

  // distinct points, in order of first occurrence
  std::vector<VectorXq> uniq;
  std::vector<std::size_t> class_of(points.size());
  {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });
    std::vector<std::size_t> first(points.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const std::size_t i = order[pos];
      first[i] = (pos > 0 && points[order[pos - 1]] == points[i]) ? first[order[pos - 1]] : i;
    }
    std::vector<long> slot(points.size(), -1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (slot[first[i]] < 0) {
        slot[first[i]] = static_cast<long>(uniq.size());
        uniq.push_back(points[i]);
      }
      class_of[i] = static_cast<std::size_t>(slot[first[i]]);
    }
  }

  enum class State { unknown, vertex };
  std::vector<State> state(uniq.size(), State::unknown);

  // unique maximizers of a few fixed functionals are vertices
  std::vector<VectorXq> directions;
  for (int i = 0; i < n; ++i) {
    VectorXq e = VectorXq::Zero(n);
    e(i) = 1;
    directions.push_back(e);
    directions.push_back(-e);
  }
  for (int k = 1; k <= 3; ++k) {
    VectorXq c(n);
    Rational pw = 1;
    for (int i = 0; i < n; ++i) {
      c(i) = pw;
      pw *= k + 1;
    }
    directions.push_back(c);
    directions.push_back(-c);
  }
  for (const auto& c : directions) {
    std::optional<std::size_t> best;
    Rational best_val;
    bool unique = false;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      const Rational v = dot(c, uniq[i]);
      if (!best || v > best_val) {
        best = i;
        best_val = v;
        unique = true;
      } else if (v == best_val) {
        unique = false;
      }
    }
    if (best && unique) state[*best] = State::vertex;
  }

  auto lift = [](const VectorXq& v) {
    VectorXq h(v.size() + 1);
    h(0) = 1;
    h.tail(v.size()) = v;
    return h;
  };
  // the lexicographically largest maximizer of c is a vertex
  auto top_point = [&](const VectorXq& c) {
    std::size_t best = 0;
    Rational best_val = dot(c, lift(uniq[0]));
    for (std::size_t i = 1; i < uniq.size(); ++i) {
      const Rational v = dot(c, lift(uniq[i]));
      if (v > best_val || (v == best_val && lex_less(uniq[best], uniq[i]))) {
        best = i;
        best_val = v;
      }
    }
    return best;
  };

  state[top_point(VectorXq::Zero(n + 1))] = State::vertex;

  // grow the known vertices until every point satisfies the H-description
  // of their hull; a violated row exposes a new vertex
  while (true) {
    std::vector<VectorXq> lifted;
    for (std::size_t i = 0; i < uniq.size(); ++i)
      if (state[i] == State::vertex) lifted.push_back(lift(uniq[i]));
    const RationalCone hull(n + 1, lifted, ConeLimits{n + 1});
    const HRep& h = hull.h_rep();
    std::optional<VectorXq> violated;
    for (std::size_t i = 0; i < uniq.size() && !violated; ++i) {
      if (state[i] == State::vertex) continue;
      const VectorXq p = lift(uniq[i]);
      for (const auto& a : h.inequalities)
        if (dot(a, p) < 0) {
          violated = VectorXq(-a);
          break;
        }
      if (violated) break;
      for (const auto& e : h.equations) {
        const Rational v = dot(e, p);
        if (v != 0) {
          violated = v > 0 ? e : VectorXq(-e);
          break;
        }
      }
    }
    if (!violated) break;
    state[top_point(*violated)] = State::vertex;
  }

  for (std::size_t i = 0; i < points.size(); ++i)
    if (state[class_of[i]] == State::vertex) out.vertex_indices.push_back(static_cast<int>(i));
  return out;
}

std::string to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "fail";
    case ClauseStatus::not_applicable: return "not_applicable";
    case ClauseStatus::implied_by_theorem: return "implied_by_theorem";
    case ClauseStatus::skipped: return "skipped";
  }
  return "unknown";
}

bool Edges1Report::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const auto& kv) { return kv.second.status == ClauseStatus::pass; });
}

bool Edges1Report::ok() const {
  return hypotheses_hold() && std::none_of(conclusions.begin(), conclusions.end(), [](const auto& kv) {
           return kv.second.status == ClauseStatus::fail || kv.second.status == ClauseStatus::skipped;
         });
}

namespace {

ClauseResult passed() { return {ClauseStatus::pass, std::nullopt, ""}; }

ClauseResult failed(std::optional<int> witness, std::string detail) {
  return {ClauseStatus::fail, witness, std::move(detail)};
}

}  // namespace

Edges1Report edges1_verify(const std::vector<VectorXq>& y, const std::vector<int>& delta_indices,
                           const VectorXq& l, const VectorXq& phi, ConeLimits limits) {
  const int n = static_cast<int>(l.size());
  require_dim(phi, n, "edges1_verify");
  for (const auto& v : y) require_dim(v, n, "edges1_verify");
  std::vector<bool> is_delta(y.size(), false);
  for (int i : delta_indices) {
    if (i < 0 || i >= static_cast<int>(y.size())) throw DomainError("edges1_verify: delta index out of range");
    is_delta[static_cast<std::size_t>(i)] = true;
  }

  Edges1Report rep;
  const RationalCone k(n, y, limits);

  rep.hypotheses["i"] = passed();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_zero(y[i]) && dot(phi, y[i]) <= 0) {
      rep.hypotheses["i"] = failed(static_cast<int>(i), "phi is not positive on this element");
      break;
    }
  if (rep.hypotheses["i"].status == ClauseStatus::pass && !dual(k).contains(phi))
    rep.hypotheses["i"] = failed(std::nullopt, "phi is not in the dual cone");

  rep.hypotheses["ii"] = passed();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (dot(l, y[i]) < 0) {
      rep.hypotheses["ii"] = failed(static_cast<int>(i), "l is negative on this element");
      break;
    }

  rep.hypotheses["iii"] = passed();
  for (int i : delta_indices)
    if (dot(l, y[static_cast<std::size_t>(i)]) != 0) {
      rep.hypotheses["iii"] = failed(i, "l does not vanish on this delta");
      break;
    }

  rep.hypotheses["iv"] = passed();
  const VectorXq gap = l - phi;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_delta[i] && dot(gap, y[i]) < 0) {
      rep.hypotheses["iv"] = failed(static_cast<int>(i), "l - phi is negative on this non-delta element");
      break;
    }

  if (!rep.hypotheses_hold()) {
    for (const char* c : {"a", "b", "c", "d", "e"})
      rep.conclusions[c] = {ClauseStatus::skipped, std::nullopt, "hypotheses do not hold"};
    return rep;
  }

  rep.conclusions["a"] = {ClauseStatus::implied_by_theorem, std::nullopt,
                          "local finite generation is not decidable from finite data"};

  std::vector<VectorXq> deltas;
  for (int i : delta_indices) deltas.push_back(y[static_cast<std::size_t>(i)]);
  const RationalCone dcone(n, deltas, limits);

  rep.conclusions["b"] = passed();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (dot(l, y[i]) == 0 && !dcone.contains(y[i])) {
      rep.conclusions["b"] = failed(static_cast<int>(i), "element of {l = 0} outside cone(deltas)");
      break;
    }

  rep.conclusions["c"] = passed();
  for (const auto& ray : extremal_rays(k)) {
    if (dot(gap, ray) >= 0) continue;
    const bool spanned = std::any_of(deltas.begin(), deltas.end(),
                                     [&](const VectorXq& d) { return positively_parallel(d, ray); });
    if (!spanned) {
      std::optional<int> w;
      for (std::size_t i = 0; i < y.size() && !w; ++i)
        if (positively_parallel(y[i], ray)) w = static_cast<int>(i);
      rep.conclusions["c"] = failed(w, "extremal ray with l - phi < 0 is not a delta");
      break;
    }
  }

  rep.conclusions["d"] = passed();
  for (const auto& g : faces(dcone)) {
    std::vector<int> idx;
    const auto& kg = k.generators();
    for (int i : g.generator_indices) {
      const VectorXq& v = dcone.generators()[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < kg.size(); ++j)
        if (kg[j] == v) idx.push_back(static_cast<int>(j));
    }
    const FaceDescriptor fk = face_of(k, idx);
    const RationalCone fk_cone(n, pick(kg, fk.generator_indices), limits);
    const RationalCone g_cone(n, pick(dcone.generators(), g.generator_indices), limits);
    if (!same_cone(fk_cone, g_cone)) {
      rep.conclusions["d"] = failed(std::nullopt, "a face of cone(deltas) of dimension " + std::to_string(g.dim) +
                                                      " is not a face of K(Y)");
      break;
    }
    if (!fk.is_perfect) {
      rep.conclusions["d"] = failed(std::nullopt, "a face of cone(deltas) of dimension " + std::to_string(g.dim) +
                                                      " is not perfect in K(Y)");
      break;
    }
  }

  if (dcone.dim() == n - 1) {
    const RationalCone kd = dual(k);
    std::optional<int> at;
    for (std::size_t j = 0; j < kd.generators().size() && !at; ++j)
      if (positively_parallel(kd.generators()[j], l)) at = static_cast<int>(j);
    if (!at) {
      rep.conclusions["e"] = failed(std::nullopt, "l is not a generator of the dual cone");
    } else {
      const FaceDescriptor edge = face_of(kd, {*at});
      rep.conclusions["e"] = (edge.dim == 1 && edge.is_perfect)
                                 ? passed()
                                 : failed(std::nullopt, "cone(l) is not a perfect edge of the dual cone");
    }
  } else {
    rep.conclusions["e"] = {ClauseStatus::not_applicable, std::nullopt, "cone(deltas) does not have codimension one"};
  }
  return rep;
}

}  // namespace symcone
