#include "symcone/json_io.hpp"

#include <string>

namespace symcone {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("JSON field '") + key + "' must be an integer");
  return v.get<int>();
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("rationals must be \"p/q\" strings or integers");
}

Json partitions_to_json(const std::vector<Partition>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

Json clauses_to_json(const std::map<std::string, ClauseResult>& clauses) {
  Json out = Json::object();
  for (const auto& [name, c] : clauses) out[name] = to_string(c.status);
  return out;
}

}  // namespace

Json to_json(const VectorXq& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

VectorXq vector_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a JSON array of rationals");
  VectorXq v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("a partition is a JSON array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError("partition entries must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const TautClass& c) {
  Json out;
  out["g"] = c.ctx().g;
  out["d"] = c.ctx().d;
  out["codim"] = c.codim();
  out["coeffs"] = to_json(c.coeffs());
  return out;
}

TautClass taut_class_from_json(const Json& j) {
  const RingContext ctx(int_field(j, "g"), int_field(j, "d"));
  return {ctx, int_field(j, "codim"), vector_from_json(field(j, "coeffs"))};
}

MonomialSum monomial_sum_from_json(const Json& j) {
  const RingContext ctx(int_field(j, "g"), int_field(j, "d"));
  MonomialSum m(ctx, int_field(j, "codim"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw DomainError("'terms' must be an array of [theta_exponent, coefficient]");
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw DomainError("each term must be [theta_exponent, coefficient]");
    m.add(t[0].get<int>(), rational_from_json(t[1]));
  }
  return m;
}

Json to_json(const DiagonalSpec& s) {
  Json out;
  out["g"] = s.ctx.g;
  out["d"] = s.ctx.d;
  out["parts"] = to_json(s.parts);
  return out;
}

DiagonalSpec diagonal_spec_from_json(const Json& j) {
  return {RingContext(int_field(j, "g"), int_field(j, "d")), partition_from_json(field(j, "parts"))};
}

Json to_json(const SymAffineForm& f) {
  Json a = Json::array();
  a.push_back(to_string(f.constant));
  for (const auto& q : f.higher) a.push_back(to_string(q));
  Json out;
  out["r"] = f.r;
  out["a"] = a;
  return out;
}

SymAffineForm sym_affine_form_from_json(const Json& j) {
  const int r = int_field(j, "r");
  const VectorXq a = vector_from_json(field(j, "a"));
  if (a.size() != r) throw DomainError("'a' must list a0, a2, ..., ar");
  std::vector<Rational> higher(a.begin() + 1, a.end());
  return {r, a(0), std::move(higher)};
}

Json to_json(const RationalCone& k) {
  Json gens = Json::array();
  for (const auto& g : k.generators()) gens.push_back(to_json(g));
  Json out;
  out["dim"] = k.ambient_dim();
  out["generators"] = gens;
  return out;
}

RationalCone cone_from_json(const Json& j, ConeLimits limits) {
  const int dim = int_field(j, "dim");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw DomainError("'generators' must be an array");
  std::vector<VectorXq> vs;
  for (const auto& g : gens) vs.push_back(vector_from_json(g));
  return RationalCone(dim, vs, limits);
}

Json to_json(const FaceDescriptor& f) {
  Json out;
  out["generators"] = f.generator_indices;
  out["dim"] = f.dim;
  out["supporting_functional"] = f.supporting_functional ? to_json(*f.supporting_functional) : Json(nullptr);
  out["is_exposed"] = f.is_exposed;
  out["is_perfect"] = f.is_perfect;
  return out;
}

Json to_json(const Edges1Report& r) {
  Json witnesses = Json::object();
  auto add_witnesses = [&](const std::map<std::string, ClauseResult>& clauses) {
    for (const auto& [name, c] : clauses) {
      if (c.status != ClauseStatus::fail && c.detail.empty()) continue;
      Json w;
      w["index"] = c.witness ? Json(*c.witness) : Json(nullptr);
      w["detail"] = c.detail;
      witnesses[name] = w;
    }
  };
  add_witnesses(r.hypotheses);
  add_witnesses(r.conclusions);
  Json out;
  out["hypotheses"] = clauses_to_json(r.hypotheses);
  out["conclusions"] = clauses_to_json(r.conclusions);
  out["witnesses"] = witnesses;
  out["ok"] = r.ok();
  return out;
}

Json to_json(const DiagConeReport& r) {
  Json out;
  out["g"] = r.ctx.g;
  out["d"] = r.ctx.d;
  out["n"] = r.n;
  out["r"] = r.r;
  out["s"] = r.s;
  out["brute_extremal"] = partitions_to_json(r.brute_extremal);
  out["predicted_extremal"] = partitions_to_json(r.predicted_extremal);
  out["match"] = r.match;
  out["eta_supported"] = r.eta_supported;
  out["dim_ok"] = r.dim_ok;
  out["basis_check"] = r.basis_check ? Json(*r.basis_check) : Json(nullptr);
  return out;
}

Json to_json(const PolytopeReport& r) {
  Json verts = Json::array();
  for (int i : r.polytope.vertex_indices) {
    Json v;
    v["partition"] = to_json(r.partitions[static_cast<std::size_t>(i)]);
    v["point"] = to_json(r.polytope.points[static_cast<std::size_t>(i)]);
    verts.push_back(v);
  }
  Json out;
  out["t"] = r.t;
  out["s"] = r.s;
  out["r"] = r.r;
  out["points"] = static_cast<int>(r.partitions.size());
  out["vertices"] = verts;
  out["brute_vertices"] = partitions_to_json(r.vertices);
  out["predicted_vertices"] = partitions_to_json(r.predicted);
  out["affine_dim"] = r.affine_dim;
  out["match"] = r.match;
  return out;
}

}  // namespace symcone
