#pragma once

// Rational polyhedral cones: generator and inequality descriptions, dual
// cones, lineality, face lattices, perfect faces and face duality, convex
// hulls of finite point sets, and a verifier for the criterion that exhibits
// cone(delta_1, ..., delta_k) as a face of a cone cut out by a functional.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

struct ConeLimits {
  int max_ambient = 8;
};

/// Generators of {x in Q^dim : a.x >= 0 for each a}.
struct GeneratorSplit {
  std::vector<VectorXq> rays;       // primitive, orthogonal to the lineality space
  std::vector<VectorXq> lineality;  // reduced row echelon basis, primitive rows
};

/// Double description: generators of the cone cut out by the inequalities.
GeneratorSplit double_description(const std::vector<VectorXq>& inequalities, int dim);

struct HRep {
  std::vector<VectorXq> inequalities;  // facet normals, l(x) >= 0
  std::vector<VectorXq> equations;     // basis of the orthogonal complement of the span
};

class RationalCone {
 public:
  /// Generators are rescaled to primitive integer vectors; zero vectors and
  /// positive duplicates are dropped, first occurrence kept.
  RationalCone(int ambient_dim, const std::vector<VectorXq>& generators, ConeLimits limits = {});

  int ambient_dim() const;
  const std::vector<VectorXq>& generators() const;
  const ConeLimits& limits() const;

  /// Computed on first use; safe to call concurrently.
  const HRep& h_rep() const;
  /// Minimal generators: rays modulo lineality and a lineality basis.
  const GeneratorSplit& minimal() const;

  /// Dimension of the linear span.
  int dim() const;
  bool contains(const VectorXq& v) const;
  bool is_salient() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Equal as subsets of Q^N.
bool same_cone(const RationalCone& a, const RationalCone& b);

/// {l : l(x) >= 0 for all x in K}.
RationalCone dual(const RationalCone& k);

struct LinealityInfo {
  int dim = 0;
  std::vector<VectorXq> basis;
};

/// The largest linear subspace contained in K.
LinealityInfo lineality(const RationalCone& k);

/// Generators of K spanning extremal rays, in generator order. Throws
/// DomainError naming a lineality direction when K is not salient.
std::vector<VectorXq> extremal_rays(const RationalCone& k);

struct FaceDescriptor {
  RationalCone cone;
  std::vector<int> generator_indices;
  int dim = 0;
  std::optional<VectorXq> supporting_functional;
  bool is_exposed = true;
  bool is_perfect = true;
};

/// Smallest face of K containing the listed generators.
FaceDescriptor face_of(const RationalCone& k, const std::vector<int>& generator_indices);

/// Every face of K, ordered by dimension, then by generator indices.
std::vector<FaceDescriptor> faces(const RationalCone& k);

/// dim F + dim {l in K^dual : l = 0 on F} == N.
bool is_perfect(const FaceDescriptor& f);

/// {l in K^dual : l = 0 on F} as a face of dual(K).
FaceDescriptor dual_face(const FaceDescriptor& f);

struct PolytopePoints {
  int ambient_dim = 0;
  std::vector<VectorXq> points;
  std::vector<int> vertex_indices;
};

/// Marks the points that are not convex combinations of the other distinct
/// points. Repeated copies of a vertex are all reported.
PolytopePoints hull_vertices(const std::vector<VectorXq>& points, ConeLimits limits = {});

/// Dimension of the affine hull.
int affine_dimension(const std::vector<VectorXq>& points);

enum class ClauseStatus { pass, fail, not_applicable, implied_by_theorem, skipped };

std::string to_string(ClauseStatus s);

struct ClauseResult {
  ClauseStatus status = ClauseStatus::skipped;
  std::optional<int> witness;  // index into Y when a specific element fails
  std::string detail;
};

struct Edges1Report {
  std::map<std::string, ClauseResult> hypotheses;   // "i" .. "iv"
  std::map<std::string, ClauseResult> conclusions;  // "a" .. "e"

  bool hypotheses_hold() const;
  /// Hypotheses hold and no conclusion failed.
  bool ok() const;
};

/// Checks phi > 0 on K(Y) \ 0, l >= 0 on Y, l = 0 on the deltas and
/// l - phi >= 0 on the rest of Y; then that cone(deltas) = {l = 0} on K(Y),
/// that extremal rays with l - phi < 0 are deltas, that faces of
/// cone(deltas) are perfect faces of K(Y), and that l spans an edge of the
/// dual when cone(deltas) has codimension one.
Edges1Report edges1_verify(const std::vector<VectorXq>& y, const std::vector<int>& delta_indices,
                           const VectorXq& l, const VectorXq& phi, ConeLimits limits = {});

}  // namespace symcone
