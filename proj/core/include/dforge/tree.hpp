#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dforge/galois.hpp"
#include "dforge/ideal.hpp"
#include "dforge/isogeny.hpp"

namespace dforge {

using DistanceMatrix = std::vector<std::vector<unsigned>>;

/// A generator of the finite group acting on the orbit labels. The group is
/// the direct product of the cyclic groups generated by the listed
/// generators; elements are exponent vectors as for GaloisDatum.
struct OrbitGenerator {
  std::string name;
  std::vector<std::size_t> permutation;  // label i ↦ permutation[i]
  std::uint32_t order = 1;
};

/// A finite Galois orbit of modules with its per-prime δ_p metrics.
struct OrbitDatum {
  FqFieldPtr field;
  std::vector<std::string> labels;
  std::vector<OrbitGenerator> generators;
  std::map<PrimeIdealA, DistanceMatrix> metrics;
  /// Optional concrete data: modules parallel to labels and primitive
  /// isogenies keyed by (source label, target label).
  std::vector<DrinfeldModule> modules;
  std::map<std::pair<std::size_t, std::size_t>, Isogeny> isogenies;
};

std::vector<GroupElem> orbit_group_elements(const OrbitDatum& d);
GroupElem orbit_compose(const OrbitDatum& d, const GroupElem& a, const GroupElem& b);
std::string orbit_element_name(const OrbitDatum& d, const GroupElem& s);
/// Label permutation of a group element.
std::vector<std::size_t> orbit_permutation(const OrbitDatum& d, const GroupElem& s);

/// An unrooted graph by adjacency lists.
struct Tree {
  std::vector<std::vector<std::size_t>> adj;

  std::size_t size() const noexcept { return adj.size(); }
  std::size_t add_vertex() {
    adj.emplace_back();
    return adj.size() - 1;
  }
  void add_edge(std::size_t u, std::size_t v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
};

/// BFS distances from `from`; unreachable vertices get UINT_MAX.
std::vector<unsigned> tree_distances(const Tree& t, std::size_t from);
/// The vertex sequence of the unique path u → v.
std::vector<std::size_t> tree_path(const Tree& t, std::size_t u, std::size_t v);

/// The unit-edge subtree spanned by the labeled vertices. Several labels may
/// share a vertex (distance 0). Unlabeled vertices have degree >= 2.
struct SubTree {
  Tree tree;
  std::vector<std::size_t> label_vertex;
  /// Per generator, the induced permutation of the vertices.
  std::vector<std::vector<std::size_t>> action;
};

/// Realizes an integer tree metric by unit edges, inserting labels one by
/// one and checking every distance. Throws AsymmetricMatrix or NotTreeMetric.
SubTree realize_metric(const DistanceMatrix& D);

/// Checks symmetry, the tree-metric condition and G-invariance of every
/// metric and the group presentation; returns the primes whose metric is not
/// identically zero. Throws AsymmetricMatrix, NotTreeMetric, NotGInvariant
/// or InvalidArgument (malformed or intransitive presentation).
std::vector<PrimeIdealA> validate_orbit(const OrbitDatum& d);

/// realize_metric for D_p plus the induced group action. Vertex degrees
/// above #(A/p)+1 raise NotTreeMetric.
SubTree reconstruct_subtree(const OrbitDatum& d, const PrimeIdealA& p);

struct Center {
  bool is_edge = false;
  std::size_t u = 0, v = 0;  // u == v for a vertex, u < v for an edge

  friend bool operator==(const Center&, const Center&) = default;
};

/// Midpoint of a longest path between leaves. All longest paths are compared
/// (up to 1000 of them) and the center must be fixed by the action;
/// InternalInconsistency otherwise.
Center tree_center(const SubTree& t);

struct ClassificationResult {
  IdealA n;  // product of the primes with an edge center
  std::map<PrimeIdealA, SubTree> subtrees;
  std::map<PrimeIdealA, Center> centers;
  /// Local vertices of ψ and ψ'; they differ exactly at the primes dividing n.
  /// ψ_p is the center endpoint on the side of label 0.
  std::map<PrimeIdealA, std::size_t> psi, psi_prime;
  std::map<GroupElem, IdealA> m;  // product of the p | n whose center edge s swaps
};

ClassificationResult classify(const OrbitDatum& d);

struct MinimalityReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// For p | n no vertex of the subtree may be fixed by the whole group; for
/// the other primes the center vertex must be fixed.
MinimalityReport minimality_check(const OrbitDatum& d, const ClassificationResult& result);

/// Labels c0, c1, ... for the conjugates; the generator permutations come
/// from matching j-invariants of conjugated modules. Each unordered pair
/// needs an isogeny in at least one direction, and every provided isogeny
/// must be certified primitive. Throws MissingIsogeny, NotPrimitive,
/// OrbitNotClosed, or InvalidArgument for repeated j-invariants.
OrbitDatum orbit_from_isogenies(const std::vector<DrinfeldModule>& conjugates,
                                const std::map<std::pair<std::size_t, std::size_t>, Isogeny>& isogenies,
                                const GaloisDatum& galois);

struct MaterializedCenter {
  DrinfeldModule psi;
  Isogeny iso;  // ψ → ψ', cyclic of degree n
};

/// Builds ψ and ψ' from one base label by p-primary projection, prime-power
/// factorization and kernel sums of the provided isogenies. Throws
/// NotRealizable when some center endpoint is off every available path.
MaterializedCenter materialize_center(const OrbitDatum& d, const ClassificationResult& result);

}  // namespace dforge
