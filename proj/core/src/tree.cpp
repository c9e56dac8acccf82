#include "dforge/tree.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <optional>
#include <sstream>

#include "dforge/errors.hpp"

namespace dforge {

namespace {

constexpr std::size_t kDiameterPathCap = 1000;

std::vector<std::size_t> compose_perm(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  // a after b
  std::vector<std::size_t> r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = i;
  return r;
}

std::vector<std::size_t> power_perm(const std::vector<std::size_t>& a, std::uint32_t e) {
  auto r = identity_perm(a.size());
  for (std::uint32_t k = 0; k < e; ++k) r = compose_perm(a, r);
  return r;
}

std::vector<std::size_t> element_action(const std::vector<std::vector<std::size_t>>& gens, std::size_t n,
                                        const GroupElem& s) {
  auto r = identity_perm(n);
  for (std::size_t i = 0; i < gens.size(); ++i) r = compose_perm(power_perm(gens[i], s[i]), r);
  return r;
}

void check_presentation(const OrbitDatum& d) {
  const std::size_t n = d.labels.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "orbit has no labels");
  if (!d.field) fail(ErrorCode::InvalidArgument, "orbit has no coefficient field");
  for (const auto& g : d.generators) {
    if (g.order == 0) fail(ErrorCode::InvalidArgument, "generator " + g.name + " has order 0");
    if (g.permutation.size() != n) fail(ErrorCode::InvalidArgument, "generator " + g.name + " has the wrong length");
    std::vector<bool> seen(n, false);
    for (auto i : g.permutation) {
      if (i >= n || seen[i]) fail(ErrorCode::InvalidArgument, "generator " + g.name + " is not a permutation");
      seen[i] = true;
    }
    if (power_perm(g.permutation, g.order) != identity_perm(n))
      fail(ErrorCode::InvalidArgument, "generator " + g.name + " does not have its declared order");
  }
  for (const auto& a : d.generators)
    for (const auto& b : d.generators)
      if (compose_perm(a.permutation, b.permutation) != compose_perm(b.permutation, a.permutation))
        fail(ErrorCode::InvalidArgument, "generators " + a.name + " and " + b.name + " do not commute");
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (const auto& g : d.generators)
      if (!reached[g.permutation[i]]) reached[g.permutation[i]] = true, stack.push_back(g.permutation[i]);
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    fail(ErrorCode::InvalidArgument, "the group does not act transitively on the labels");
}

void check_matrix(const DistanceMatrix& D, std::size_t n) {
  if (D.size() != n) fail(ErrorCode::AsymmetricMatrix, "metric is not square of the label count");
  for (const auto& row : D)
    if (row.size() != n) fail(ErrorCode::AsymmetricMatrix, "metric is not square of the label count");
  for (std::size_t i = 0; i < n; ++i) {
    if (D[i][i] != 0) fail(ErrorCode::NotTreeMetric, "nonzero diagonal entry");
    for (std::size_t j = 0; j < i; ++j)
      if (D[i][j] != D[j][i]) fail(ErrorCode::AsymmetricMatrix, "metric is not symmetric");
  }
}

bool is_zero_metric(const DistanceMatrix& D) {
  for (const auto& row : D)
    for (auto x : row)
      if (x) return false;
  return true;
}

Center midpoint(const Tree& t, std::size_t a, std::size_t b) {
  const auto path = tree_path(t, a, b);
  const std::size_t len = path.size() - 1;
  if (len % 2 == 0) return {false, path[len / 2], path[len / 2]};
  const std::size_t x = path[len / 2], y = path[len / 2 + 1];
  return {true, std::min(x, y), std::max(x, y)};
}

bool fixes(const std::vector<std::size_t>& perm, const Center& c) {
  if (!c.is_edge) return perm[c.u] == c.u;
  return (perm[c.u] == c.u && perm[c.v] == c.v) || (perm[c.u] == c.v && perm[c.v] == c.u);
}

}  // namespace

std::vector<GroupElem> orbit_group_elements(const OrbitDatum& d) {
  std::vector<GroupElem> out{GroupElem(d.generators.size(), 0)};
  for (std::size_t i = 0; i < d.generators.size(); ++i) {
    std::vector<GroupElem> next;
    for (std::uint32_t k = 0; k < d.generators[i].order; ++k)
      for (auto e : out) {
        e[i] = k;
        next.push_back(e);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupElem orbit_compose(const OrbitDatum& d, const GroupElem& a, const GroupElem& b) {
  GroupElem r(d.generators.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % d.generators[i].order;
  return r;
}

std::string orbit_element_name(const OrbitDatum& d, const GroupElem& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d.generators.size(); ++i) {
    if (s[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << d.generators[i].name;
    if (s[i] > 1) os << '^' << s[i];
  }
  return first ? "id" : os.str();
}

std::vector<std::size_t> orbit_permutation(const OrbitDatum& d, const GroupElem& s) {
  std::vector<std::vector<std::size_t>> gens;
  for (const auto& g : d.generators) gens.push_back(g.permutation);
  return element_action(gens, d.labels.size(), s);
}

std::vector<unsigned> tree_distances(const Tree& t, std::size_t from) {
  std::vector<unsigned> dist(t.size(), UINT_MAX);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (auto w : t.adj[u])
      if (dist[w] == UINT_MAX) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<std::size_t> tree_path(const Tree& t, std::size_t u, std::size_t v) {
  const auto dist = tree_distances(t, v);
  if (dist[u] == UINT_MAX) fail(ErrorCode::InvalidArgument, "vertices are not connected");
  std::vector<std::size_t> path{u};
  while (path.back() != v) {
    const std::size_t x = path.back();
    for (auto w : t.adj[x])
      if (dist[w] + 1 == dist[x]) {
        path.push_back(w);
        break;
      }
  }
  return path;
}

SubTree realize_metric(const DistanceMatrix& D) {
  const std::size_t n = D.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "metric on no labels");
  check_matrix(D, n);
  SubTree out;
  out.tree.add_vertex();
  out.label_vertex.assign(n, 0);
  auto violation = [](std::size_t x) {
    fail(ErrorCode::NotTreeMetric, "label " + std::to_string(x) + " does not embed in a tree");
  };
  for (std::size_t x = 1; x < n; ++x) {
    const std::size_t a = 0;
    std::optional<std::size_t> twin;
    for (std::size_t y = 0; y < x && !twin; ++y)
      if (D[x][y] == 0) twin = y;
    if (twin) {
      out.label_vertex[x] = out.label_vertex[*twin];
    } else {
      // branch point of x off the path a → b sits at Gromov product (x|b)_a
      long best = 0;
      std::size_t best_b = a;
      for (std::size_t b = 0; b < x; ++b) {
        const long num = long(D[x][a]) + long(D[a][b]) - long(D[x][b]);
        if (num < 0 || num % 2) violation(x);
        const long t = num / 2;
        if (t > long(D[a][b]) || t > long(D[x][a])) violation(x);
        if (t > best) best = t, best_b = b;
      }
      const auto path = tree_path(out.tree, out.label_vertex[a], out.label_vertex[best_b]);
      std::size_t at = path[best];
      for (long h = long(D[x][a]) - best; h > 0; --h) {
        const std::size_t w = out.tree.add_vertex();
        out.tree.add_edge(at, w);
        at = w;
      }
      out.label_vertex[x] = at;
    }
    const auto dist = tree_distances(out.tree, out.label_vertex[x]);
    for (std::size_t y = 0; y < x; ++y)
      if (dist[out.label_vertex[y]] != D[x][y]) violation(x);
  }
  return out;
}

std::vector<PrimeIdealA> validate_orbit(const OrbitDatum& d) {
  check_presentation(d);
  const std::size_t n = d.labels.size();
  std::vector<PrimeIdealA> support;
  for (const auto& [p, D] : d.metrics) {
    if (!p.is_prime()) fail(ErrorCode::InvalidArgument, "metric keyed by a non-prime ideal");
    check_matrix(D, n);
    for (const auto& g : d.generators)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (D[g.permutation[i]][g.permutation[j]] != D[i][j])
            fail(ErrorCode::NotGInvariant, "metric is not invariant under " + g.name);
    realize_metric(D);
    if (!is_zero_metric(D)) support.push_back(p);
  }
  return support;
}

SubTree reconstruct_subtree(const OrbitDatum& d, const PrimeIdealA& p) {
  const auto it = d.metrics.find(p);
  if (it == d.metrics.end()) fail(ErrorCode::InvalidArgument, "no metric for this prime");
  SubTree out = realize_metric(it->second);
  const Tree& t = out.tree;
  const std::size_t n = d.labels.size();

  std::uint64_t residue = 1;  // #(A/p), capped once it exceeds any degree
  for (int i = 0; i < p.norm_degree() && residue <= t.size(); ++i) residue *= d.field->order();
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.adj[v].size() > residue + 1)
      fail(ErrorCode::NotTreeMetric, "vertex degree exceeds #(A/p)+1");

  // vertices of a spanned subtree are determined by their distances to the labels
  std::vector<std::vector<unsigned>> dist_from_label;
  for (std::size_t l = 0; l < n; ++l) dist_from_label.push_back(tree_distances(t, out.label_vertex[l]));
  std::map<std::vector<unsigned>, std::size_t> by_profile;
  std::vector<std::vector<unsigned>> profile(t.size(), std::vector<unsigned>(n));
  for (std::size_t v = 0; v < t.size(); ++v) {
    for (std::size_t l = 0; l < n; ++l) profile[v][l] = dist_from_label[l][v];
    if (!by_profile.emplace(profile[v], v).second)
      fail(ErrorCode::InternalInconsistency, "two vertices with the same label distances");
  }
  for (const auto& g : d.generators) {
    std::vector<std::size_t> perm(t.size());
    std::vector<unsigned> key(n);
    for (std::size_t v = 0; v < t.size(); ++v) {
      for (std::size_t l = 0; l < n; ++l) key[g.permutation[l]] = profile[v][l];
      const auto hit = by_profile.find(key);
      if (hit == by_profile.end()) fail(ErrorCode::NotGInvariant, g.name + " does not act by a tree isometry");
      perm[v] = hit->second;
    }
    for (std::size_t v = 0; v < t.size(); ++v)
      for (auto w : t.adj[v])
        if (std::find(t.adj[perm[v]].begin(), t.adj[perm[v]].end(), perm[w]) == t.adj[perm[v]].end())
          fail(ErrorCode::NotGInvariant, g.name + " does not preserve adjacency");
    out.action.push_back(std::move(perm));
  }
  return out;
}

Center tree_center(const SubTree& st) {
  const Tree& t = st.tree;
  if (t.size() == 1) return {false, 0, 0};
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.adj[v].size() == 1) leaves.push_back(v);
  std::vector<std::vector<unsigned>> dist;
  unsigned diameter = 0;
  for (auto u : leaves) {
    dist.push_back(tree_distances(t, u));
    for (auto w : leaves) diameter = std::max(diameter, dist.back()[w]);
  }
  std::optional<Center> center;
  std::size_t examined = 0;
  for (std::size_t i = 0; i < leaves.size() && examined < kDiameterPathCap; ++i)
    for (std::size_t j = i + 1; j < leaves.size() && examined < kDiameterPathCap; ++j) {
      if (dist[i][leaves[j]] != diameter) continue;
      ++examined;
      const Center c = midpoint(t, leaves[i], leaves[j]);
      if (!center) center = c;
      else if (!(*center == c)) fail(ErrorCode::InternalInconsistency, "longest paths have different midpoints");
    }
  for (const auto& perm : st.action)
    if (!fixes(perm, *center)) fail(ErrorCode::InternalInconsistency, "center is not fixed by the group");
  return *center;
}

ClassificationResult classify(const OrbitDatum& d) {
  const auto support = validate_orbit(d);
  ClassificationResult out{IdealA::unit(*d.field), {}, {}, {}, {}, {}};
  for (const auto& p : support) {
    SubTree st = reconstruct_subtree(d, p);
    const Center c = tree_center(st);
    if (c.is_edge) {
      out.n = out.n * p;
      const auto dist = tree_distances(st.tree, st.label_vertex[0]);
      const bool u_first = dist[c.u] < dist[c.v];
      out.psi.emplace(p, u_first ? c.u : c.v);
      out.psi_prime.emplace(p, u_first ? c.v : c.u);
    } else {
      out.psi.emplace(p, c.u);
      out.psi_prime.emplace(p, c.u);
    }
    out.centers.emplace(p, c);
    out.subtrees.emplace(p, std::move(st));
  }
  for (const auto& s : orbit_group_elements(d)) {
    IdealA m = IdealA::unit(*d.field);
    for (const auto& [p, c] : out.centers) {
      if (!c.is_edge) continue;
      const SubTree& st = out.subtrees.at(p);
      if (element_action(st.action, st.tree.size(), s)[c.u] == c.v) m = m * p;
    }
    out.m.emplace(s, m);
  }
  return out;
}

MinimalityReport minimality_check(const OrbitDatum& d, const ClassificationResult& result) {
  MinimalityReport report;
  auto violation = [&](const std::string& what) {
    report.ok = false;
    report.violations.push_back(std::string(to_string(ErrorCode::InternalInconsistency)) + ": " + what);
  };
  for (const auto& [p, st] : result.subtrees) {
    const Center& c = result.centers.at(p);
    std::ostringstream name;
    name << p;
    for (std::size_t v = 0; v < st.tree.size(); ++v) {
      bool fixed = true;
      for (const auto& perm : st.action) fixed = fixed && perm[v] == v;
      if (fixed && divides(p, result.n))
        violation("vertex " + std::to_string(v) + " of the " + name.str() + "-tree is fixed by the group");
    }
    if (!c.is_edge)
      for (const auto& perm : st.action)
        if (perm[c.u] != c.u) violation("center vertex of the " + name.str() + "-tree is moved");
  }
  (void)d;
  return report;
}

OrbitDatum orbit_from_isogenies(const std::vector<DrinfeldModule>& conjugates,
                                const std::map<std::pair<std::size_t, std::size_t>, Isogeny>& isogenies,
                                const GaloisDatum& galois) {
  const std::size_t n = conjugates.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "no conjugates");
  OrbitDatum d;
  d.field = galois.field().fq_ptr();
  d.modules = conjugates;
  std::vector<ExtElem> js;
  for (std::size_t i = 0; i < n; ++i) {
    d.labels.push_back("c" + std::to_string(i));
    js.push_back(conjugates[i].j_invariant());
    for (std::size_t k = 0; k < i; ++k)
      if (js[k] == js[i]) fail(ErrorCode::InvalidArgument, "two conjugates share a j-invariant");
  }
  for (std::size_t g = 0; g < galois.num_generators(); ++g) {
    OrbitGenerator gen{galois.generators()[g].name, {}, galois.generators()[g].order};
    for (std::size_t i = 0; i < n; ++i) {
      const ExtElem j = conjugate_module(galois, galois.generator(g), conjugates[i]).j_invariant();
      const auto hit = std::find(js.begin(), js.end(), j);
      if (hit == js.end())
        fail(ErrorCode::OrbitNotClosed, "conjugate of " + d.labels[i] + " by " + gen.name + " is not in the orbit");
      gen.permutation.push_back(std::size_t(hit - js.begin()));
    }
    d.generators.push_back(std::move(gen));
  }

  std::map<std::pair<std::size_t, std::size_t>, IdealA> degree;
  for (const auto& [key, iso] : isogenies) {
    if (key.first >= n || key.second >= n) fail(ErrorCode::InvalidArgument, "isogeny label out of range");
    if (!(iso.source() == conjugates[key.first]) || !(iso.target() == conjugates[key.second]))
      fail(ErrorCode::ChainMismatch, "isogeny does not join the labelled conjugates");
    if (!is_primitive(iso)) fail(ErrorCode::NotPrimitive, "orbit isogenies must be primitive");
    const IdealA deg = iso.degree().degree;
    degree.insert_or_assign(std::minmax(key.first, key.second), deg);
  }
  std::vector<PrimeIdealA> primes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const auto hit = degree.find({i, k});
      if (hit == degree.end())
        fail(ErrorCode::MissingIsogeny, "no isogeny between " + d.labels[i] + " and " + d.labels[k]);
      for (const auto& p : hit->second.prime_factors())
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
  for (const auto& p : primes) {
    DistanceMatrix D(n, std::vector<unsigned>(n, 0));
    for (const auto& [key, deg] : degree) D[key.first][key.second] = D[key.second][key.first] = deg.valuation(p);
    d.metrics.emplace(p, std::move(D));
  }
  d.isogenies = isogenies;
  return d;
}

namespace {

// A primitive isogeny from label b to label y, dualizing a provided y → b
// isogeny when needed; the dual borrows a certificate of b from any provided
// isogeny out of b.
std::optional<Isogeny> isogeny_between(const OrbitDatum& d, std::size_t b, std::size_t y) {
  if (const auto it = d.isogenies.find({b, y}); it != d.isogenies.end()) return it->second;
  const auto it = d.isogenies.find({y, b});
  if (it == d.isogenies.end()) return std::nullopt;
  Isogeny out = dual(it->second);
  for (const auto& [key, iso] : d.isogenies)
    if (key.first == b && iso.certificate() && iso.certificate()->bound >= out.tau_degree())
      return out.with_certificate(*iso.certificate());
  return std::nullopt;
}

Isogeny identity_isogeny(const DrinfeldModule& phi) {
  return Isogeny(phi, phi, SkewPoly::constant(phi.field().one()));
}

// The isogeny out of label b reaching the local vertices `target` (one per
// prime), or nullopt when some vertex is off every available path from b.
std::optional<std::pair<Isogeny, std::map<PrimeIdealA, unsigned>>> reach(
    const OrbitDatum& d, const ClassificationResult& r, std::size_t b,
    const std::map<PrimeIdealA, std::size_t>& target) {
  std::vector<Isogeny> parts;
  std::map<PrimeIdealA, unsigned> steps;
  for (const auto& [p, v] : target) {
    const SubTree& st = r.subtrees.at(p);
    const auto from_b = tree_distances(st.tree, st.label_vertex[b]);
    const unsigned k = from_b[v];
    steps.emplace(p, k);
    if (k == 0) continue;
    const auto from_v = tree_distances(st.tree, v);
    std::optional<Isogeny> part;
    for (std::size_t y = 0; y < d.labels.size() && !part; ++y) {
      const std::size_t vy = st.label_vertex[y];
      if (from_b[vy] != k + from_v[vy]) continue;
      const auto mu = isogeny_between(d, b, y);
      if (!mu) continue;
      const auto chain = factor_prime_power(project_p(*mu, p).p_part);
      Isogeny acc = chain.front();
      for (unsigned i = 1; i < k; ++i) acc = compose(chain[i], acc);
      part = acc;
    }
    if (!part) return std::nullopt;
    parts.push_back(std::move(*part));
  }
  Isogeny lambda = parts.empty() ? identity_isogeny(d.modules[b]) : kernel_sum(parts);
  return std::make_pair(std::move(lambda), std::move(steps));
}

}  // namespace

MaterializedCenter materialize_center(const OrbitDatum& d, const ClassificationResult& result) {
  if (d.modules.size() != d.labels.size()) fail(ErrorCode::NotRealizable, "orbit carries no concrete modules");
  for (std::size_t b = 0; b < d.labels.size(); ++b) {
    const auto to_psi = reach(d, result, b, result.psi);
    if (!to_psi) continue;
    const auto to_psi_prime = reach(d, result, b, result.psi_prime);
    if (!to_psi_prime) continue;
    const Isogeny& lambda = to_psi->first;
    const Isogeny& lambda_prime = to_psi_prime->first;
    const DrinfeldModule& psi = lambda.target();
    // λ'λ̂ = ν·ψ_c with the backtracking c cancelled prime by prime
    IdealA c = IdealA::unit(*d.field);
    for (const auto& [p, k] : to_psi->second) {
      const unsigned total = k + to_psi_prime->second.at(p) - (divides(p, result.n) ? 1 : 0);
      if (total % 2) fail(ErrorCode::InternalInconsistency, "path parity mismatch in the tree");
      for (unsigned i = 0; i < total / 2; ++i) c = c * p;
    }
    const SkewPoly around = lambda_prime.mu() * dual(lambda).mu();
    Isogeny iso(psi, lambda_prime.target(), exact_right_quotient(around, psi.phi(c.gen())));
    const IsogenyDegree deg = iso.degree();
    if (!(deg.degree == result.n) || !deg.n2.is_unit())
      fail(ErrorCode::InternalInconsistency, "center isogeny is not cyclic of degree n");
    SearchOptions options;
    if (!psi.field().is_rational()) options.candidates = std::vector<ExtElem>{};
    if (const auto cert = certify_non_cm(psi, std::max(iso.tau_degree(), 1), options))
      iso = iso.with_certificate(*cert);
    return {psi, std::move(iso)};
  }
  fail(ErrorCode::NotRealizable, "center is not reachable along the provided isogenies");
}

}  // namespace dforge
