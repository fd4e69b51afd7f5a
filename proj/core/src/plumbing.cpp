#include "seifcalc/plumbing.hpp"

#include <algorithm>
#include <set>

#include "seifcalc/cuspidal.hpp"
#include "seifcalc/errors.hpp"

namespace seifcalc {

void PlumbingGraph::validate() const {
  const std::size_t n = vertices.size();
  if (n == 0) throw InvalidInput("graph has no vertices");
  if (edges.size() != n - 1) throw InvalidInput("graph is not a tree (edge count)");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InvalidInput("edge endpoint out of range");
    if (a == b) throw InvalidInput("self-loop");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw InvalidInput("repeated edge");
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) throw InvalidInput("graph has a cycle");
    parent[ra] = rb;
  }
}

std::vector<std::vector<std::size_t>> PlumbingGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  g.validate();
  IntMatrix q(g.vertices.size(), g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) q.at(i, i) = g.vertices[i].weight;
  for (auto [a, b] : g.edges) {
    q.at(a, b) = 1;
    q.at(b, a) = 1;
  }
  return q;
}

std::string to_string(Definiteness d) {
  return d == Definiteness::NegativeDefinite ? "NegativeDefinite" : "NotNegativeDefinite";
}

FormClass form_class(const IntMatrix& q) {
  if (!q.is_square() || !q.is_symmetric()) throw InvalidInput("form needs a symmetric square matrix");
  FormClass out;
  std::vector<Integer> minors = leading_minors(q);
  out.determinant = minors.empty() ? Integer(1) : minors.back();
  out.singular = out.determinant == 0;
  bool neg = true;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // (-1)^(k+1) D_(k+1) > 0
    int s = sgn(minors[k]);
    if ((k % 2 == 0 && s >= 0) || (k % 2 == 1 && s <= 0)) neg = false;
  }
  out.definiteness = neg ? Definiteness::NegativeDefinite : Definiteness::NotNegativeDefinite;
  return out;
}

LimakResult limak_solve(const IntMatrix& q, const std::vector<Rational>& a) {
  if (!q.is_square() || q.rows() != a.size()) throw InvalidInput("dimension mismatch");
  LimakResult out;
  out.solution = solve_rational(q, a);
  for (std::size_t i = 0; i < out.solution.size(); ++i)
    if (out.solution[i].sign() <= 0) {
      out.violating = i;
      break;
    }
  return out;
}

std::vector<std::vector<std::size_t>> star_arms(const PlumbingGraph& g, std::size_t center) {
  g.validate();
  if (center >= g.vertices.size()) throw InvalidInput("center index out of range");
  auto adj = g.adjacency();
  std::vector<std::vector<std::size_t>> arms;
  for (std::size_t start : adj[center]) {
    std::vector<std::size_t> arm;
    std::size_t prev = center, cur = start;
    while (true) {
      arm.push_back(cur);
      if (adj[cur].size() > 2) throw InvalidInput("graph is not star-shaped around the center");
      std::size_t next = cur;
      for (std::size_t nb : adj[cur])
        if (nb != prev) next = nb;
      if (next == cur) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  return arms;
}

std::size_t default_center(const PlumbingGraph& g) {
  g.validate();
  auto adj = g.adjacency();
  std::size_t best = 0;
  for (std::size_t i = 1; i < adj.size(); ++i)
    if (adj[i].size() > adj[best].size()) best = i;
  return best;
}

SeifertData star_to_seifert(const PlumbingGraph& g, std::size_t center, bool strict) {
  auto arms = star_arms(g, center);
  SeifertData s;
  s.fibers.push_back({1, g.vertices[center].weight});
  for (const auto& arm : arms) {
    std::vector<Integer> entries;
    for (std::size_t v : arm) {
      if (strict && g.vertices[v].weight > -2) throw InvalidInput("arm weights must be <= -2");
      entries.push_back(-g.vertices[v].weight);
    }
    CfValue val = eval_neg_cf(entries);
    if (val.num == 0)
      s.fibers.push_back({0, 1});
    else
      s.fibers.push_back({val.num, val.den});
  }
  s.validate();
  return s;
}

PlumbingGraph seifert_to_star(const NormalForm& n) {
  if (n.genus != 0) throw InvalidInput("star graphs need genus 0");
  PlumbingGraph g;
  g.vertices.push_back({n.b, std::nullopt});
  for (const auto& f : n.fibers) {
    std::size_t prev = 0;
    for (const auto& a : neg_cf(f.alpha, f.beta)) {
      g.vertices.push_back({-a, std::nullopt});
      g.edges.push_back({prev, g.vertices.size() - 1});
      prev = g.vertices.size() - 1;
    }
  }
  return g;
}

PlumbingGraph cusp_resolution_graph(const Integer& p, const Integer& q, const Integer& m) {
  DualPair d = dual_pair(p, q);
  if (m < 1) throw InvalidInput("m must be positive");
  PlumbingGraph g;
  g.vertices.push_back({-1, std::nullopt});
  g.vertices.push_back({m - p * q, std::string("C")});
  g.edges.push_back({0, 1});
  for (const auto& [num, den] : {std::pair{p, Integer(p - d.p_prime)}, std::pair{q, Integer(q - d.q_prime)}}) {
    std::size_t prev = 0;
    for (const auto& a : neg_cf(num, den)) {
      g.vertices.push_back({-a, std::nullopt});
      g.edges.push_back({prev, g.vertices.size() - 1});
      prev = g.vertices.size() - 1;
    }
  }
  return g;
}

bool same_star(const PlumbingGraph& a, std::size_t ca, const PlumbingGraph& b, std::size_t cb) {
  if (a.vertices.size() != b.vertices.size()) return false;
  if (a.vertices[ca].weight != b.vertices[cb].weight) return false;
  auto weights = [](const PlumbingGraph& g, std::size_t c) {
    std::vector<std::vector<Integer>> out;
    for (const auto& arm : star_arms(g, c)) {
      std::vector<Integer> w;
      for (std::size_t v : arm) w.push_back(g.vertices[v].weight);
      out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return weights(a, ca) == weights(b, cb);
}

PlumbingGraph figure1() {
  PlumbingGraph g;
  const long w[10] = {-2, -2, -2, -1, -3, -2, -2, -2, -2, -2};
  for (long x : w) g.vertices.push_back({x, std::nullopt});
  g.vertices[0].label = "C1";
  g.vertices[1].label = "C2";
  g.edges = {{0, 3}, {3, 2}, {2, 1}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}};
  return g;
}

PlumbingGraph figure1_single_cusp() {
  PlumbingGraph full = figure1(), g;
  // drop vertex 1 and renumber
  auto remap = [](std::size_t v) { return v > 1 ? v - 1 : v; };
  for (std::size_t i = 0; i < full.vertices.size(); ++i)
    if (i != 1) g.vertices.push_back(full.vertices[i]);
  for (auto [a, b] : full.edges)
    if (a != 1 && b != 1) g.edges.push_back({remap(a), remap(b)});
  return g;
}

}  // namespace seifcalc
