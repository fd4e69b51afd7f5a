#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seifcalc/arith.hpp"
#include "seifcalc/seifert.hpp"

namespace seifcalc {

struct Vertex {
  Integer weight;
  std::optional<std::string> label;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct PlumbingGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Throws InvalidInput unless the graph is a tree without loops or repeated edges.
  void validate() const;
  std::vector<std::vector<std::size_t>> adjacency() const;
  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

IntMatrix intersection_matrix(const PlumbingGraph& g);

enum class Definiteness { NegativeDefinite, NotNegativeDefinite };
std::string to_string(Definiteness d);

struct FormClass {
  Integer determinant;
  Definiteness definiteness = Definiteness::NotNegativeDefinite;
  bool singular = false;
};

FormClass form_class(const IntMatrix& q);

struct LimakResult {
  std::vector<Rational> solution;           // the exact solution of Q z = a
  std::optional<std::size_t> violating;     // first index with z_i <= 0
  bool positive() const { return !violating; }
};

// Throws InvalidInput when Q is singular.
LimakResult limak_solve(const IntMatrix& q, const std::vector<Rational>& a);

// Arms of a star-shaped tree read outward from center, as vertex indices.
std::vector<std::vector<std::size_t>> star_arms(const PlumbingGraph& g, std::size_t center);

// The first vertex of maximal degree.
std::size_t default_center(const PlumbingGraph& g);

// Center weight w gives (1, w); an arm with weights -[a1..ak] gives (num, den) of
// a1 - 1/(a2 - ...). Strict mode requires arm weights <= -2.
SeifertData star_to_seifert(const PlumbingGraph& g, std::size_t center, bool strict = true);

// Center weight b, one arm -neg_cf(alpha, beta) per fiber. Genus 0 only.
PlumbingGraph seifert_to_star(const NormalForm& n);

// Center -1 with arms -neg_cf(p, p - p'), -neg_cf(q, q - q') and a leaf of weight m - pq.
PlumbingGraph cusp_resolution_graph(const Integer& p, const Integer& q, const Integer& m);

// Same center weight and the same multiset of arm weight sequences.
bool same_star(const PlumbingGraph& a, std::size_t ca, const PlumbingGraph& b, std::size_t cb);

// The ten-vertex resolution graph of the two-curve configuration.
PlumbingGraph figure1();

// figure1() with the second curve's vertex removed.
PlumbingGraph figure1_single_cusp();

}  // namespace seifcalc
