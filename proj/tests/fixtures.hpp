#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "izeta/charpoly.hpp"
#include "izeta/counting.hpp"
#include "izeta/edge_matrix.hpp"
#include "izeta/graph.hpp"
#include "izeta/roots.hpp"
#include "izeta/spectral.hpp"

namespace fixtures {

inline std::string load(const std::string& name) {
  const std::string path = std::string(IZETA_FIXTURE_DIR) + "/" + name + ".edges";
  std::ifstream f(path);
  REQUIRE_MESSAGE(bool(f), "missing fixture ", path);
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

inline izeta::ValidatedGraph graph(const std::string& name) {
  return izeta::validate_graph(izeta::parse_edge_list(load(name)));
}

// The pipeline prefix shared by most suites: everything up to the spectral
// partition (census period feeds the on-circle count check).
struct Pipeline {
  izeta::ValidatedGraph graph;
  izeta::OrientedEdgeSet oriented;
  izeta::EdgeMatrix matrix;
  izeta::ClosedPathCounts counts;
  izeta::PrimeCensus census;
  izeta::CharPoly charpoly;
  izeta::Spectrum spectrum;
  izeta::SpectralPartition partition;

  int two_eps() const { return matrix.dim(); }
};

inline Pipeline pipeline(const std::string& name, int n_max) {
  Pipeline p;
  p.graph = graph(name);
  p.oriented = izeta::orient_edges(p.graph);
  p.matrix = izeta::build_edge_matrix(p.oriented);
  p.counts = izeta::closed_path_counts(p.matrix, n_max);
  p.census = izeta::prime_census(p.counts);
  p.charpoly = izeta::char_poly(p.matrix);
  p.spectrum = izeta::spectrum_roots(p.charpoly);
  p.partition = izeta::perron_radius(
      p.spectrum, p.census.provisional ? 0 : p.census.delta);
  return p;
}

}  // namespace fixtures
