#include "spiro/graph.hpp"

#include <algorithm>
#include <string>

#include "spiro/error.hpp"

namespace spiro {

MolecularGraph::MolecularGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), degree_(vertex_count, 0) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InvalidGraph("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    ++degree_[e.u];
    ++degree_[e.v];
  }
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidGraph("duplicate edge");
  }
}

MolecularGraph hexagon() {
  std::vector<Edge> edges;
  edges.reserve(6);
  for (VertexId i = 0; i < 6; ++i) edges.push_back({i, (i + 1) % 6});
  return MolecularGraph(6, std::move(edges));
}

namespace {

bool is_chain_degree(std::uint32_t d) { return d == 2 || d == 4; }

[[noreturn]] void unsupported(VertexId v, std::uint32_t d) {
  throw UnsupportedDegree("vertex " + std::to_string(v) + " has degree " +
                          std::to_string(d) + "; only 2 and 4 are supported");
}

}  // namespace

EdgeProfile edge_profile(const MolecularGraph& g) {
  const auto deg = g.degrees();
  for (VertexId v = 0; v < deg.size(); ++v) {
    if (!is_chain_degree(deg[v])) unsupported(v, deg[v]);
  }
  EdgeProfile p;
  for (const Edge& e : g.edges()) {
    const unsigned fours = (deg[e.u] == 4) + (deg[e.v] == 4);
    if (fours == 0) {
      ++p.m22;
    } else if (fours == 1) {
      ++p.m24;
    } else {
      ++p.m44;
    }
  }
  return p;
}

VertexProfile vertex_profile(const MolecularGraph& g) {
  VertexProfile p;
  const auto deg = g.degrees();
  for (VertexId v = 0; v < deg.size(); ++v) {
    if (deg[v] == 2) {
      ++p.c2;
    } else if (deg[v] == 4) {
      ++p.c4;
    } else {
      unsupported(v, deg[v]);
    }
  }
  return p;
}

}  // namespace spiro
