#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spiro {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..V-1. Immutable once built; the
// constructor normalizes every edge to u < v and rejects self-loops,
// duplicates and out-of-range endpoints.
class MolecularGraph {
 public:
  MolecularGraph() = default;
  MolecularGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return degree_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::uint32_t> degrees() const noexcept { return degree_; }
  std::uint32_t degree(VertexId v) const { return degree_.at(v); }

  friend bool operator==(const MolecularGraph&, const MolecularGraph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> degree_;
};

// Edge counts by endpoint degree class; the coefficient vector of every
// edge-kind index on a spiro chain.
struct EdgeProfile {
  std::uint64_t m22 = 0;
  std::uint64_t m24 = 0;
  std::uint64_t m44 = 0;

  std::uint64_t total() const noexcept { return m22 + m24 + m44; }
  friend bool operator==(const EdgeProfile&, const EdgeProfile&) = default;
};

struct VertexProfile {
  std::uint64_t c2 = 0;
  std::uint64_t c4 = 0;

  std::uint64_t total() const noexcept { return c2 + c4; }
  friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

/// The 6-cycle 0-1-2-3-4-5-0.
MolecularGraph hexagon();

/// Throws UnsupportedDegree if any vertex has degree other than 2 or 4.
EdgeProfile edge_profile(const MolecularGraph& g);
VertexProfile vertex_profile(const MolecularGraph& g);

}  // namespace spiro
