#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "spiro/graph.hpp"

namespace spiro {

enum class IndexKind { Vertex, Edge };

// A degree-based topological index:
//   vertex kind: scale * sum over v of h(d_v)^a
//   edge kind:   scale * sum over uv of f(d_u, d_v)^a
// scale is 1 except for registry entries defined as a multiple of the raw sum
// (harmonic = 2 * sum (d_u + d_v)^-1).
class IndexSpec {
 public:
  using VertexBase = std::function<double(unsigned)>;
  using EdgeBase = std::function<double(unsigned, unsigned)>;

  static IndexSpec vertex(std::string name, VertexBase h, double a, double scale = 1.0);
  static IndexSpec edge(std::string name, EdgeBase f, double a, double scale = 1.0);

  const std::string& name() const noexcept { return name_; }
  IndexKind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return a_; }
  double scale() const noexcept { return scale_; }

  /// h(d)^a; UndefinedBase if h(d) is not a positive finite real. Unscaled.
  double vertex_term(unsigned d) const;
  /// f(x, y)^a; UndefinedBase likewise. Unscaled.
  double edge_term(unsigned x, unsigned y) const;

 private:
  IndexSpec() = default;

  std::string name_;
  IndexKind kind_ = IndexKind::Vertex;
  VertexBase h_;
  EdgeBase f_;
  double a_ = 1.0;
  double scale_ = 1.0;
};

double evaluate(const IndexSpec& spec, const MolecularGraph& g);

/// KindMismatch when the profile kind differs from the spec kind.
double evaluate_from_profile(const IndexSpec& spec, const EdgeProfile& ep);
double evaluate_from_profile(const IndexSpec& spec, const VertexProfile& vp);

/// Registry names accepted by registry_lookup, in catalog order.
std::span<const std::string_view> registry_names();
bool registry_needs_exponent(std::string_view name);

/// UnknownIndex for names outside the registry; MissingExponent when a
/// variable-* entry is requested without an exponent. Fixed entries ignore a.
IndexSpec registry_lookup(std::string_view name, std::optional<double> a = std::nullopt);

}  // namespace spiro
