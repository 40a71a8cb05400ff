#include "spiro/indices.hpp"

#include <array>
#include <cmath>
#include <string>

#include "spiro/error.hpp"

namespace spiro {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double checked_power(const std::string& name, double base, double a) {
  if (!(base > 0.0) || !std::isfinite(base)) {
    throw UndefinedBase("index '" + name + "' has non-positive or undefined base value");
  }
  return std::pow(base, a);
}

}  // namespace

IndexSpec IndexSpec::vertex(std::string name, VertexBase h, double a, double scale) {
  IndexSpec s;
  s.name_ = std::move(name);
  s.kind_ = IndexKind::Vertex;
  s.h_ = std::move(h);
  s.a_ = a;
  s.scale_ = scale;
  return s;
}

IndexSpec IndexSpec::edge(std::string name, EdgeBase f, double a, double scale) {
  IndexSpec s;
  s.name_ = std::move(name);
  s.kind_ = IndexKind::Edge;
  s.f_ = std::move(f);
  s.a_ = a;
  s.scale_ = scale;
  return s;
}

double IndexSpec::vertex_term(unsigned d) const {
  if (kind_ != IndexKind::Vertex) throw KindMismatch("'" + name_ + "' is an edge index");
  return checked_power(name_, h_(d), a_);
}

double IndexSpec::edge_term(unsigned x, unsigned y) const {
  if (kind_ != IndexKind::Edge) throw KindMismatch("'" + name_ + "' is a vertex index");
  return checked_power(name_, f_(x, y), a_);
}

double evaluate(const IndexSpec& spec, const MolecularGraph& g) {
  if (g.vertex_count() == 0) throw InvalidGraph("cannot evaluate an index on an empty graph");
  CompensatedSum sum;
  const auto deg = g.degrees();
  if (spec.kind() == IndexKind::Vertex) {
    for (std::uint32_t d : deg) sum.add(spec.vertex_term(d));
  } else {
    for (const Edge& e : g.edges()) sum.add(spec.edge_term(deg[e.u], deg[e.v]));
  }
  return spec.scale() * sum.value();
}

double evaluate_from_profile(const IndexSpec& spec, const EdgeProfile& ep) {
  if (spec.kind() != IndexKind::Edge) {
    throw KindMismatch("edge profile given for vertex index '" + spec.name() + "'");
  }
  const double raw = static_cast<double>(ep.m22) * spec.edge_term(2, 2) +
                     static_cast<double>(ep.m24) * spec.edge_term(2, 4) +
                     static_cast<double>(ep.m44) * spec.edge_term(4, 4);
  return spec.scale() * raw;
}

double evaluate_from_profile(const IndexSpec& spec, const VertexProfile& vp) {
  if (spec.kind() != IndexKind::Vertex) {
    throw KindMismatch("vertex profile given for edge index '" + spec.name() + "'");
  }
  const double raw = static_cast<double>(vp.c2) * spec.vertex_term(2) +
                     static_cast<double>(vp.c4) * spec.vertex_term(4);
  return spec.scale() * raw;
}

namespace {

constexpr std::array<std::string_view, 11> kNames{
    "first-zagreb", "second-zagreb",    "forgotten", "inverse-degree",
    "randic",       "sum-connectivity", "harmonic",  "nirmala",
    "sombor",       "variable-first-zagreb", "variable-sum-connectivity"};

double identity(unsigned t) { return t; }
double product(unsigned x, unsigned y) { return double(x) * double(y); }
double sum(unsigned x, unsigned y) { return double(x) + double(y); }
double sum_of_squares(unsigned x, unsigned y) { return double(x) * x + double(y) * y; }

}  // namespace

std::span<const std::string_view> registry_names() { return kNames; }

bool registry_needs_exponent(std::string_view name) {
  return name == "variable-first-zagreb" || name == "variable-sum-connectivity";
}

IndexSpec registry_lookup(std::string_view name, std::optional<double> a) {
  const std::string id(name);
  if (registry_needs_exponent(name) && !a) {
    throw MissingExponent("index '" + id + "' requires an exponent a");
  }
  if (name == "first-zagreb") return IndexSpec::vertex(id, identity, 2.0);
  if (name == "inverse-degree") return IndexSpec::vertex(id, identity, -1.0);
  if (name == "forgotten") return IndexSpec::vertex(id, identity, 3.0);
  if (name == "variable-first-zagreb") return IndexSpec::vertex(id, identity, *a);
  if (name == "second-zagreb") return IndexSpec::edge(id, product, 1.0);
  if (name == "randic") return IndexSpec::edge(id, product, -0.5);
  if (name == "sum-connectivity") return IndexSpec::edge(id, sum, -0.5);
  if (name == "harmonic") return IndexSpec::edge(id, sum, -1.0, 2.0);
  if (name == "variable-sum-connectivity") return IndexSpec::edge(id, sum, *a);
  if (name == "nirmala") return IndexSpec::edge(id, sum, 0.5);
  if (name == "sombor") return IndexSpec::edge(id, sum_of_squares, 0.5);
  throw UnknownIndex("unknown index '" + id + "'");
}

}  // namespace spiro
