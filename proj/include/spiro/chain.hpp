#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spiro/graph.hpp"
#include "spiro/kernels.hpp"

namespace spiro {

// Position of the new hexagon's cut vertex on the terminal hexagon, at cycle
// distance 1 (ortho), 2 (meta) or 3 (para) from the existing cut vertex.
// Only ortho joins two degree-4 vertices.
enum class LinkType : std::uint8_t { Ortho = 0, Meta = 1, Para = 2 };

inline constexpr std::array<LinkType, 3> kAllLinks{LinkType::Ortho, LinkType::Meta,
                                                   LinkType::Para};

char to_char(LinkType link);
std::string_view to_string(LinkType link);

/// Serializes over the alphabet {O, M, P}.
std::string links_to_string(std::span<const LinkType> links);
/// Throws InvalidLinks on any character outside {O, M, P}.
std::vector<LinkType> parse_links(std::string_view text);

// Selection probabilities (p_ortho, p_meta, p_para). The binomial parameter of
// the exact law is p_ortho (often written p_1).
class LinkProbabilities {
 public:
  static constexpr double kSumTolerance = 1e-12;

  /// Throws InvalidProbabilities unless each is in [0,1] and they sum to 1.
  LinkProbabilities(double ortho, double meta, double para);

  static LinkProbabilities uniform() { return {1.0 / 3, 1.0 / 3, 1.0 / 3}; }
  /// Splits 1 - ortho equally between meta and para.
  static LinkProbabilities from_ortho(double ortho);

  double ortho() const noexcept { return p_[0]; }
  double meta() const noexcept { return p_[1]; }
  double para() const noexcept { return p_[2]; }
  double operator[](LinkType link) const noexcept {
    return p_[static_cast<std::size_t>(link)];
  }
  const std::array<double, 3>& values() const noexcept { return p_; }

  /// Integer inverse-CDF thresholds over the fixed order ortho, meta, para.
  kernels::LinkThresholds thresholds() const noexcept;
  LinkType select(std::uint64_t raw) const noexcept;

 private:
  std::array<double, 3> p_;
};

class SpiroChain {
 public:
  const MolecularGraph& graph() const noexcept { return graph_; }
  std::size_t hexagons() const noexcept { return n_; }
  std::span<const LinkType> links() const noexcept { return links_; }
  /// Cut vertex of the terminal hexagon; empty for a single hexagon.
  std::optional<VertexId> terminal_cut_vertex() const noexcept { return cut_; }
  /// Terminal hexagon in cycle order, starting at its cut vertex.
  const std::array<VertexId, 6>& terminal_hexagon() const noexcept { return terminal_; }

  std::size_t ortho_count() const noexcept;

 private:
  friend class ChainBuilder;

  MolecularGraph graph_;
  std::size_t n_ = 0;
  std::vector<LinkType> links_;
  std::optional<VertexId> cut_;
  std::array<VertexId, 6> terminal_{};
};

/// RSC_1 (a hexagon) or RSC_2 (two hexagons sharing vertex 0); InvalidN otherwise.
SpiroChain initial_chain(std::size_t n);

/// Attaches one hexagon; ChainTooShort when chain has fewer than two hexagons.
SpiroChain grow(const SpiroChain& chain, LinkType link);

/// Folds grow over RSC_2.
SpiroChain replay(std::span<const LinkType> links);

/// n - 2 draws from the seeded stream, each selected by inverse CDF.
std::vector<LinkType> draw_links(std::size_t count, const LinkProbabilities& probs,
                                 std::uint64_t seed,
                                 const kernels::KernelTable& k = kernels::active_kernels());

SpiroChain generate(std::size_t n, const LinkProbabilities& probs, std::uint64_t seed);

inline constexpr std::size_t kDefaultEnumerationCap = 12;

struct WeightedLinks {
  std::vector<LinkType> links;
  double weight = 0.0;
};

// All 3^(n-2) link sequences in lexicographic order (ortho < meta < para,
// first link most significant). Indices are stable, so a range [first, last)
// is a prefix partition of the sequence space.
class LinkSequenceSpace {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeightedLinks;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const LinkSequenceSpace* space, std::uint64_t index)
        : space_(space), index_(index) {}

    value_type operator*() const { return space_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    const LinkSequenceSpace* space_ = nullptr;
    std::uint64_t index_ = 0;
  };

  LinkSequenceSpace(std::size_t n, LinkProbabilities probs);

  std::size_t hexagons() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  WeightedLinks at(std::uint64_t index) const;

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  std::size_t n_;
  LinkProbabilities probs_;
  std::uint64_t size_;
};

/// NTooLarge when n exceeds cap; InvalidN when n < 2.
LinkSequenceSpace enumerate_all(std::size_t n, const LinkProbabilities& probs,
                                std::size_t cap = kDefaultEnumerationCap);

}  // namespace spiro
