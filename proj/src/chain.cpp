#include "spiro/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spiro/error.hpp"
#include "spiro/rng.hpp"

namespace spiro {

char to_char(LinkType link) {
  switch (link) {
    case LinkType::Ortho: return 'O';
    case LinkType::Meta: return 'M';
    case LinkType::Para: return 'P';
  }
  return '?';
}

std::string_view to_string(LinkType link) {
  switch (link) {
    case LinkType::Ortho: return "ortho";
    case LinkType::Meta: return "meta";
    case LinkType::Para: return "para";
  }
  return "?";
}

std::string links_to_string(std::span<const LinkType> links) {
  std::string out;
  out.reserve(links.size());
  for (LinkType l : links) out.push_back(to_char(l));
  return out;
}

std::vector<LinkType> parse_links(std::string_view text) {
  std::vector<LinkType> links;
  links.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'O': links.push_back(LinkType::Ortho); break;
      case 'M': links.push_back(LinkType::Meta); break;
      case 'P': links.push_back(LinkType::Para); break;
      default:
        throw InvalidLinks("invalid link character '" + std::string(1, text[i]) +
                           "' at position " + std::to_string(i) + " (expected O, M or P)");
    }
  }
  return links;
}

LinkProbabilities::LinkProbabilities(double ortho, double meta, double para)
    : p_{ortho, meta, para} {
  for (double p : p_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidProbabilities("link probabilities must lie in [0, 1]");
    }
  }
  if (std::abs(ortho + meta + para - 1.0) > kSumTolerance) {
    throw InvalidProbabilities("link probabilities must sum to 1");
  }
}

LinkProbabilities LinkProbabilities::from_ortho(double ortho) {
  if (!(ortho >= 0.0 && ortho <= 1.0)) {
    throw InvalidProbabilities("p_ortho must lie in [0, 1]");
  }
  const double rest = 0.5 * (1.0 - ortho);
  return {ortho, rest, rest};
}

kernels::LinkThresholds LinkProbabilities::thresholds() const noexcept {
  static constexpr double kScale = 0x1.0p53;
  static constexpr std::uint64_t kFull = std::uint64_t{1} << 53;
  const auto cut = [](double p) {
    return std::min(kFull, static_cast<std::uint64_t>(std::ceil(p * kScale)));
  };
  kernels::LinkThresholds t;
  t.ortho = cut(p_[0]);
  if (p_[2] == 0.0) {
    t.meta = kFull;
  } else if (p_[1] == 0.0) {
    t.meta = t.ortho;
  } else {
    t.meta = std::max(t.ortho, cut(p_[0] + p_[1]));
  }
  return t;
}

LinkType LinkProbabilities::select(std::uint64_t raw) const noexcept {
  const kernels::LinkThresholds t = thresholds();
  const std::uint64_t m = rng::mantissa53(raw);
  return m < t.ortho ? LinkType::Ortho : (m < t.meta ? LinkType::Meta : LinkType::Para);
}

std::size_t SpiroChain::ortho_count() const noexcept {
  return static_cast<std::size_t>(std::count(links_.begin(), links_.end(), LinkType::Ortho));
}

// Mutable construction state; frozen into a SpiroChain at the end so that
// replay and generate are linear in n.
class ChainBuilder {
 public:
  explicit ChainBuilder(std::size_t n) {
    if (n != 1 && n != 2) {
      throw InvalidN("initial chain needs n = 1 or n = 2, got " + std::to_string(n));
    }
    for (VertexId i = 0; i < 6; ++i) {
      edges_.push_back({i, (i + 1) % 6});
      terminal_[i] = i;
    }
    vertices_ = 6;
    n_ = 1;
    if (n == 2) attach(0);
  }

  explicit ChainBuilder(const SpiroChain& chain)
      : edges_(chain.graph_.edges().begin(), chain.graph_.edges().end()),
        vertices_(chain.graph_.vertex_count()),
        n_(chain.n_),
        links_(chain.links_),
        cut_(chain.cut_),
        terminal_(chain.terminal_) {}

  void reserve(std::size_t extra_hexagons) {
    edges_.reserve(edges_.size() + 6 * extra_hexagons);
    links_.reserve(links_.size() + extra_hexagons);
  }

  void grow(LinkType link) {
    if (n_ < 2) {
      throw ChainTooShort("link types are defined only when growing from two or more hexagons");
    }
    const std::size_t distance = static_cast<std::size_t>(link) + 1;
    attach(terminal_[distance]);
    links_.push_back(link);
  }

  SpiroChain finish() && {
    SpiroChain c;
    c.graph_ = MolecularGraph(vertices_, std::move(edges_));
    c.n_ = n_;
    c.links_ = std::move(links_);
    c.cut_ = cut_;
    c.terminal_ = terminal_;
    return c;
  }

 private:
  // New hexagon through `shared` and five fresh vertices.
  void attach(VertexId shared) {
    const auto first = static_cast<VertexId>(vertices_);
    std::array<VertexId, 6> ring{shared};
    for (VertexId i = 0; i < 5; ++i) ring[i + 1] = first + i;
    for (std::size_t i = 0; i < 6; ++i) edges_.push_back({ring[i], ring[(i + 1) % 6]});
    vertices_ += 5;
    ++n_;
    cut_ = shared;
    terminal_ = ring;
  }

  std::vector<Edge> edges_;
  std::size_t vertices_ = 0;
  std::size_t n_ = 0;
  std::vector<LinkType> links_;
  std::optional<VertexId> cut_;
  std::array<VertexId, 6> terminal_{};
};

SpiroChain initial_chain(std::size_t n) { return ChainBuilder(n).finish(); }

SpiroChain grow(const SpiroChain& chain, LinkType link) {
  if (chain.hexagons() < 2) {
    throw ChainTooShort("link types are defined only when growing from two or more hexagons");
  }
  ChainBuilder b(chain);
  b.reserve(1);
  b.grow(link);
  return std::move(b).finish();
}

SpiroChain replay(std::span<const LinkType> links) {
  ChainBuilder b(2);
  b.reserve(links.size());
  for (LinkType l : links) b.grow(l);
  return std::move(b).finish();
}

std::vector<LinkType> draw_links(std::size_t count, const LinkProbabilities& probs,
                                 std::uint64_t seed, const kernels::KernelTable& k) {
  std::vector<std::uint64_t> raw(count);
  std::vector<std::uint8_t> codes(count);
  k.fill_stream(seed, 0, raw);
  k.classify(raw, probs.thresholds(), codes);
  std::vector<LinkType> links(count);
  std::transform(codes.begin(), codes.end(), links.begin(),
                 [](std::uint8_t c) { return static_cast<LinkType>(c); });
  return links;
}

SpiroChain generate(std::size_t n, const LinkProbabilities& probs, std::uint64_t seed) {
  if (n < 2) throw InvalidN("generate needs n >= 2, got " + std::to_string(n));
  return replay(draw_links(n - 2, probs, seed));
}

LinkSequenceSpace::LinkSequenceSpace(std::size_t n, LinkProbabilities probs)
    : n_(n), probs_(probs), size_(1) {
  for (std::size_t i = 2; i < n; ++i) size_ *= 3;
}

WeightedLinks LinkSequenceSpace::at(std::uint64_t index) const {
  WeightedLinks out;
  const std::size_t len = n_ - 2;
  out.links.resize(len);
  for (std::size_t i = len; i-- > 0;) {
    out.links[i] = static_cast<LinkType>(index % 3);
    index /= 3;
  }
  out.weight = 1.0;
  for (LinkType l : out.links) out.weight *= probs_[l];
  return out;
}

LinkSequenceSpace enumerate_all(std::size_t n, const LinkProbabilities& probs,
                                std::size_t cap) {
  if (n < 2) throw InvalidN("enumeration needs n >= 2, got " + std::to_string(n));
  if (n > cap) {
    throw NTooLarge("enumeration of n = " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(cap));
  }
  return LinkSequenceSpace(n, probs);
}

}  // namespace spiro
