#include "orbit/automorphism.hpp"

#include <map>
#include <tuple>

#include "orbit/errors.hpp"

namespace orbit {

namespace {

// Edge of the folding graph. `label` is a word in the image names, so that
// reading labels along a closed path at the base vertex expresses the path's
// letters in terms of the images.
struct Edge {
  int src;
  int dst;
  GeneratorSymbol letter;
  Word label;
};

class FoldingGraph {
 public:
  explicit FoldingGraph(const Substitution& images) {
    for (const auto& [name, image] : images) {
      if (image.empty()) throw NotAutomorphism("image of " + to_string(name) + " is trivial");
      int cur = 0;
      for (std::size_t t = 0; t < image.size(); ++t) {
        const int next = t + 1 == image.size() ? 0 : vertex_count_++;
        const Word label = t == 0 ? Word(name) : Word();
        const Letter x = image[t];
        if (x.exponent > 0)
          edges_.push_back({cur, next, x.symbol, label});
        else
          edges_.push_back({next, cur, x.symbol, label.inverse()});
        cur = next;
      }
    }
  }

  void fold_completely() {
    while (fold_once()) {
    }
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  bool fold_once() {
    // key: (vertex, letter, side) with side 0 for outgoing, 1 for incoming
    std::map<std::tuple<int, GeneratorSymbol, int>, std::size_t> seen;
    for (std::size_t y = 0; y < edges_.size(); ++y) {
      const Edge& e = edges_[y];
      for (int side = 0; side < 2; ++side) {
        const int at = side == 0 ? e.src : e.dst;
        auto [it, fresh] = seen.emplace(std::make_tuple(at, e.letter, side), y);
        if (!fresh) {
          fold(it->second, y, side == 1);
          return true;
        }
      }
    }
    return false;
  }

  void reverse_all() {
    for (Edge& e : edges_) {
      std::swap(e.src, e.dst);
      e.label = e.label.inverse();
    }
  }

  // Incoming edges of z get label L -> L g, outgoing ones L -> g^-1 L.
  void gauge(int z, const Word& g) {
    const Word ginv = g.inverse();
    for (Edge& e : edges_) {
      if (e.dst == z) e.label = e.label * g;
      if (e.src == z) e.label = ginv * e.label;
    }
  }

  // Folds edges x < y which share their source (or their target when
  // `incoming`); y is removed.
  void fold(std::size_t x, std::size_t y, bool incoming) {
    if (incoming) reverse_all();
    const int v = edges_[x].src;
    const int w1 = edges_[x].dst;
    const int w2 = edges_[y].dst;
    const Word l1 = edges_[x].label;
    const Word l2 = edges_[y].label;
    if (w1 == w2) {
      if (l1 != l2) throw NotAutomorphism("parallel edges with distinct labels");
    } else {
      if (w2 != 0 && w2 != v)
        gauge(w2, l2.inverse() * l1);
      else if (w1 != 0 && w1 != v)
        gauge(w1, l1.inverse() * l2);
      else if (w2 == v)
        gauge(v, l2.inverse() * l1);
      else
        gauge(v, l1.inverse() * l2);
      if (edges_[x].label != edges_[y].label)
        throw NotAutomorphism("gauge failed to align fold labels");
    }
    const int keep = w2 != 0 ? w1 : w2;
    const int gone = w2 != 0 ? w2 : w1;
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(y));
    for (Edge& e : edges_) {
      if (e.src == gone) e.src = keep;
      if (e.dst == gone) e.dst = keep;
    }
    if (incoming) reverse_all();
  }

  std::vector<Edge> edges_;
  int vertex_count_ = 1;  // vertex 0 is the base
};

}  // namespace

Substitution invert_automorphism(const Substitution& images,
                                 std::span<const GeneratorSymbol> alphabet) {
  FoldingGraph graph(images);
  graph.fold_completely();

  Substitution inverse;
  for (const Edge& e : graph.edges()) {
    if (e.src != 0 || e.dst != 0) throw NotAutomorphism("folded graph is not a rose");
    inverse[e.letter] = e.label;
  }
  if (inverse.size() != alphabet.size() || graph.edges().size() != alphabet.size())
    throw NotAutomorphism("folded rose has the wrong number of petals");
  for (const auto& a : alphabet) {
    auto it = inverse.find(a);
    if (it == inverse.end()) throw NotAutomorphism("no petal for " + to_string(a));
    if (apply_homomorphism(it->second, images) != Word(a))
      throw NotAutomorphism("inverse check failed for " + to_string(a));
  }
  return inverse;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [s, w] : inner) out[s] = apply_homomorphism(w, outer);
  return out;
}

}  // namespace orbit
