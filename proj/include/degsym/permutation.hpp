#pragma once

#include <span>
#include <string>
#include <vector>

#include "degsym/graph.hpp"

namespace degsym {

// Bijection on [0, n), stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  static Permutation Identity(Vertex n);
  // Throws Error{kInvalidArgument} unless `image` is a bijection on [0, n).
  static Permutation FromImage(std::vector<Vertex> image);
  // Cycles in standard notation; unlisted points are fixed.
  static Permutation FromCycles(Vertex n,
                                const std::vector<std::vector<Vertex>>& cycles);

  Vertex operator()(Vertex v) const { return image_[v]; }
  Vertex size() const { return static_cast<Vertex>(image_.size()); }
  std::span<const Vertex> image() const { return image_; }

  // Cycles of length >= 2, each starting at its smallest point, ordered by
  // that point.
  std::vector<std::vector<Vertex>> Cycles() const;
  std::vector<Vertex> Support() const;
  std::vector<Vertex> FixedPoints() const;
  bool IsIdentity() const;

  Permutation Inverse() const;
  // (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  // "(0 1)(2 3 4)"; "()" for the identity.
  std::string ToCycleString() const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {}
  std::vector<Vertex> image_;
};

// G^sigma = (V, {{sigma(i), sigma(j)} : {i, j} in E}).
Graph ApplyPermutation(const Graph& g, const Permutation& sigma);

// sigma in Aut(G), i.e. ApplyPermutation(g, sigma) == g, checked without
// materializing the image graph.
bool IsAutomorphism(const Graph& g, const Permutation& sigma);

}  // namespace degsym
