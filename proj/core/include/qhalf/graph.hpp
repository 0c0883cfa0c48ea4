#pragma once

#include <utility>
#include <vector>

#include "qhalf/rational.hpp"

namespace qhalf {

/// Which copy of the line a labelled vertex lives on.
enum class Side { plus, minus };

/// A labelled vertex: a rational together with its side.
struct Vertex {
  Rational value;
  Side side = Side::plus;

  bool operator==(const Vertex& other) const {
    return side == other.side && value == other.value;
  }
  bool operator!=(const Vertex& other) const { return !(*this == other); }
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored sorted with
/// u < v and no duplicates; adjacency lists are kept sorted as well. Labels
/// are optional and carried only when the graph was built from rationals.
class FiniteGraph {
 public:
  explicit FiniteGraph(int n);
  FiniteGraph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Vertex>& labels() const { return labels_; }
  void set_labels(std::vector<Vertex> labels);

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<Vertex> labels_;
};

}  // namespace qhalf
