#include "qhalf/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qhalf {

FiniteGraph::FiniteGraph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("FiniteGraph: negative vertex count");
}

FiniteGraph::FiniteGraph(int n, std::vector<std::pair<int, int>> edges) : FiniteGraph(n) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::invalid_argument("FiniteGraph: edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("FiniteGraph: loop edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("FiniteGraph: duplicate edge");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<int>& FiniteGraph::neighbours(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("FiniteGraph: vertex " + std::to_string(v));
  return adj_[static_cast<std::size_t>(v)];
}

int FiniteGraph::degree(int v) const {
  return static_cast<int>(neighbours(v).size());
}

bool FiniteGraph::adjacent(int u, int v) const {
  const auto& list = neighbours(u);
  if (v < 0 || v >= n_) throw std::out_of_range("FiniteGraph: vertex " + std::to_string(v));
  return std::binary_search(list.begin(), list.end(), v);
}

void FiniteGraph::set_labels(std::vector<Vertex> labels) {
  if (static_cast<int>(labels.size()) != n_) {
    throw std::invalid_argument("FiniteGraph: label count must match vertex count");
  }
  labels_ = std::move(labels);
}

}  // namespace qhalf
