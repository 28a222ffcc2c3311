#ifndef IFD_GRAPH_HPP
#define IFD_GRAPH_HPP

#include "ifd/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ifd {

using VertexId = std::uint32_t;

// Which construction component an edge came from.
enum class EdgeKind : std::uint8_t { Grid, Axis, Lattice, Connector };

struct GraphEdge {
  VertexId tail = 0;
  VertexId head = 0;
  double weight = 0.0;
  EdgeKind kind = EdgeKind::Grid;
};

/// Directed graph embedded in the parameter space. Every edge points from a
/// dominated embedding to a dominating one and carries a non-negative weight.
class MonotoneDigraph {
public:
  VertexId add_vertex(ParamPoint p);

  /// Throws Error(NotMonotone) if tail is not <=_xy head within `tol`, and
  /// Error(InvalidArgument) on negative or non-finite weight.
  void add_edge(VertexId tail, VertexId head, double weight, EdgeKind kind,
                double tol = 1e-12);

  void set_terminals(VertexId source, VertexId sink) {
    source_ = source;
    sink_ = sink;
  }

  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  ParamPoint point(VertexId v) const { return points_[v]; }
  std::span<const ParamPoint> points() const { return points_; }
  std::span<const GraphEdge> edges() const { return edges_; }
  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }

  void reserve(std::size_t vertices, std::size_t edges) {
    points_.reserve(vertices);
    edges_.reserve(edges);
  }

  /// Outgoing edges in CSR form: offsets()[v]..offsets()[v+1] index into
  /// out_edges(). Built lazily, invalidated by add_edge.
  std::span<const std::uint32_t> offsets() const;
  std::span<const std::uint32_t> out_edges() const;

private:
  void build_csr() const;

  std::vector<ParamPoint> points_;
  std::vector<GraphEdge> edges_;
  VertexId source_ = 0;
  VertexId sink_ = 0;
  mutable std::vector<std::uint32_t> offsets_;
  mutable std::vector<std::uint32_t> out_;
  mutable bool csr_valid_ = false;
};

} // namespace ifd

#endif
