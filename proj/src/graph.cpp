#include "ifd/graph.hpp"

#include "ifd/errors.hpp"

#include <cmath>

namespace ifd {

VertexId MonotoneDigraph::add_vertex(ParamPoint p) {
  points_.push_back(p);
  csr_valid_ = false;
  return static_cast<VertexId>(points_.size() - 1);
}

void MonotoneDigraph::add_edge(VertexId tail, VertexId head, double weight,
                               EdgeKind kind, double tol) {
  if (tail >= points_.size() || head >= points_.size())
    throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
  if (!leq_xy(points_[tail], points_[head], tol))
    throw Error(ErrorCode::NotMonotone, "edge does not point in dominance order");
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw Error(ErrorCode::InvalidArgument, "edge weight must be finite and >= 0");
  edges_.push_back({tail, head, weight, kind});
  csr_valid_ = false;
}

void MonotoneDigraph::build_csr() const {
  offsets_.assign(points_.size() + 1, 0);
  for (const GraphEdge &e : edges_)
    ++offsets_[e.tail + 1];
  for (std::size_t v = 0; v < points_.size(); ++v)
    offsets_[v + 1] += offsets_[v];
  out_.assign(edges_.size(), 0);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t k = 0; k < edges_.size(); ++k)
    out_[fill[edges_[k].tail]++] = static_cast<std::uint32_t>(k);
  csr_valid_ = true;
}

std::span<const std::uint32_t> MonotoneDigraph::offsets() const {
  if (!csr_valid_)
    build_csr();
  return offsets_;
}

std::span<const std::uint32_t> MonotoneDigraph::out_edges() const {
  if (!csr_valid_)
    build_csr();
  return out_;
}

} // namespace ifd
