#ifndef IFD_MATCHING_HPP
#define IFD_MATCHING_HPP

#include "ifd/cell_paths.hpp"
#include "ifd/path.hpp"

namespace ifd {

/// Integral Frechet cost of the matching induced by `path`: the sum of exact
/// weighted lengths of its pieces.
double matching_cost(const ParameterSpace &space, const MonotonePath &path);

/// (alpha1(t), alpha2(t)) under the L1 arc-length parametrization.
ParamPoint evaluate_matching(const MonotonePath &path, double t);

/// Replaces every in-cell subpath by the cell's shortest path between the
/// same grid crossings. Subpaths in antiparallel cells are kept. A run along
/// a parameter line belongs to the cell the path was in before it. A pass
/// can move crossings along such runs, so passes repeat until the path stops
/// changing (at most max_passes).
MonotonePath locally_optimize(const ParameterSpace &space, const MonotonePath &path,
                              int max_passes = 16);

/// delta -> length of the path matched at leash <= delta, summed over cells.
SimilarityProfile path_similarity_profile(const ParameterSpace &space,
                                          const MonotonePath &path);

/// Largest leash length along the matching.
double max_leash(const ParameterSpace &space, const MonotonePath &path);

} // namespace ifd

#endif
