#ifndef EDGEBETTI_HOMOLOGY_HPP
#define EDGEBETTI_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "edgebetti/field.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

/// Faces grouped by dimension: entry k+1 holds the k-dimensional faces
/// (so entry 0 is {∅} for any nonempty complex). Each group is sorted.
using FacesByDimension = std::vector<std::vector<VertexSet>>;

/**
 * Finite simplicial complex given by its facets.
 *
 * The facet list is kept free of containments and sorted. A complex with the
 * single facet ∅ is the complex {∅}; a complex with no facets at all is void.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::vector<VertexSet> facets);

    const std::vector<VertexSet>& facets() const { return facets_; }
    VertexSet vertex_set() const;
    bool is_void() const { return facets_.empty(); }
    /// -1 for {∅}; meaningless for the void complex.
    int dimension() const;
    bool contains(VertexSet face) const;
    FacesByDimension faces() const;

private:
    std::vector<VertexSet> facets_;
};

/// dim ~H_k for k >= -1; only nonzero dimensions are stored.
struct HomologyProfile {
    std::map<int, std::uint64_t> dims;

    std::uint64_t operator[](int k) const
    {
        auto it = dims.find(k);
        return it == dims.end() ? 0 : it->second;
    }
    /// Σ (-1)^k dim ~H_k
    std::int64_t euler_characteristic() const;
    bool operator==(const HomologyProfile&) const = default;
};

/// Σ_{k >= -1} (-1)^k f_k
std::int64_t reduced_euler_characteristic(const FacesByDimension& faces);

/// Independent sets of g contained in w, grouped by size.
FacesByDimension independent_sets(const Graph& g, VertexSet w);

/// Faces are the independent sets of g; facets are the maximal ones.
SimplicialComplex independence_complex(const Graph& g);

/// Reduced homology from boundary-matrix ranks, with ∂_0 sending every vertex to ∅.
HomologyProfile reduced_homology(const FacesByDimension& faces, const FieldSpec& field);
HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field);

} // namespace edgebetti

#endif
