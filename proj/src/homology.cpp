#include "edgebetti/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edgebetti/sparse_rank.hpp"

namespace edgebetti {

SimplicialComplex::SimplicialComplex(std::vector<VertexSet> facets)
{
    std::sort(facets.begin(), facets.end(),
              [](VertexSet a, VertexSet b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (VertexSet f : facets) {
        const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                         [f](VertexSet kept) { return f.is_subset_of(kept); });
        if (!covered)
            facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end());
}

VertexSet SimplicialComplex::vertex_set() const
{
    VertexSet all;
    for (VertexSet f : facets_)
        all |= f;
    return all;
}

int SimplicialComplex::dimension() const
{
    int top = 0;
    for (VertexSet f : facets_)
        top = std::max(top, f.size());
    return top - 1;
}

bool SimplicialComplex::contains(VertexSet face) const
{
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](VertexSet f) { return face.is_subset_of(f); });
}

FacesByDimension SimplicialComplex::faces() const
{
    if (is_void())
        return {};
    std::set<VertexSet> all;
    for (VertexSet f : facets_) {
        // Every submask of the facet.
        const std::uint64_t full = f.bits();
        std::uint64_t sub = full;
        while (true) {
            all.insert(VertexSet(sub));
            if (sub == 0)
                break;
            sub = (sub - 1) & full;
        }
    }
    FacesByDimension out(static_cast<std::size_t>(dimension() + 2));
    for (VertexSet face : all)
        out[static_cast<std::size_t>(face.size())].push_back(face);
    return out;
}

std::int64_t HomologyProfile::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (const auto& [k, d] : dims)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(d);
    return chi;
}

std::int64_t reduced_euler_characteristic(const FacesByDimension& faces)
{
    std::int64_t chi = 0;
    for (std::size_t idx = 0; idx < faces.size(); ++idx) {
        // idx = k + 1, so the sign (-1)^k flips against idx.
        const auto count = static_cast<std::int64_t>(faces[idx].size());
        chi += (idx % 2 == 1 ? 1 : -1) * count;
    }
    return chi;
}

namespace {

void extend_independent(const Graph& g, VertexSet current, VertexSet candidates,
                        FacesByDimension& out)
{
    for (Vertex v : candidates) {
        VertexSet next = current;
        next.insert(v);
        const auto size = static_cast<std::size_t>(next.size());
        if (out.size() <= size)
            out.resize(size + 1);
        out[size].push_back(next);
        // Only larger indices, so each set is produced once.
        const VertexSet above(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
        extend_independent(g, next, above - g.neighborhood(v), out);
    }
}

} // namespace

FacesByDimension independent_sets(const Graph& g, VertexSet w)
{
    if (!w.is_subset_of(g.vertices()))
        throw std::invalid_argument("independent_sets: vertex set exceeds graph range");
    FacesByDimension out(1);
    out[0].push_back(VertexSet{});
    extend_independent(g, VertexSet{}, w, out);
    for (auto& group : out)
        std::sort(group.begin(), group.end());
    return out;
}

SimplicialComplex independence_complex(const Graph& g)
{
    const FacesByDimension faces = independent_sets(g, g.vertices());
    std::vector<VertexSet> maximal;
    for (const auto& group : faces)
        for (VertexSet f : group) {
            // Maximal iff every vertex outside f has a neighbor in f (or is in f).
            VertexSet dominated = f;
            for (Vertex v : f)
                dominated |= g.neighborhood(v);
            if (dominated == g.vertices())
                maximal.push_back(f);
        }
    return SimplicialComplex(std::move(maximal));
}

HomologyProfile reduced_homology(const FacesByDimension& faces, const FieldSpec& field)
{
    HomologyProfile profile;
    if (faces.empty())
        return profile;
    const std::size_t levels = faces.size();
    // rank[idx] = rank of the boundary map out of dimension idx - 1.
    std::vector<std::size_t> rank(levels + 1, 0);
    for (std::size_t idx = 1; idx < levels; ++idx) {
        const auto& lower = faces[idx - 1];
        std::vector<SparseColumn> columns;
        columns.reserve(faces[idx].size());
        for (VertexSet face : faces[idx]) {
            SparseColumn col;
            int position = 0;
            for (Vertex v : face) {
                VertexSet facet = face;
                facet.erase(v);
                const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
                if (it == lower.end() || *it != facet)
                    throw std::invalid_argument("reduced_homology: face list not closed under subsets");
                col.emplace_back(static_cast<int>(it - lower.begin()), position % 2 == 0 ? 1 : -1);
                ++position;
            }
            std::sort(col.begin(), col.end());
            columns.push_back(std::move(col));
        }
        rank[idx] = sparse_rank(columns, static_cast<int>(lower.size()), field);
    }
    for (std::size_t idx = 0; idx < levels; ++idx) {
        const auto dim = faces[idx].size() - rank[idx] - rank[idx + 1];
        if (dim != 0)
            profile.dims[static_cast<int>(idx) - 1] = dim;
    }
    return profile;
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field)
{
    return reduced_homology(c.faces(), field);
}

} // namespace edgebetti
