#ifndef EDGEBETTI_BOUQUETS_HPP
#define EDGEBETTI_BOUQUETS_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "edgebetti/betti_table.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

/// A star K_{1,d} inside a graph: a root and d >= 1 leaves adjacent to it.
struct Bouquet {
    Vertex root = 0;
    VertexSet leaves;

    VertexSet vertices() const { return leaves | VertexSet::single(root); }
    bool operator==(const Bouquet&) const = default;
};

/**
 * Bouquets together with one representative edge each (root to one of its
 * leaves). The set is strongly disjoint when the bouquets are pairwise
 * vertex-disjoint and the representatives form an induced matching of the
 * ambient graph.
 */
struct BouquetSet {
    std::vector<Bouquet> bouquets;
    std::vector<Edge> representatives;

    VertexSet vertices() const;
    bool operator==(const BouquetSet&) const = default;
};

enum class BouquetCheck {
    valid,
    out_of_range,
    /// Empty leaf set, root among its leaves, or a leaf not adjacent to the root.
    malformed,
    /// Two bouquets share a vertex.
    overlapping,
    /// Wrong count, or a representative that is not root-to-leaf of its bouquet.
    bad_representative,
    /// Representatives are not an induced matching.
    not_induced,
};

std::string_view describe(BouquetCheck check);

BouquetCheck check_bouquet_set(const Graph& g, const BouquetSet& bs);
inline bool validate_bouquet_set(const Graph& g, const BouquetSet& bs)
{
    return check_bouquet_set(g, bs) == BouquetCheck::valid;
}

/// (|V(B)| - s, s) for s bouquets.
BettiPosition certificate_type(const BouquetSet& bs);

/// A strongly disjoint bouquet set of a given type; the witness subset W is
/// the union of its vertices, so the set spans the induced subgraph on W.
struct Certificate {
    BouquetSet bouquets;
    BettiPosition type{0, 0};
    VertexSet witness;

    bool operator==(const Certificate&) const = default;
};

Certificate make_certificate(BouquetSet bs);

/**
 * Search for a strongly disjoint bouquet set of type (i, j).
 *
 * Representative systems are induced matchings of size j, visited in
 * lexicographic order of their sorted edge lists. For each, roots are chosen
 * (smaller endpoint first, earlier edges deciding first) and a set qualifies
 * when at least i - j vertices outside the matching are adjacent to some
 * root. The first qualifying choice is returned, with the i - j smallest
 * such vertices as extra leaves, each given to the first bouquet whose root
 * sees it. Bouquets are then sorted by root. The search is exhaustive, so
 * nullopt means no set of that type exists. (0, 0) yields the empty set.
 */
std::optional<Certificate> find_certificate(const Graph& g, int i, int j);

/// Every (i, j) admitting a certificate, including (0, 0).
std::set<BettiPosition> certified_positions(const Graph& g);

/// {"type": [i,j], "bouquets": [{"root": r, "leaves": [...]}...], "representatives": [[u,v]...]}
std::string format_certificate_json(const Certificate& c);
/// Inverse of format_certificate_json; the witness is recomputed from the bouquets.
Certificate parse_certificate_json(std::string_view text);

} // namespace edgebetti

#endif
