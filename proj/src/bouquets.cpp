#include "edgebetti/bouquets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "edgebetti/graph_io.hpp"

namespace edgebetti {

VertexSet BouquetSet::vertices() const
{
    VertexSet all;
    for (const Bouquet& b : bouquets)
        all |= b.vertices();
    return all;
}

std::string_view describe(BouquetCheck check)
{
    switch (check) {
    case BouquetCheck::valid:
        return "valid";
    case BouquetCheck::out_of_range:
        return "vertex out of range";
    case BouquetCheck::malformed:
        return "malformed bouquet (empty, root among leaves, or leaf not adjacent to root)";
    case BouquetCheck::overlapping:
        return "bouquets share a vertex";
    case BouquetCheck::bad_representative:
        return "representative is not a root-leaf edge of its bouquet";
    case BouquetCheck::not_induced:
        return "representatives do not form an induced matching";
    }
    return "unknown";
}

BouquetCheck check_bouquet_set(const Graph& g, const BouquetSet& bs)
{
    const VertexSet range = g.vertices();
    for (const Bouquet& b : bs.bouquets)
        if (b.root < 0 || b.root >= g.vertex_count() || !b.leaves.is_subset_of(range))
            return BouquetCheck::out_of_range;
    for (const Edge& e : bs.representatives)
        if (e.u < 0 || e.v >= g.vertex_count())
            return BouquetCheck::out_of_range;

    for (const Bouquet& b : bs.bouquets)
        if (b.leaves.empty() || b.leaves.contains(b.root) ||
            !b.leaves.is_subset_of(g.neighborhood(b.root)))
            return BouquetCheck::malformed;

    VertexSet seen;
    for (const Bouquet& b : bs.bouquets) {
        if (seen.intersects(b.vertices()))
            return BouquetCheck::overlapping;
        seen |= b.vertices();
    }

    if (bs.representatives.size() != bs.bouquets.size())
        return BouquetCheck::bad_representative;
    for (std::size_t k = 0; k < bs.bouquets.size(); ++k) {
        const Bouquet& b = bs.bouquets[k];
        const Edge& e = bs.representatives[k];
        const bool root_leaf = (e.u == b.root && b.leaves.contains(e.v)) ||
                               (e.v == b.root && b.leaves.contains(e.u));
        if (!root_leaf)
            return BouquetCheck::bad_representative;
    }
    if (!is_induced_matching(g, Matching{bs.representatives}))
        return BouquetCheck::not_induced;
    return BouquetCheck::valid;
}

BettiPosition certificate_type(const BouquetSet& bs)
{
    int vertices = 0;
    for (const Bouquet& b : bs.bouquets)
        vertices += b.vertices().size();
    const int s = static_cast<int>(bs.bouquets.size());
    return {vertices - s, s};
}

Certificate make_certificate(BouquetSet bs)
{
    std::vector<std::size_t> order(bs.bouquets.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return bs.bouquets[a].root < bs.bouquets[b].root;
    });
    BouquetSet sorted;
    for (std::size_t k : order) {
        sorted.bouquets.push_back(bs.bouquets[k]);
        if (k < bs.representatives.size())
            sorted.representatives.push_back(bs.representatives[k]);
    }
    Certificate c;
    c.type = certificate_type(sorted);
    c.witness = sorted.vertices();
    c.bouquets = std::move(sorted);
    return c;
}

namespace {

/// Induced matchings in lexicographic order of their edge lists.
class InducedMatchingWalker {
public:
    explicit InducedMatchingWalker(const Graph& g) : g_(g), edges_(g.edges()) {}

    /// Calls visit(matching) for every induced matching of exactly `size`
    /// edges until it returns true. Returns whether some call returned true.
    template <class Visit>
    bool for_each_of_size(int size, Visit&& visit)
    {
        chosen_.clear();
        return walk(0, g_.vertices(), size, visit);
    }

    /// Calls visit(matching) for every nonempty induced matching.
    template <class Visit>
    void for_each(Visit&& visit)
    {
        chosen_.clear();
        walk_all(0, g_.vertices(), visit);
    }

private:
    template <class Visit>
    bool walk(std::size_t next, VertexSet available, int size, Visit& visit)
    {
        if (static_cast<int>(chosen_.size()) == size)
            return visit(std::as_const(chosen_));
        const auto needed = static_cast<std::size_t>(size) - chosen_.size();
        if (available.size() < static_cast<int>(2 * needed))
            return false;
        for (std::size_t k = next; k + needed <= edges_.size(); ++k) {
            const Edge& e = edges_[k];
            if (!e.vertices().is_subset_of(available))
                continue;
            chosen_.push_back(e);
            const VertexSet blocked = g_.neighborhood(e.u, true) | g_.neighborhood(e.v, true);
            const bool done = walk(k + 1, available - blocked, size, visit);
            chosen_.pop_back();
            if (done)
                return true;
        }
        return false;
    }

    template <class Visit>
    void walk_all(std::size_t next, VertexSet available, Visit& visit)
    {
        for (std::size_t k = next; k < edges_.size(); ++k) {
            const Edge& e = edges_[k];
            if (!e.vertices().is_subset_of(available))
                continue;
            chosen_.push_back(e);
            visit(std::as_const(chosen_));
            walk_all(k + 1, available - (g_.neighborhood(e.u, true) | g_.neighborhood(e.v, true)),
                     visit);
            chosen_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<Edge> edges_;
    std::vector<Edge> chosen_;
};

VertexSet matching_vertices(const std::vector<Edge>& m)
{
    VertexSet out;
    for (const Edge& e : m)
        out |= e.vertices();
    return out;
}

/// Bit k of `mask` picks the larger endpoint of edge k as root. Edge 0 maps
/// to the most significant bit so that earlier edges decide first.
Vertex root_of(const std::vector<Edge>& m, std::uint32_t mask, std::size_t k)
{
    const auto bit = (mask >> (m.size() - 1 - k)) & 1U;
    return bit ? m[k].v : m[k].u;
}

VertexSet coverage(const Graph& g, const std::vector<Edge>& m, std::uint32_t mask, VertexSet used)
{
    VertexSet reach;
    for (std::size_t k = 0; k < m.size(); ++k)
        reach |= g.neighborhood(root_of(m, mask, k));
    return reach - used;
}

std::optional<Certificate> certificate_from_matching(const Graph& g, const std::vector<Edge>& m,
                                                     int extra)
{
    const VertexSet used = matching_vertices(m);
    VertexSet upper;
    for (const Edge& e : m)
        upper |= g.neighborhood(e.u) | g.neighborhood(e.v);
    if ((upper - used).size() < extra)
        return std::nullopt;

    const std::uint32_t masks = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        const VertexSet reach = coverage(g, m, mask, used);
        if (reach.size() < extra)
            continue;
        BouquetSet bs;
        for (std::size_t k = 0; k < m.size(); ++k) {
            const Vertex root = root_of(m, mask, k);
            const Vertex leaf = root == m[k].u ? m[k].v : m[k].u;
            bs.bouquets.push_back({root, VertexSet::single(leaf)});
            bs.representatives.push_back(m[k]);
        }
        int assigned = 0;
        for (Vertex v : reach) {
            if (assigned == extra)
                break;
            for (Bouquet& b : bs.bouquets)
                if (g.has_edge(b.root, v)) {
                    b.leaves.insert(v);
                    break;
                }
            ++assigned;
        }
        // A bare edge has no preferred root; use its smaller endpoint.
        for (Bouquet& b : bs.bouquets)
            if (b.leaves.size() == 1 && b.leaves.min() < b.root) {
                const Vertex leaf = b.leaves.min();
                b.leaves = VertexSet::single(b.root);
                b.root = leaf;
            }
        return make_certificate(std::move(bs));
    }
    return std::nullopt;
}

} // namespace

std::optional<Certificate> find_certificate(const Graph& g, int i, int j)
{
    if (i < 0 || j < 0)
        throw std::invalid_argument("find_certificate: negative type");
    if (i == 0 && j == 0)
        return make_certificate({});
    if (j == 0 || i < j || i + j > g.vertex_count())
        return std::nullopt;
    if (j >= 32)
        return std::nullopt;
    InducedMatchingWalker walker(g);
    std::optional<Certificate> found;
    walker.for_each_of_size(j, [&](const std::vector<Edge>& m) {
        found = certificate_from_matching(g, m, i - j);
        return found.has_value();
    });
    return found;
}

std::set<BettiPosition> certified_positions(const Graph& g)
{
    std::set<BettiPosition> out{{0, 0}};
    InducedMatchingWalker walker(g);
    walker.for_each([&](const std::vector<Edge>& m) {
        const int j = static_cast<int>(m.size());
        if (j >= 32)
            return;
        const VertexSet used = matching_vertices(m);
        int best = 0;
        const std::uint32_t masks = std::uint32_t{1} << m.size();
        for (std::uint32_t mask = 0; mask < masks; ++mask)
            best = std::max(best, coverage(g, m, mask, used).size());
        for (int extra = 0; extra <= best; ++extra)
            out.insert({j + extra, j});
    });
    return out;
}

std::string format_certificate_json(const Certificate& c)
{
    nlohmann::json doc;
    doc["type"] = {c.type.first, c.type.second};
    doc["bouquets"] = nlohmann::json::array();
    for (const Bouquet& b : c.bouquets.bouquets)
        doc["bouquets"].push_back({{"root", b.root}, {"leaves", b.leaves.to_vector()}});
    doc["representatives"] = nlohmann::json::array();
    for (const Edge& e : c.bouquets.representatives)
        doc["representatives"].push_back({e.u, e.v});
    return doc.dump();
}

Certificate parse_certificate_json(std::string_view text)
{
    try {
        const auto doc = nlohmann::json::parse(text);
        BouquetSet bs;
        for (const auto& b : doc.at("bouquets")) {
            Bouquet bouquet;
            bouquet.root = b.at("root").get<int>();
            for (int v : b.at("leaves").get<std::vector<int>>()) {
                if (v < 0 || v >= kMaxVertices)
                    throw ParseError("certificate json: leaf out of range");
                bouquet.leaves.insert(v);
            }
            bs.bouquets.push_back(bouquet);
        }
        for (const auto& e : doc.at("representatives")) {
            const auto pair = e.get<std::vector<int>>();
            if (pair.size() != 2)
                throw ParseError("certificate json: representative must be a pair");
            bs.representatives.emplace_back(pair[0], pair[1]);
        }
        Certificate c;
        c.type = certificate_type(bs);
        c.witness = bs.vertices();
        const auto stated = doc.at("type").get<std::vector<int>>();
        if (stated.size() != 2 || stated[0] != c.type.first || stated[1] != c.type.second)
            throw ParseError("certificate json: stated type disagrees with bouquets");
        c.bouquets = std::move(bs);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate json: ") + e.what());
    }
}

} // namespace edgebetti
