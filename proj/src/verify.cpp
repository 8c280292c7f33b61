#include "edgebetti/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "edgebetti/betti_analysis.hpp"
#include "edgebetti/betti_table.hpp"
#include "edgebetti/families.hpp"

namespace edgebetti {

void VerificationReport::expect(std::string name, nlohmann::json expected, nlohmann::json computed)
{
    const bool ok = expected == computed;
    checks.push_back({std::move(name), std::move(expected), std::move(computed), ok});
    if (!ok)
        status = Status::fail;
}

std::string_view to_string(VerificationReport::Status status)
{
    switch (status) {
    case VerificationReport::Status::pass:
        return "pass";
    case VerificationReport::Status::fail:
        return "fail";
    case VerificationReport::Status::skipped:
        return "skipped";
    }
    return "unknown";
}

std::string VerificationReport::to_json_line(bool with_runtime) const
{
    nlohmann::ordered_json doc;
    doc["claim"] = claim;
    doc["params"] = params;
    doc["status"] = to_string(status);
    if (!note.empty())
        doc["note"] = note;
    auto& list = doc["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks)
        list.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    if (with_runtime)
        doc["runtime_ms"] = runtime_ms;
    return doc.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

VerificationReport finish(VerificationReport report, Clock::time_point start)
{
    report.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

nlohmann::json positions_json(const std::vector<BettiPosition>& positions)
{
    auto out = nlohmann::json::array();
    for (const auto& [i, j] : positions)
        out.push_back({i, j});
    return out;
}

nlohmann::json positions_json(const std::set<BettiPosition>& positions)
{
    return positions_json(std::vector<BettiPosition>(positions.begin(), positions.end()));
}

std::vector<BettiPosition> extremal_list(const ExtremalReport& report)
{
    std::vector<BettiPosition> out;
    for (const ExtremalEntry& e : report.entries)
        out.emplace_back(e.i, e.j);
    return out;
}

void require_size(const Graph& g, int cap, const char* what)
{
    if (g.vertex_count() > cap)
        throw std::invalid_argument(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                                    " vertices, cap is " + std::to_string(cap));
}

/// Runs the Hochster sweep and records the field-independent consistency
/// checks that every report carries.
BettiTable sweep_with_consistency(VerificationReport& report, const Graph& g, const FieldSpec& field)
{
    const SweepResult sweep = betti_sweep(g, field);
    report.expect("beta_1_2_equals_edge_count", g.edge_count(), sweep.table.get(1, 1));
    report.expect("k_polynomial_equals_hilbert_numerator", hilbert_numerator(g), k_polynomial(sweep.table));
    report.expect("euler_characteristic_mismatches", 0, sweep.euler_mismatches);
    return sweep.table;
}

nlohmann::json describe_bouquet_set(const Graph& g, const BouquetSet& bs)
{
    const BouquetCheck check = check_bouquet_set(g, bs);
    if (check != BouquetCheck::valid)
        return std::string("invalid: ") + std::string(describe(check));
    const auto type = certificate_type(bs);
    return nlohmann::json::array({type.first, type.second});
}

} // namespace

BouquetSet first_step_bouquets(int r)
{
    const auto x = [r](int i) { return family_vertex(r, r, "x", i); };
    const auto y = [r](int i) { return family_vertex(r, r, "y", i); };
    BouquetSet bs;
    for (int i = 1; i <= r; ++i) {
        VertexSet leaves = VertexSet::single(x(i));
        if (i == r)
            leaves.insert(family_vertex(r, r, "z"));
        bs.bouquets.push_back({y(i), leaves});
        bs.representatives.emplace_back(x(i), y(i));
    }
    return bs;
}

BouquetSet extremal_bouquets(int r, int b, int i)
{
    const Graph g = g_rb(r, b);
    if (i < 1 || i > b - 1)
        throw std::invalid_argument("extremal_bouquets: need 1 <= i <= b-1");
    const Vertex w = family_vertex(r, r, "w", i);
    BouquetSet bs;
    bs.bouquets.push_back({w, g.neighborhood(w)});
    bs.representatives.emplace_back(w, family_vertex(r, r, "x", i));
    for (int k = i + 1; k <= r; ++k) {
        bs.bouquets.push_back({family_vertex(r, r, "x", k), VertexSet::single(family_vertex(r, r, "y", k))});
        bs.representatives.emplace_back(family_vertex(r, r, "x", k), family_vertex(r, r, "y", k));
    }
    return bs;
}

BouquetSet spanning_bouquet(int r, int b)
{
    const Vertex z = family_vertex(r, r, "z");
    const VertexSet rest = VertexSet::range(2 * r + b) - VertexSet::single(z);
    BouquetSet bs;
    bs.bouquets.push_back({z, rest});
    bs.representatives.emplace_back(z, rest.min());
    return bs;
}

VerificationReport verify_first_step(int r, const FieldSpec& field)
{
    if (r < 1 || 2 * r + 1 > kMaxVerifyVertices)
        throw std::invalid_argument("verify_first_step: need 1 <= r <= 6");
    VerificationReport report;
    report.claim = "first-step";
    report.params = {{"r", r}, {"field", field.name()}};
    const auto start = Clock::now();

    const Graph g = path_star(r);
    report.expect("chordal", true, is_chordal(g));
    report.expect("tree", true, is_tree(g));
    const BettiTable table = sweep_with_consistency(report, g, field);
    const ExtremalReport ext = extremal_positions(table);
    report.expect("regularity", r, ext.regularity);
    report.expect("projective_dimension", r + 1, ext.projective_dimension);
    report.expect("extremal_positions", positions_json(std::vector<BettiPosition>{{r + 1, r}}),
                  positions_json(extremal_list(ext)));
    const UniqueExtremal unique = has_unique_extremal(table);
    report.expect("unique_extremal", true, unique.unique);
    report.expect("bouquet_set_type", nlohmann::json::array({r + 1, r}),
                  describe_bouquet_set(g, first_step_bouquets(r)));
    const auto cert = find_certificate(g, r + 1, r);
    report.expect("certificate_found", true, cert.has_value());
    if (cert)
        report.expect("certificate_valid", true, validate_bouquet_set(g, cert->bouquets));
    return finish(std::move(report), start);
}

VerificationReport verify_theorem(int r, int b, const FieldSpec& field)
{
    if (b < 2 || b > r)
        throw std::invalid_argument("verify_theorem: need 2 <= b <= r");
    if (2 * r + b > kMaxVerifyVertices)
        throw std::invalid_argument("verify_theorem: need 2r + b <= " + std::to_string(kMaxVerifyVertices));
    VerificationReport report;
    report.claim = "theorem";
    report.params = {{"r", r}, {"b", b}, {"field", field.name()}};
    const auto start = Clock::now();

    const Graph g = g_rb(r, b);
    report.expect("vertex_count", 2 * r + b, g.vertex_count());
    report.expect("edge_count", g_rb_edge_count(r, b), g.edge_count());
    report.expect("connected", true, is_connected(g));
    report.expect("chordal", true, is_chordal(g));
    report.expect("induced_matching_number", r, induced_matching_number(g));

    const BettiTable table = sweep_with_consistency(report, g, field);
    const ExtremalReport ext = extremal_positions(table);
    report.expect("regularity", r, ext.regularity);
    report.expect("projective_dimension", 2 * r + b - 1, ext.projective_dimension);
    report.expect("extremal_count", b, ext.count());

    std::vector<BettiPosition> expected;
    for (int i = 1; i <= b - 1; ++i)
        expected.emplace_back(r + b + i - 1, r - i + 1);
    expected.emplace_back(2 * r + b - 1, 1);
    const bool extremal_ok = extremal_list(ext) == expected;
    report.expect("extremal_positions", positions_json(expected), positions_json(extremal_list(ext)));
    if (r == 5 && b == 3) {
        nlohmann::json values = nlohmann::json::array();
        for (const ExtremalEntry& e : ext.entries)
            values.push_back(e.value);
        report.expect("extremal_values", nlohmann::json::array({2, 1, 1}), values);
    }

    // Two routes to the vanishing rectangle: the table itself, and the
    // absence of any bouquet certificate.
    std::vector<BettiPosition> rectangle;
    for (int i = 1; i <= r - b; ++i)
        for (int j = 2; j <= r - b - i + 2; ++j)
            rectangle.emplace_back(r + 2 * b - 2 + i, j);
    std::vector<BettiPosition> nonzero_in_table;
    std::vector<BettiPosition> certified_in_rectangle;
    for (const auto& [i, j] : rectangle) {
        if (table.get(i, j) != 0)
            nonzero_in_table.emplace_back(i, j);
        if (find_certificate(g, i, j))
            certified_in_rectangle.emplace_back(i, j);
    }
    report.expect("vanishing_rectangle_table", nlohmann::json::array(), positions_json(nonzero_in_table));
    report.expect("vanishing_rectangle_certificates", nlohmann::json::array(),
                  positions_json(certified_in_rectangle));
    const bool rectangle_ok = nonzero_in_table.empty();
    report.expect("vanishing_agrees_with_extremal", extremal_ok, rectangle_ok);

    nlohmann::json expected_types = nlohmann::json::array();
    nlohmann::json found_types = nlohmann::json::array();
    for (int i = 1; i <= b - 1; ++i) {
        expected_types.push_back({r + b + i - 1, r - i + 1});
        found_types.push_back(describe_bouquet_set(g, extremal_bouquets(r, b, i)));
    }
    report.expect("extremal_bouquet_set_types", expected_types, found_types);
    report.expect("spanning_bouquet_type", nlohmann::json::array({2 * r + b - 1, 1}),
                  describe_bouquet_set(g, spanning_bouquet(r, b)));
    return finish(std::move(report), start);
}

VerificationReport verify_certified_support(const Graph& g, const FieldSpec& field)
{
    require_size(g, kMaxSupportVertices, "verify_certified_support");
    VerificationReport report;
    report.claim = "certified-support";
    report.params = {{"n", g.vertex_count()}, {"edges", g.edge_count()}, {"field", field.name()}};
    const auto start = Clock::now();
    if (!is_chordal(g)) {
        report.status = VerificationReport::Status::skipped;
        report.note = "graph is not chordal";
        return finish(std::move(report), start);
    }
    const BettiTable table = sweep_with_consistency(report, g, field);
    const auto certified = certified_positions(g);
    report.expect("certified_positions_equal_support", positions_json(table.support()),
                  positions_json(certified));

    // Each certified position must come with a certificate that checks out.
    const int indmatch = induced_matching_number(g);
    std::vector<BettiPosition> bad;
    for (const auto& [i, j] : certified) {
        const auto cert = find_certificate(g, i, j);
        const bool ok = cert && cert->type == BettiPosition{i, j} && cert->witness.size() == i + j &&
                        j <= indmatch && (j == 0 || validate_bouquet_set(g, cert->bouquets));
        if (!ok)
            bad.emplace_back(i, j);
    }
    report.expect("certificates_valid", nlohmann::json::array(), positions_json(bad));
    return finish(std::move(report), start);
}

VerificationReport verify_g_pr1(int p, int r, const FieldSpec& field)
{
    if (r < 1 || r >= p)
        throw std::invalid_argument("verify_g_pr1: need 1 <= r < p");
    if (p + r > kMaxVerifyVertices)
        throw std::invalid_argument("verify_g_pr1: need p + r <= " + std::to_string(kMaxVerifyVertices));
    VerificationReport report;
    report.claim = "gpr1";
    report.params = {{"p", p}, {"r", r}, {"field", field.name()}};
    const auto start = Clock::now();

    const Graph g = g_pr1(p, r);
    report.expect("tree", true, is_tree(g));
    if (p == r + 1)
        report.expect("equals_path_star", true, g == path_star(r));
    const BettiTable table = sweep_with_consistency(report, g, field);
    const ExtremalReport ext = extremal_positions(table);
    report.expect("regularity", r, ext.regularity);
    report.expect("projective_dimension", p, ext.projective_dimension);
    report.expect("extremal_positions", positions_json(std::vector<BettiPosition>{{p, r}}),
                  positions_json(extremal_list(ext)));
    report.expect("unique_extremal", true, has_unique_extremal(table).unique);
    report.expect("certificate_found", true, find_certificate(g, p, r).has_value());
    return finish(std::move(report), start);
}

VerificationReport verify_reg_eq_indmatch(const Graph& g, const FieldSpec& field)
{
    require_size(g, kMaxVerifyVertices, "verify_reg_eq_indmatch");
    VerificationReport report;
    report.claim = "reg-indmatch";
    report.params = {{"n", g.vertex_count()}, {"edges", g.edge_count()}, {"field", field.name()}};
    const auto start = Clock::now();
    if (!is_chordal(g)) {
        report.status = VerificationReport::Status::skipped;
        report.note = "graph is not chordal";
        return finish(std::move(report), start);
    }
    const BettiTable table = betti_table(g, field);
    report.expect("regularity_equals_indmatch", induced_matching_number(g), regularity(table));
    return finish(std::move(report), start);
}

} // namespace edgebetti
