#ifndef EDGEBETTI_VERIFY_HPP
#define EDGEBETTI_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "edgebetti/bouquets.hpp"
#include "edgebetti/field.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

/// Graph-size caps for the harness.
inline constexpr int kMaxVerifyVertices = 13;
inline constexpr int kMaxSupportVertices = 10;

struct Check {
    std::string name;
    nlohmann::json expected;
    nlohmann::json computed;
    bool pass = false;
};

struct VerificationReport {
    enum class Status { pass, fail, skipped };

    std::string claim;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Check> checks;
    Status status = Status::pass;
    std::string note;
    double runtime_ms = 0.0;

    bool passed() const { return status != Status::fail; }
    /// Adds a check whose pass flag is expected == computed.
    void expect(std::string name, nlohmann::json expected, nlohmann::json computed);
    /// One JSON object on one line. Runtime is left out unless asked for, so
    /// the default output is reproducible byte for byte.
    std::string to_json_line(bool with_runtime = false) const;
};

std::string_view to_string(VerificationReport::Status status);

/// Path star with r arms (r <= 6): chordal tree, reg = r, projdim = r + 1,
/// single extremal number at (r+1, r), witnessed by the r-bouquet set.
VerificationReport verify_first_step(int r, const FieldSpec& field = FieldSpec::rationals());

/**
 * g_rb(r, b) for 2 <= b <= r, 2r + b <= 13: chordality, indmatch = reg = r,
 * projdim = 2r+b-1, exactly b extremal numbers at (r+b+i-1, r-i+1),
 * i = 1..b-1, and (2r+b-1, 1), the vanishing rectangle
 * β_{r+2b-2+i, ·+j} = 0 (i = 1..r-b, j = 2..r-b-i+2) both from the table
 * and from the certificate search, plus the explicit bouquet sets that
 * witness each extremal position. For (5, 3) the extremal values are also
 * checked (2, 1, 1).
 */
VerificationReport verify_theorem(int r, int b, const FieldSpec& field = FieldSpec::rationals());

/// Certified positions against the Betti support; skipped for non-chordal
/// input. Throws std::invalid_argument above kMaxSupportVertices.
VerificationReport verify_certified_support(const Graph& g, const FieldSpec& field = FieldSpec::rationals());

/// g_pr1(p, r), 1 <= r < p, p + r <= 13: reg = r, projdim = p, one extremal
/// number at (p, r); for p = r + 1 also identity with path_star(r).
VerificationReport verify_g_pr1(int p, int r, const FieldSpec& field = FieldSpec::rationals());

/// reg(S/I(g)) = indmatch(g) on chordal g; skipped otherwise.
VerificationReport verify_reg_eq_indmatch(const Graph& g,
                                          const FieldSpec& field = FieldSpec::rationals());

/// The r-bouquet set of the path star: {x_i, y_i} for i < r and {y_r; x_r, z}.
BouquetSet first_step_bouquets(int r);
/// Bouquet set witnessing the i-th extremal number of g_rb(r, b): w_i with
/// all its neighbors, then {x_k; y_k} for k = i+1..r.
BouquetSet extremal_bouquets(int r, int b, int i);
/// The single bouquet rooted at z spanning g_rb(r, b).
BouquetSet spanning_bouquet(int r, int b);

} // namespace edgebetti

#endif
