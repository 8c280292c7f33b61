#include "edgebetti/betti_analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "edgebetti/graph_io.hpp"

namespace edgebetti {

int regularity(const BettiTable& t)
{
    int reg = 0;
    for (const auto& [pos, value] : t.entries())
        reg = std::max(reg, pos.second);
    return reg;
}

int projective_dimension(const BettiTable& t)
{
    int pd = 0;
    for (const auto& [pos, value] : t.entries())
        pd = std::max(pd, pos.first);
    return pd;
}

ExtremalReport extremal_positions(const BettiTable& t)
{
    ExtremalReport report;
    report.regularity = regularity(t);
    report.projective_dimension = projective_dimension(t);
    const bool trivial = t.size() == 1;
    for (const auto& [pos, value] : t.entries()) {
        const auto [i, j] = pos;
        if (i == 0 && j == 0 && !trivial)
            continue;
        const bool dominated = std::any_of(t.entries().begin(), t.entries().end(), [&](const auto& other) {
            const auto [k, l] = other.first;
            return (k != i || l != j) && k >= i && l >= j;
        });
        if (!dominated)
            report.entries.push_back({i, j, value});
    }
    // std::map order already sorts by i.
    report.unique = report.entries.size() == 1;
    return report;
}

UniqueExtremal has_unique_extremal(const BettiTable& t)
{
    const ExtremalReport report = extremal_positions(t);
    const BettiPosition corner{report.projective_dimension, report.regularity};
    const bool corner_present = t.get(corner.first, corner.second) != 0;
    if (corner_present != report.unique)
        throw std::logic_error("unique-extremal equivalence violated");
    return {report.unique, report.unique ? corner : BettiPosition{0, 0}};
}

TableFormat parse_table_format(std::string_view name)
{
    if (name == "grid")
        return TableFormat::grid;
    if (name == "json")
        return TableFormat::json;
    if (name == "csv")
        return TableFormat::csv;
    throw std::invalid_argument("unknown table format \"" + std::string(name) +
                                "\" (expected grid, json or csv)");
}

namespace {

std::string render_grid(const BettiTable& t)
{
    const int rows = regularity(t) + 1;
    const int cols = projective_dimension(t) + 1;
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows),
                                                std::vector<std::string>(static_cast<std::size_t>(cols), "."));
    for (const auto& [pos, value] : t.entries())
        cells[pos.second][pos.first] = std::to_string(value);
    std::vector<std::size_t> width(static_cast<std::size_t>(cols), 1);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out += ' ';
            out.append(width[c] - row[c].size(), ' ');
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string render_table(const BettiTable& t, TableFormat format)
{
    switch (format) {
    case TableFormat::grid:
        return render_grid(t);
    case TableFormat::json: {
        nlohmann::json doc;
        doc["n"] = t.variable_count();
        doc["entries"] = nlohmann::json::array();
        for (const auto& [pos, value] : t.entries())
            doc["entries"].push_back({pos.first, pos.second, value});
        return doc.dump() + "\n";
    }
    case TableFormat::csv: {
        std::ostringstream out;
        out << "i,j,value\n";
        for (const auto& [pos, value] : t.entries())
            out << pos.first << ',' << pos.second << ',' << value << '\n';
        return out.str();
    }
    }
    throw std::invalid_argument("unknown table format");
}

BettiTable parse_table_json(std::string_view text)
{
    try {
        const auto doc = nlohmann::json::parse(text);
        BettiTable t(doc.at("n").get<int>());
        for (const auto& entry : doc.at("entries")) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("table json: entries must be [i, j, value]");
            t.set(entry[0].get<int>(), entry[1].get<int>(), entry[2].get<std::uint64_t>());
        }
        if (t.get(0, 0) != 1)
            throw ParseError("table json: beta_{0,0} must be 1");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("table json: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(std::string("table json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("table json: ") + e.what());
    }
}

} // namespace edgebetti
