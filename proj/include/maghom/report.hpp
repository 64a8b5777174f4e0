/**
 * Human-readable and structured renderings of magnitude homology tables,
 * plus grouping of (a,b) rows by a user-supplied pair labeling.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "geometric.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "magnitude.hpp"

namespace maghom {

inline constexpr int report_format_version = 1;
inline constexpr const char* library_version = "0.1.0";

/**
 * Maps ordered vertex pairs to type labels. Text format: one "u v label"
 * triple per line, '#' comments. Type order is first appearance.
 */
class PairLabeling {
public:
    static PairLabeling parse(std::istream& in, const Graph& g)
    {
        PairLabeling out;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::vector<std::string> tok;
            for (std::string t; ls >> t;) tok.push_back(t);
            if (tok.empty()) continue;
            if (tok.size() != 3) {
                throw std::invalid_argument("labeling line " + std::to_string(lineno) + ": expected 'u v label'");
            }
            auto key = std::make_pair(g.index_of(tok[0]), g.index_of(tok[1]));
            if (!out.label_.emplace(key, tok[2]).second) {
                throw std::invalid_argument("labeling line " + std::to_string(lineno) + ": pair " + tok[0] + "," +
                                            tok[1] + " labeled twice");
            }
            if (std::find(out.types_.begin(), out.types_.end(), tok[2]) == out.types_.end())
                out.types_.push_back(tok[2]);
        }
        for (vertex_t a = 0; a < g.num_vertices(); ++a)
            for (vertex_t b = 0; b < g.num_vertices(); ++b)
                if (!out.label_.count({a, b}))
                    throw std::invalid_argument("labeling misses pair " + g.label(a) + "," + g.label(b));
        return out;
    }

    static PairLabeling parse(std::string_view text, const Graph& g)
    {
        std::istringstream in{std::string(text)};
        return parse(in, g);
    }

    const std::vector<std::string>& types() const { return types_; }
    const std::string& label(vertex_t a, vertex_t b) const { return label_.at({a, b}); }

private:
    std::map<std::pair<vertex_t, vertex_t>, std::string> label_;
    std::vector<std::string> types_;
};

/// Rows of one type summed together.
struct TypeRow {
    std::string type;
    std::size_t members = 0;
    std::vector<HomologyGroup> groups;
};

inline std::vector<TypeRow> group_by_type(const MagnitudeTable& t, const PairLabeling& labeling)
{
    std::vector<TypeRow> out;
    for (const auto& type : labeling.types()) {
        std::vector<ComponentHomology> members;
        for (const auto& c : t.components)
            if (labeling.label(c.key.a, c.key.b) == type) members.push_back(c);
        out.push_back(TypeRow{type, members.size(), sum_groups(members, t.kmax)});
    }
    return out;
}

/// Everything a report needs besides the tables themselves.
struct ReportContext {
    std::string graph_descriptor;
    std::string method;
    std::optional<std::uint64_t> seed;
    std::optional<std::pair<vertex_t, vertex_t>> pair_filter;
    const PairLabeling* labeling = nullptr;
};

namespace detail {

inline nlohmann::json bigint_json(const BigInt& v)
{
    if (v <= BigInt(std::numeric_limits<std::int64_t>::max())) return v.convert_to<std::int64_t>();
    return v.str();
}

inline nlohmann::json groups_json(const std::vector<HomologyGroup>& groups)
{
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < groups.size(); ++k) {
        nlohmann::json tors = nlohmann::json::array();
        for (const auto& t : groups[k].torsion) tors.push_back(bigint_json(t));
        arr.push_back({{"k", k}, {"betti", groups[k].betti}, {"torsion", tors}});
    }
    return arr;
}

inline bool row_selected(const ReportContext& ctx, const ComponentKey& key)
{
    return !ctx.pair_filter || (ctx.pair_filter->first == key.a && ctx.pair_filter->second == key.b);
}

} // namespace detail

/// Versioned structured report; key order is fixed so output is reproducible.
inline nlohmann::ordered_json tables_to_json(const Graph& g, const std::vector<MagnitudeTable>& tables,
                                             const ReportContext& ctx)
{
    nlohmann::ordered_json j;
    j["format_version"] = report_format_version;
    j["generator"] = {{"name", "maghom"}, {"version", library_version}};
    j["graph"] = {{"descriptor", ctx.graph_descriptor},
                  {"vertices", g.num_vertices()},
                  {"edges", g.num_edges()}};
    j["method"] = ctx.method;
    if (ctx.seed) j["seed"] = *ctx.seed;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& t : tables) {
        nlohmann::ordered_json r;
        r["l"] = t.length;
        r["kmax"] = t.kmax;
        r["components"] = nlohmann::ordered_json::array();
        for (const auto& c : t.components) {
            if (!detail::row_selected(ctx, c.key)) continue;
            r["components"].push_back(
                {{"a", g.label(c.key.a)}, {"b", g.label(c.key.b)}, {"groups", detail::groups_json(c.groups)}});
        }
        if (ctx.labeling) {
            r["types"] = nlohmann::ordered_json::array();
            for (const auto& row : group_by_type(t, *ctx.labeling))
                r["types"].push_back(
                    {{"type", row.type}, {"members", row.members}, {"groups", detail::groups_json(row.groups)}});
        }
        r["totals"] = detail::groups_json(t.totals);
        j["results"].push_back(std::move(r));
    }
    return j;
}

/**
 * Fixed-width text table: one line per (a,b) (or per type when a labeling is
 * given), one column per degree k, and a totals line.
 */
inline void write_text_table(std::ostream& out, const Graph& g, const MagnitudeTable& t, const ReportContext& ctx)
{
    std::vector<std::pair<std::string, std::vector<HomologyGroup>>> rows;
    if (ctx.labeling) {
        for (auto& row : group_by_type(t, *ctx.labeling))
            rows.emplace_back(row.type + " x" + std::to_string(row.members), std::move(row.groups));
    } else {
        for (const auto& c : t.components)
            if (detail::row_selected(ctx, c.key))
                rows.emplace_back("(" + g.label(c.key.a) + "," + g.label(c.key.b) + ")", c.groups);
    }
    rows.emplace_back("total", t.totals);

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"pair"};
    for (std::size_t k = 0; k <= t.kmax; ++k) header.push_back("k=" + std::to_string(k));
    cells.push_back(header);
    for (const auto& [name, groups] : rows) {
        std::vector<std::string> line{name};
        for (const auto& h : groups) line.push_back(h.to_string());
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

    out << "MH_{k," << t.length << "}  graph=" << ctx.graph_descriptor << "  method=" << ctx.method << '\n';
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out << line[c];
            if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
        }
        out << '\n';
    }
}

inline nlohmann::ordered_json mismatch_to_json(const Graph& g, const Mismatch& m)
{
    auto group = [](const HomologyGroup& h) {
        nlohmann::ordered_json tors = nlohmann::ordered_json::array();
        for (const auto& t : h.torsion) tors.push_back(t.str());
        return nlohmann::ordered_json{{"betti", h.betti}, {"torsion", tors}};
    };
    return {{"graph", graph_to_json(g)},
            {"a", g.label(m.key.a)},
            {"b", g.label(m.key.b)},
            {"l", m.key.length},
            {"degree", m.degree},
            {"reason", m.reason},
            {"geometric", group(m.geometric)},
            {"direct", group(m.direct)}};
}

} // namespace maghom
