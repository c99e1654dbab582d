#include "normform/report.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

#include <fmt/format.h>

namespace normform {

using nlohmann::ordered_json;

ordered_json bounds_to_json(DerivedBounds const & b)
{
    ordered_json j;
    j["schema_version"] = schema_version;
    j["m_max"] = b.m_max;
    j["t_max_coarse"] = b.t_max_coarse;
    j["t_max"] = b.t_max;
    return j;
}

namespace {

ordered_json rows_to_json(std::vector<CandidateRow> const & rows)
{
    ordered_json a = ordered_json::array();
    for (auto const & r : rows)
        a.push_back({{"t", r.t}, {"count", r.count}});
    return a;
}

} // namespace

ordered_json table_to_json(CandidateTable const & table, std::int64_t t_min, std::int64_t t_max,
                           std::int64_t m_max)
{
    ordered_json j;
    j["schema_version"] = schema_version;
    j["t_min"] = t_min;
    j["t_max"] = t_max;
    j["m_max"] = m_max;
    j["total"] = table.total();
    j["table"] = rows_to_json(table.rows);
    ordered_json pairs = ordered_json::array();
    for (auto const & p : table.pairs)
        pairs.push_back({{"t", p.t}, {"m", p.m}});
    j["pairs"] = std::move(pairs);
    return j;
}

ordered_json elimination_to_json(EliminationResult const & r)
{
    ordered_json j;
    j["t"] = r.t;
    j["m"] = r.m;
    j["status"] = std::string(to_string(r.status));
    if (r.status == EliminationResult::Status::Eliminated && r.method == EliminationResult::Method::Modular)
        j["witness_prime"] = r.witness_prime;
    else
        j["witness_prime"] = nullptr;
    if (r.method == EliminationResult::Method::Exact)
        j["method"] = "exact";
    return j;
}

ordered_json report_to_json(VerificationReport const & report)
{
    ordered_json j;
    j["schema_version"] = schema_version;
    j["m_max"] = report.bounds.m_max;
    j["t_max_coarse"] = report.bounds.t_max_coarse;
    j["t_max"] = report.bounds.t_max;
    j["checks"] = {
        {"fundamental_unit", report.fundamental_unit_ok},
        {"functional_solutions", report.functional_solutions_ok},
        {"negative_exponents", report.negative_exponents_ok},
    };
    j["candidates"] = report.table.total();
    j["survivors"] = report.survivors;
    j["table"] = rows_to_json(report.table.rows);
    ordered_json pairs = ordered_json::array();
    for (auto const & r : report.eliminations)
        pairs.push_back(elimination_to_json(r));
    j["pairs"] = std::move(pairs);
    j["verdict"] = report.verified ? "verified" : "failed";
    return j;
}

std::string table_to_csv(CandidateTable const & table)
{
    std::string out = "t,count\n";
    for (auto const & r : table.rows)
        out += fmt::format("{},{}\n", r.t, r.count);
    return out;
}

std::vector<CandidateRow> table_rows_from_csv(std::string_view csv)
{
    auto next_line = [&csv]() -> std::optional<std::string_view> {
        if (csv.empty())
            return std::nullopt;
        auto const nl = csv.find('\n');
        std::string_view line = csv.substr(0, nl);
        csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        return line;
    };
    auto parse = [](std::string_view field) {
        std::int64_t v = 0;
        auto const [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw std::invalid_argument(fmt::format("bad integer field '{}'", field));
        return v;
    };

    auto header = next_line();
    if (!header || *header != "t,count")
        throw std::invalid_argument("CSV table must start with the header 't,count'");
    std::vector<CandidateRow> rows;
    while (auto line = next_line()) {
        if (line->empty())
            continue;
        auto const comma = line->find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument(fmt::format("CSV row without a comma: '{}'", *line));
        rows.push_back({parse(line->substr(0, comma)), parse(line->substr(comma + 1))});
    }
    return rows;
}

} // namespace normform
