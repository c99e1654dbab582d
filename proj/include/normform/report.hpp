#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "normform/log_bounds.hpp"
#include "normform/sieve.hpp"

namespace normform {

inline constexpr int schema_version = 1;

/* {schema_version, m_max, t_max_coarse, t_max} */
nlohmann::ordered_json bounds_to_json(DerivedBounds const & b);

/* {schema_version, t_min, t_max, m_max, total, table: [{t, count}], pairs: [{t, m}]} */
nlohmann::ordered_json table_to_json(CandidateTable const & table, std::int64_t t_min, std::int64_t t_max,
                                     std::int64_t m_max);

/* {schema_version, m_max, t_max_coarse, t_max, checks, candidates, survivors,
 *  table: [{t, count}], pairs: [{t, m, status, witness_prime}], verdict} */
nlohmann::ordered_json report_to_json(VerificationReport const & report);

nlohmann::ordered_json elimination_to_json(EliminationResult const & r);

/* "t,count" header then one row per t. */
std::string table_to_csv(CandidateTable const & table);

/* Inverse of table_to_csv; throws std::invalid_argument on malformed input. */
std::vector<CandidateRow> table_rows_from_csv(std::string_view csv);

} // namespace normform
