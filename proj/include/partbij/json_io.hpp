#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "partbij/enumeration.hpp"
#include "partbij/partition.hpp"
#include "partbij/series.hpp"

namespace partbij {

nlohmann::ordered_json partition_to_json(Partition const& pt);

/* Accepts {"parts": [[P, M], ...]} in any order; throws input_error. */
Partition partition_from_json(nlohmann::json const& j);

nlohmann::ordered_json params_to_json(Params const& ps);
nlohmann::ordered_json report_to_json(VerificationReport const& report);

/* [[n, count], ...]. Written by hand so counts beyond 64 bits stay exact
 * decimal literals. */
std::string count_table_json(std::vector<bigint> const& counts);

/* "n,count" rows, one per line. */
std::string count_table_csv(std::vector<bigint> const& counts);

} // namespace partbij
