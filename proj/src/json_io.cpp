#include "partbij/json_io.hpp"

#include <sstream>

#include "partbij/errors.hpp"

namespace partbij {

nlohmann::ordered_json partition_to_json(Partition const& pt)
{
    auto parts = nlohmann::ordered_json::array();
    for (auto const& [part, mult] : pt)
        parts.push_back({part, mult});
    return {{"parts", std::move(parts)}};
}

Partition partition_from_json(nlohmann::json const& j)
{
    if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array())
        throw input_error("partition JSON must be an object with a \"parts\" array");
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;
    for (auto const& pair : j["parts"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw input_error("each partition entry must be a [part, multiplicity] integer pair");
        if (pair[0].is_number_unsigned() && pair[0].get<std::uint64_t>() > INT64_MAX)
            throw overflow_error("part exceeds the supported range");
        if (pair[1].is_number_unsigned() && pair[1].get<std::uint64_t>() > INT64_MAX)
            throw overflow_error("multiplicity exceeds the supported range");
        entries.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
    }
    return Partition::from_signed_entries(entries);
}

nlohmann::ordered_json params_to_json(Params const& ps)
{
    return {{"p", ps.p}, {"a", ps.a}, {"r", ps.r}, {"a_inv", ps.a_inv}, {"M", ps.block}, {"L", ps.modulus}};
}

nlohmann::ordered_json report_to_json(VerificationReport const& report)
{
    auto per_n = nlohmann::ordered_json::array();
    for (auto const& rec : report.per_n)
        per_n.push_back({
            {"n", rec.n},
            {"count_A", rec.count_a},
            {"count_B", rec.count_b},
            {"image_size", rec.image_size},
            {"roundtrip_failures", rec.roundtrip_failures},
            {"weight_failures", rec.weight_failures},
            {"membership_failures", rec.membership_failures},
            {"collision_failures", rec.collision_failures},
            {"pass", rec.ok()},
        });
    return {
        {"params", params_to_json(report.params)},
        {"n_max", report.n_max},
        {"per_n", std::move(per_n)},
        {"pass", report.pass},
    };
}

std::string count_table_json(std::vector<bigint> const& counts)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t n = 0; n < counts.size(); ++n) {
        if (n != 0)
            out << ',';
        out << '[' << n << ',' << counts[n] << ']';
    }
    out << ']';
    return out.str();
}

std::string count_table_csv(std::vector<bigint> const& counts)
{
    std::ostringstream out;
    for (std::size_t n = 0; n < counts.size(); ++n)
        out << n << ',' << counts[n] << '\n';
    return out.str();
}

} // namespace partbij
