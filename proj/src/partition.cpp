#include "partbij/partition.hpp"

#include <charconv>
#include <string>

#include "partbij/checked.hpp"
#include "partbij/errors.hpp"

namespace partbij {

Partition Partition::from_entries(std::vector<std::pair<part_t, mult_t>> const& entries)
{
    Partition out;
    for (auto const& [part, mult] : entries) {
        if (part == 0)
            throw input_error("part 0 is not a positive integer");
        if (mult == 0)
            continue;
        auto& slot = out.parts_[part];
        slot = checked_add(slot, mult, "multiplicity");
    }
    std::uint64_t w = 0;
    for (auto const& [part, mult] : out.parts_)
        w = checked_add(w, checked_mul(part, mult, "weight"), "weight");
    out.weight_ = w;
    return out;
}

Partition Partition::from_signed_entries(std::vector<std::pair<std::int64_t, std::int64_t>> const& entries)
{
    std::vector<std::pair<part_t, mult_t>> unsigned_entries;
    unsigned_entries.reserve(entries.size());
    for (auto const& [part, mult] : entries) {
        if (part <= 0)
            throw input_error("part " + std::to_string(part) + " is not a positive integer");
        if (mult < 0)
            throw input_error("multiplicity " + std::to_string(mult) + " of part " + std::to_string(part)
                              + " is negative");
        unsigned_entries.emplace_back(static_cast<part_t>(part), static_cast<mult_t>(mult));
    }
    return from_entries(unsigned_entries);
}

mult_t Partition::multiplicity(part_t i) const noexcept
{
    auto it = parts_.find(i);
    return it == parts_.end() ? 0 : it->second;
}

std::uint64_t Partition::length() const
{
    std::uint64_t n = 0;
    for (auto const& [part, mult] : parts_)
        n = checked_add(n, mult, "length");
    return n;
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_blank(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_blank(s.back()))
        s.remove_suffix(1);
    return s;
}

std::uint64_t parse_positive(std::string_view digits, std::string_view token)
{
    if (digits.empty())
        throw input_error("malformed token '" + std::string(token) + "': missing number");
    for (char c : digits)
        if (c < '0' || c > '9')
            throw input_error("malformed token '" + std::string(token) + "': expected decimal digits");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw overflow_error("number in token '" + std::string(token) + "' exceeds 64 bits");
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw input_error("malformed token '" + std::string(token) + "'");
    if (value == 0)
        throw input_error("token '" + std::string(token) + "': parts and exponents must be positive");
    return value;
}

} // namespace

Partition parse_partition(std::string_view text)
{
    std::vector<std::pair<part_t, mult_t>> entries;
    if (trim(text).empty())
        return Partition{};
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        if (token.empty())
            throw input_error("empty token in partition text");
        auto caret = token.find('^');
        if (caret == std::string_view::npos) {
            entries.emplace_back(parse_positive(token, token), 1);
        } else {
            auto part = parse_positive(trim(token.substr(0, caret)), token);
            auto mult = parse_positive(trim(token.substr(caret + 1)), token);
            entries.emplace_back(part, mult);
        }
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return Partition::from_entries(entries);
}

std::string format_partition(Partition const& pt)
{
    std::string out;
    for (auto const& [part, mult] : pt) {
        if (!out.empty())
            out += ',';
        out += std::to_string(part);
        if (mult != 1) {
            out += '^';
            out += std::to_string(mult);
        }
    }
    return out;
}

} // namespace partbij
