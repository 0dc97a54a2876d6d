#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partbij {

using part_t = std::uint64_t;
using mult_t = std::uint64_t;

/*
 * An integer partition stored sparsely as part -> multiplicity, largest part
 * first. Zero multiplicities are never stored, so two partitions are equal
 * iff their maps are equal. The weight is computed once at construction and
 * checked for 64-bit overflow.
 */
class Partition {
public:
    using map_type = std::map<part_t, mult_t, std::greater<>>;

    Partition() = default;

    /* Merges duplicate parts and drops zero multiplicities. Throws
     * input_error on part 0, overflow_error if the weight wraps. */
    static Partition from_entries(std::vector<std::pair<part_t, mult_t>> const& entries);

    /* Same, for entries coming from untrusted signed sources. */
    static Partition from_signed_entries(std::vector<std::pair<std::int64_t, std::int64_t>> const& entries);

    mult_t multiplicity(part_t i) const noexcept;
    std::uint64_t weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t distinct_parts() const noexcept { return parts_.size(); }
    part_t largest_part() const noexcept { return parts_.empty() ? 0 : parts_.begin()->first; }
    std::uint64_t length() const;

    map_type const& entries() const noexcept { return parts_; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(Partition const& x, Partition const& y) { return x.parts_ == y.parts_; }
    friend bool operator<(Partition const& x, Partition const& y) { return x.parts_ < y.parts_; }

private:
    map_type parts_;
    std::uint64_t weight_ = 0;
};

inline Partition make_partition(std::vector<std::pair<part_t, mult_t>> const& entries)
{
    return Partition::from_entries(entries);
}

inline mult_t multiplicity(Partition const& pt, part_t i) { return pt.multiplicity(i); }
inline std::uint64_t weight(Partition const& pt) { return pt.weight(); }

/* Text format: comma-separated "P" or "P^M" tokens, blanks around tokens
 * ignored, empty string is the empty partition. */
Partition parse_partition(std::string_view text);

/* Canonical text: strictly decreasing parts, exponent omitted when 1. */
std::string format_partition(Partition const& pt);

} // namespace partbij
