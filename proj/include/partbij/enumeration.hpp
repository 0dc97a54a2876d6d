#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "partbij/params.hpp"
#include "partbij/partition.hpp"

namespace partbij {

inline constexpr std::uint64_t default_enumeration_cap = 60;

/*
 * Generates every partition of n exactly once, in lexicographically
 * decreasing order of the part list: n, (n-1,1), (n-2,2), ..., (1,...,1).
 * Throws resource_limit at construction when n > cap.
 */
class PartitionStream {
public:
    explicit PartitionStream(std::uint64_t n, std::uint64_t cap = default_enumeration_cap);

    std::optional<Partition> next();

    // Current part list, largest first; valid after next() returned a value.
    std::vector<part_t> const& parts() const noexcept { return parts_; }

private:
    std::uint64_t n_;
    std::vector<part_t> parts_;
    bool started_ = false;
    bool done_ = false;

    bool advance();
};

std::vector<Partition> enumerate_partitions(std::uint64_t n, std::uint64_t cap = default_enumeration_cap);

std::uint64_t count_family(Params const& ps, Family f, std::uint64_t n,
                           std::uint64_t cap = default_enumeration_cap);

struct VerificationRecord {
    std::uint64_t n = 0;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
    std::uint64_t image_size = 0;
    std::uint64_t roundtrip_failures = 0;
    std::uint64_t weight_failures = 0;
    std::uint64_t membership_failures = 0;
    std::uint64_t collision_failures = 0;

    bool ok() const noexcept
    {
        return roundtrip_failures == 0 && weight_failures == 0 && membership_failures == 0
            && collision_failures == 0 && count_a == count_b && image_size == count_b;
    }

    friend bool operator==(VerificationRecord const&, VerificationRecord const&) = default;
};

struct VerificationReport {
    Params params;
    std::uint64_t n_max = 0;
    std::vector<VerificationRecord> per_n; // ordered by n = 0..n_max
    bool pass = false;

    friend bool operator==(VerificationReport const&, VerificationReport const&) = default;
};

/* Checks a single weight n: forward images are in B(n), weights match, both
 * round trips are the identity, no two preimages collide, and the image has
 * exactly |B(n)| elements. */
VerificationRecord verify_weight(Params const& ps, std::uint64_t n,
                                 std::uint64_t cap = default_enumeration_cap);

/* Runs verify_weight for n = 0..n_max. `jobs` > 1 spreads distinct n over
 * threads; the report does not depend on it. */
VerificationReport verify_bijection(Params const& ps, std::uint64_t n_max, unsigned jobs = 1,
                                    std::uint64_t cap = default_enumeration_cap);

} // namespace partbij
