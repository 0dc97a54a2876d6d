#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace partbij {

/* Malformed or out-of-domain user input (syntax, part 0, negative counts). */
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/* (p, a, r) does not satisfy p >= 2, 1 <= a < p, gcd(a, p) = 1, r >= 0. */
class param_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/* A partition handed to the map (or inverse) is not in its source family. */
class family_violation : public std::domain_error {
public:
    enum class kind { multiplicity_below_threshold, forbidden_part };

    family_violation(kind k, std::uint64_t part, std::uint64_t multiplicity,
                     std::uint64_t residue_class, std::uint64_t threshold,
                     const std::string& what)
        : std::domain_error(what)
        , kind_(k)
        , part_(part)
        , multiplicity_(multiplicity)
        , residue_class_(residue_class)
        , threshold_(threshold)
    {
    }

    kind violation() const noexcept { return kind_; }
    std::uint64_t part() const noexcept { return part_; }
    std::uint64_t multiplicity() const noexcept { return multiplicity_; }
    // j with multiplicity = j*a (mod p); zero for forbidden parts.
    std::uint64_t residue_class() const noexcept { return residue_class_; }
    // j*(p*r + a); zero for forbidden parts.
    std::uint64_t threshold() const noexcept { return threshold_; }

private:
    kind kind_;
    std::uint64_t part_;
    std::uint64_t multiplicity_;
    std::uint64_t residue_class_;
    std::uint64_t threshold_;
};

/* A 64-bit weight, part or multiplicity computation would wrap. */
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/* A requested size exceeds the configured cap (enumeration n, series order). */
class resource_limit : public std::length_error {
public:
    using std::length_error::length_error;
};

[[noreturn]] void invariant_failure(const char* expr, const char* file, int line);

} // namespace partbij

// Internal invariants guaranteed by preconditions. A failure is a bug, not
// bad input, so it aborts instead of throwing.
#define PARTBIJ_INVARIANT(expr) \
    ((expr) ? static_cast<void>(0) : ::partbij::invariant_failure(#expr, __FILE__, __LINE__))
