#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "partbij/partition.hpp"

namespace partbij {

/*
 * Validated parameter triple (p, a, r) with the derived quantities
 *   block      M = p*r + a
 *   modulus    L = p*p*r + p*a = p*M
 *   a_inv      inverse of a modulo p, in [1, p-1]
 * Constructed only through validate_params.
 */
struct Params {
    std::uint64_t p = 0;
    std::uint64_t a = 0;
    std::uint64_t r = 0;
    std::uint64_t a_inv = 0;
    std::uint64_t block = 0;   // M
    std::uint64_t modulus = 0; // L

    friend bool operator==(Params const&, Params const&) = default;
};

/* Throws param_error naming the violated condition. */
Params validate_params(std::int64_t p, std::int64_t a, std::int64_t r);

enum class PartClass { KBlock, GBlock, Forbidden };

std::string_view to_string(PartClass c) noexcept;

/* The j in [0, p-1] with m = j*a (mod p). */
std::uint64_t residue_class(Params const& ps, mult_t m) noexcept;

/* m >= j*M for the residue class j of m. */
bool is_allowed_multiplicity(Params const& ps, mult_t m) noexcept;

bool in_A(Params const& ps, Partition const& pt) noexcept;

/* KBlock if M | N, else GBlock if p | N, else Forbidden. N >= 1. */
PartClass classify_part(Params const& ps, part_t n) noexcept;

bool in_B(Params const& ps, Partition const& pt) noexcept;

/* The residues (p - s)*M mod L for s = 1..p-1, sorted ascending. These are
 * the only residues mod L a non-multiple of p may have in a B-side part. */
std::vector<std::uint64_t> allowed_nonmultiple_residues(Params const& ps);

enum class Family { A, B };

bool in_family(Params const& ps, Family f, Partition const& pt) noexcept;

} // namespace partbij
