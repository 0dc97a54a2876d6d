#pragma once

#include <cstdint>

#include "partbij/params.hpp"
#include "partbij/partition.hpp"

namespace partbij {

/* h = k + g with k = M*v, v = a_inv*h mod p, g >= 0 and p | g. */
struct MultiplicityDecomposition {
    std::uint64_t v = 0;
    std::uint64_t k = 0;
    std::uint64_t g = 0;

    friend bool operator==(MultiplicityDecomposition const&, MultiplicityDecomposition const&) = default;
};

/* Throws family_violation (with residue class and threshold) when h is not
 * an allowed multiplicity. `part` is only used for the diagnostic. */
MultiplicityDecomposition decompose_multiplicity(Params const& ps, mult_t h, part_t part = 0);

/*
 * The map from the multiplicity-restricted family to the part-restricted
 * family. For each part i of lam with decomposition (v, k, g):
 *   v copies of M*i,
 *   g copies of i          if M | i,
 *   g/p copies of p*i      otherwise.
 * Weight and membership are preserved; throws family_violation if lam is
 * not in the A family.
 */
Partition forward(Params const& ps, Partition const& lam);

/*
 * Inverse of forward. For each part N of mu with multiplicity D:
 *   M | N: contributes M*(D mod p) to h_{N/M} and D - (D mod p) to h_N,
 *   p | N: contributes p*D to h_{N/p}.
 * Throws family_violation naming the first forbidden part.
 */
Partition inverse(Params const& ps, Partition const& mu);

/* The MacMahon-case map (p, a, r) = (2, 1, 1), coded directly from its own
 * residue table mod 6. Kept as a reference for differential tests. */
Partition aepr_forward(Partition const& lam);

} // namespace partbij
