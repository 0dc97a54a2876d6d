#pragma once

// Test-only: the map and its inverse evaluated straight from the index
// families (per residue of the index mod L), without the per-part shortcut
// the library uses. Bounded by the largest index that can be nonzero.

#include <array>
#include <cstdint>
#include <vector>

#include "partbij/params.hpp"
#include "partbij/partition.hpp"

namespace partbij::testing {

enum class IndexFamily { Zero = 0, G = 1, KG = 2 };

/* hits[N][f] = number of (t, i, j) in family f that address index N, for
 * N = 1..bound (hits[0] is unused). */
std::vector<std::array<int, 3>> index_family_hits(Params const& ps, std::uint64_t bound);

/* d_N for every N up to max(M, p) * largest part, from the three families.
 * Throws std::logic_error if an index is assigned twice or never. */
Partition literal_forward(Params const& ps, Partition const& lam);

/* h_i = k_i + g_i recovered through the case table on D mod p. Throws
 * std::logic_error on double or missing assignment. */
Partition literal_inverse(Params const& ps, Partition const& mu);

} // namespace partbij::testing
