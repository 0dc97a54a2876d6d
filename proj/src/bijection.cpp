#include "partbij/bijection.hpp"

#include <string>
#include <utility>
#include <vector>

#include "partbij/checked.hpp"
#include "partbij/errors.hpp"

namespace partbij {

MultiplicityDecomposition decompose_multiplicity(Params const& ps, mult_t h, part_t part)
{
    MultiplicityDecomposition out;
    out.v = residue_class(ps, h);
    std::uint64_t k = 0;
    bool too_big = __builtin_mul_overflow(out.v, ps.block, &k);
    if (too_big || h < k) {
        std::string where = part == 0 ? std::string("multiplicity ")
                                      : "part " + std::to_string(part) + " has multiplicity ";
        std::string threshold = too_big ? std::string("(beyond 64 bits)") : std::to_string(k);
        throw family_violation(
            family_violation::kind::multiplicity_below_threshold, part, h, out.v, too_big ? 0 : k,
            where + std::to_string(h) + " = " + std::to_string(out.v) + "*a (mod p) with (p, a, r) = ("
                + std::to_string(ps.p) + ", " + std::to_string(ps.a) + ", " + std::to_string(ps.r)
                + "), below the threshold " + std::to_string(out.v) + "*(p*r + a) = " + threshold);
    }
    out.k = k;
    out.g = h - k;
    PARTBIJ_INVARIANT(out.g % ps.p == 0);
    return out;
}

Partition forward(Params const& ps, Partition const& lam)
{
    std::vector<std::pair<part_t, mult_t>> image;
    image.reserve(2 * lam.distinct_parts());
    for (auto const& [part, h] : lam) {
        auto dec = decompose_multiplicity(ps, h, part);
        if (dec.v != 0)
            image.emplace_back(checked_mul(ps.block, part, "image part M*i"), dec.v);
        if (dec.g == 0)
            continue;
        if (part % ps.block == 0)
            image.emplace_back(part, dec.g);
        else
            image.emplace_back(checked_mul(ps.p, part, "image part p*i"), dec.g / ps.p);
    }
    auto mu = Partition::from_entries(image);
#ifndef NDEBUG
    PARTBIJ_INVARIANT(in_B(ps, mu));
    PARTBIJ_INVARIANT(mu.weight() == lam.weight());
#endif
    return mu;
}

Partition inverse(Params const& ps, Partition const& mu)
{
    std::vector<std::pair<part_t, mult_t>> preimage;
    preimage.reserve(2 * mu.distinct_parts());
    for (auto const& [part, d] : mu) {
        switch (classify_part(ps, part)) {
        case PartClass::KBlock: {
            auto v = d % ps.p;
            if (v != 0)
                preimage.emplace_back(part / ps.block, checked_mul(ps.block, v, "k = M*v"));
            if (d - v != 0)
                preimage.emplace_back(part, d - v);
            break;
        }
        case PartClass::GBlock:
            preimage.emplace_back(part / ps.p, checked_mul(ps.p, d, "g = p*d"));
            break;
        case PartClass::Forbidden:
            throw family_violation(family_violation::kind::forbidden_part, part, d, 0, 0,
                                   "part " + std::to_string(part) + " is forbidden: divisible neither by p = "
                                       + std::to_string(ps.p) + " nor by p*r + a = " + std::to_string(ps.block));
        }
    }
    auto lam = Partition::from_entries(preimage);
#ifndef NDEBUG
    PARTBIJ_INVARIANT(in_A(ps, lam));
    PARTBIJ_INVARIANT(mu.weight() == lam.weight());
#endif
    return lam;
}

Partition aepr_forward(Partition const& lam)
{
    // Split h = k + g with k in {0, 3} and g even.
    auto k = [&](std::uint64_t i) -> std::uint64_t { return lam.multiplicity(i) % 2 == 1 ? 3 : 0; };
    auto g = [&](std::uint64_t i) -> std::uint64_t { return lam.multiplicity(i) - k(i); };

    for (auto const& [part, h] : lam)
        if (h % 2 == 1 && h < 3)
            throw family_violation(family_violation::kind::multiplicity_below_threshold, part, h, 1, 3,
                                   "part " + std::to_string(part) + " has odd multiplicity "
                                       + std::to_string(h) + ", below the threshold 3");

    // Image parts never exceed 3 * largest part.
    const std::uint64_t bound = checked_mul(3, lam.largest_part(), "3 * largest part");
    std::vector<std::pair<part_t, mult_t>> d;
    auto emit = [&](std::uint64_t index, std::uint64_t count) {
        if (count != 0)
            d.emplace_back(index, count);
    };
    for (std::uint64_t t = 0; 6 * t + 1 <= bound; ++t) {
        // d_{6t+1} = d_{6t+5} = 0
        emit(6 * t + 2, g(3 * t + 1) / 2);
        emit(6 * t + 4, g(3 * t + 2) / 2);
        emit(6 * t + 3, k(2 * t + 1) / 3 + g(6 * t + 3));
        emit(6 * t + 6, k(2 * t + 2) / 3 + g(6 * t + 6));
    }
    return Partition::from_entries(d);
}

} // namespace partbij
