#include "partbij/series.hpp"

#include <string>

#include "partbij/errors.hpp"

namespace partbij {

namespace {

void check_cap(std::uint64_t order, std::uint64_t cap)
{
    if (order > cap)
        throw resource_limit("series order " + std::to_string(order) + " exceeds the cap " + std::to_string(cap));
}

// x * y if it is <= limit, otherwise limit + 1.
std::uint64_t clamp_product(std::uint64_t x, std::uint64_t y, std::uint64_t limit)
{
    std::uint64_t out;
    if (__builtin_mul_overflow(x, y, &out) || out > limit)
        return limit + 1;
    return out;
}

} // namespace

SeriesCoefficients SeriesCoefficients::one(std::uint64_t order)
{
    SeriesCoefficients s;
    s.coeffs.assign(order + 1, bigint(0));
    s.coeffs[0] = 1;
    return s;
}

void multiply_one_minus(SeriesCoefficients& s, std::uint64_t k)
{
    PARTBIJ_INVARIANT(k >= 1);
    auto& c = s.coeffs;
    for (std::uint64_t n = c.size(); n-- > k;)
        c[n] -= c[n - k];
}

void divide_one_minus(SeriesCoefficients& s, std::uint64_t k)
{
    PARTBIJ_INVARIANT(k >= 1);
    auto& c = s.coeffs;
    for (std::uint64_t n = k; n < c.size(); ++n)
        c[n] += c[n - k];
}

SeriesCoefficients b_side_series(Params const& ps, std::uint64_t order, std::uint64_t cap)
{
    check_cap(order, cap);
    auto s = SeriesCoefficients::one(order);
    for (std::uint64_t k = 1; k <= order; ++k)
        if (classify_part(ps, k) != PartClass::Forbidden)
            divide_one_minus(s, k);
    return s;
}

SeriesCoefficients a_side_series(Params const& ps, std::uint64_t order, std::uint64_t cap)
{
    check_cap(order, cap);
    auto s = SeriesCoefficients::one(order);
    auto& c = s.coeffs;
    for (std::uint64_t i = 1; i <= order; ++i) {
        // Numerator sum_{v<p} q^{i*M*v}: allowed k-parts of the multiplicity of i.
        const std::uint64_t step = clamp_product(i, ps.block, order);
        if (step <= order) {
            for (std::uint64_t n = order; n >= step; --n) {
                bigint acc = c[n];
                for (std::uint64_t v = 1; v < ps.p && v * step <= n; ++v)
                    acc += c[n - v * step];
                c[n] = std::move(acc);
            }
        }
        // 1/(1 - q^{i*p}): the g-part, a multiple of p.
        const std::uint64_t g_step = clamp_product(i, ps.p, order);
        if (g_step <= order)
            divide_one_minus(s, g_step);
    }
    return s;
}

SeriesCoefficients family_series(Params const& ps, Family f, std::uint64_t order, std::uint64_t cap)
{
    return f == Family::A ? a_side_series(ps, order, cap) : b_side_series(ps, order, cap);
}

SeriesComparison compare_series(Params const& ps, std::uint64_t order, std::uint64_t cap)
{
    auto a = a_side_series(ps, order, cap);
    auto b = b_side_series(ps, order, cap);
    for (std::uint64_t n = 0; n <= order; ++n)
        if (a.coeffs[n] != b.coeffs[n])
            return {false, n};
    return {};
}

} // namespace partbij
