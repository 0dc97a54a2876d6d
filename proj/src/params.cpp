#include "partbij/params.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "partbij/checked.hpp"
#include "partbij/errors.hpp"

namespace partbij {

namespace {

// Extended Euclid; requires gcd(a, p) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    std::int64_t m = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((s0 % m) + m) % m);
}

} // namespace

Params validate_params(std::int64_t p, std::int64_t a, std::int64_t r)
{
    if (p < 2)
        throw param_error("p = " + std::to_string(p) + " is invalid: p must be at least 2");
    if (a < 1 || a >= p)
        throw param_error("a = " + std::to_string(a) + " is invalid: need 1 <= a < p = " + std::to_string(p));
    if (r < 0)
        throw param_error("r = " + std::to_string(r) + " is invalid: r must be nonnegative");
    if (auto g = std::gcd(a, p); g != 1)
        throw param_error("gcd(a, p) = gcd(" + std::to_string(a) + ", " + std::to_string(p)
                          + ") = " + std::to_string(g) + ", must be 1");

    Params ps;
    ps.p = static_cast<std::uint64_t>(p);
    ps.a = static_cast<std::uint64_t>(a);
    ps.r = static_cast<std::uint64_t>(r);
    try {
        ps.block = checked_add(checked_mul(ps.p, ps.r, "p*r"), ps.a, "p*r + a");
        ps.modulus = checked_mul(ps.p, ps.block, "p*(p*r + a)");
    } catch (overflow_error const& e) {
        throw param_error(std::string("parameters too large: ") + e.what());
    }
    ps.a_inv = inverse_mod(ps.a, ps.p);
    PARTBIJ_INVARIANT((ps.a_inv * ps.a) % ps.p == 1 % ps.p);
    return ps;
}

std::string_view to_string(PartClass c) noexcept
{
    switch (c) {
    case PartClass::KBlock:
        return "KBlock";
    case PartClass::GBlock:
        return "GBlock";
    case PartClass::Forbidden:
        return "Forbidden";
    }
    return "?";
}

std::uint64_t residue_class(Params const& ps, mult_t m) noexcept
{
    // a_inv < p, so reducing m first keeps the product small.
    return (ps.a_inv * (m % ps.p)) % ps.p;
}

bool is_allowed_multiplicity(Params const& ps, mult_t m) noexcept
{
    auto j = residue_class(ps, m);
    // j*M may not fit in 64 bits for absurd r; then no m can reach it.
    std::uint64_t threshold;
    if (__builtin_mul_overflow(j, ps.block, &threshold))
        return false;
    return m >= threshold;
}

bool in_A(Params const& ps, Partition const& pt) noexcept
{
    return std::all_of(pt.begin(), pt.end(),
                       [&](auto const& e) { return is_allowed_multiplicity(ps, e.second); });
}

PartClass classify_part(Params const& ps, part_t n) noexcept
{
    if (n % ps.block == 0)
        return PartClass::KBlock;
    if (n % ps.p == 0)
        return PartClass::GBlock;
    return PartClass::Forbidden;
}

bool in_B(Params const& ps, Partition const& pt) noexcept
{
    return std::none_of(pt.begin(), pt.end(),
                        [&](auto const& e) { return classify_part(ps, e.first) == PartClass::Forbidden; });
}

std::vector<std::uint64_t> allowed_nonmultiple_residues(Params const& ps)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < ps.p; ++s)
        out.push_back(((ps.p - s) * ps.block) % ps.modulus);
    std::sort(out.begin(), out.end());
    return out;
}

bool in_family(Params const& ps, Family f, Partition const& pt) noexcept
{
    return f == Family::A ? in_A(ps, pt) : in_B(ps, pt);
}

} // namespace partbij
