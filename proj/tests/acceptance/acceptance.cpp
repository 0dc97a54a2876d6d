// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "partbij/bijection.hpp"
#include "partbij/enumeration.hpp"
#include "partbij/errors.hpp"
#include "partbij/series.hpp"

#include "../support/literal_formulas.hpp"
#include "../support/oracles.hpp"

using namespace partbij;
using partbij::testing::grid;

namespace {

constexpr std::uint64_t bijection_n_max = 22;
constexpr std::uint64_t aepr_n_max = 20;
constexpr std::uint64_t series_order = 200;
constexpr std::uint64_t series_vs_enumeration_n_max = 40;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(std::string const& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

std::string describe(Params const& ps)
{
    return "(" + std::to_string(ps.p) + "," + std::to_string(ps.a) + "," + std::to_string(ps.r) + ")";
}

Outcome equinumerosity()
{
    Outcome o;
    std::uint64_t checked = 0;
    for (auto const& ps : grid())
        for (std::uint64_t n = 0; n <= bijection_n_max; ++n) {
            auto a = count_family(ps, Family::A, n);
            auto b = count_family(ps, Family::B, n);
            if (a != b)
                o.fail(describe(ps) + " n=" + std::to_string(n) + ": |A|=" + std::to_string(a)
                       + " |B|=" + std::to_string(b));
            ++checked;
        }
    if (o.pass)
        o.detail = std::to_string(checked) + " (params, n) pairs";
    return o;
}

Outcome bijectivity()
{
    Outcome o;
    std::uint64_t mapped = 0;
    for (auto const& ps : grid()) {
        auto report = verify_bijection(ps, bijection_n_max);
        for (auto const& rec : report.per_n)
            mapped += rec.count_a;
        if (!report.pass)
            for (auto const& rec : report.per_n)
                if (!rec.ok())
                    o.fail(describe(ps) + " n=" + std::to_string(rec.n) + " failed");
    }
    if (o.pass)
        o.detail = std::to_string(mapped) + " partitions mapped and inverted";
    return o;
}

Outcome literal_fidelity()
{
    Outcome o;
    std::uint64_t forward_checked = 0, inverse_checked = 0;
    for (auto const& ps : grid())
        for (std::uint64_t n = 0; n <= bijection_n_max; ++n)
            for (auto const& pt : enumerate_partitions(n)) {
                try {
                    if (in_A(ps, pt)) {
                        ++forward_checked;
                        if (partbij::testing::literal_forward(ps, pt) != forward(ps, pt))
                            o.fail(describe(ps) + " forward differs on " + format_partition(pt));
                    }
                    if (in_B(ps, pt)) {
                        ++inverse_checked;
                        if (partbij::testing::literal_inverse(ps, pt) != inverse(ps, pt))
                            o.fail(describe(ps) + " inverse differs on " + format_partition(pt));
                    }
                } catch (std::exception const& e) {
                    o.fail(describe(ps) + " " + format_partition(pt) + ": " + e.what());
                }
            }
    if (o.pass)
        o.detail = std::to_string(forward_checked) + " forward, " + std::to_string(inverse_checked) + " inverse";
    return o;
}

Outcome index_coverage()
{
    Outcome o;
    for (auto const& ps : grid()) {
        auto bound = 10 * ps.modulus;
        auto hits = partbij::testing::index_family_hits(ps, bound);
        for (std::uint64_t n = 1; n <= bound; ++n) {
            auto const& h = hits[n];
            auto c = classify_part(ps, n);
            bool once = h[0] + h[1] + h[2] == 1;
            bool matches = (h[0] == 1) == (c == PartClass::Forbidden) && (h[1] == 1) == (c == PartClass::GBlock)
                && (h[2] == 1) == (c == PartClass::KBlock);
            if (!once || !matches)
                o.fail(describe(ps) + " index " + std::to_string(n));
        }
    }
    if (o.pass)
        o.detail = "{1..10L} for every grid point";
    return o;
}

Outcome aepr_reduction()
{
    Outcome o;
    auto mac = validate_params(2, 1, 1);
    std::uint64_t checked = 0;
    for (std::uint64_t n = 0; n <= aepr_n_max; ++n)
        for (auto const& pt : enumerate_partitions(n))
            if (in_A(mac, pt)) {
                ++checked;
                if (forward(mac, pt) != aepr_forward(pt))
                    o.fail("differs on " + format_partition(pt));
            }
    if (o.pass)
        o.detail = std::to_string(checked) + " partitions";
    return o;
}

Outcome series_oracle()
{
    Outcome o;
    for (auto const& ps : grid()) {
        auto a = a_side_series(ps, series_order);
        auto b = b_side_series(ps, series_order);
        for (std::uint64_t n = 0; n <= series_order; ++n)
            if (a.coeffs[n] != b.coeffs[n])
                o.fail(describe(ps) + " coefficient " + std::to_string(n));
        for (std::uint64_t n = 0; n <= series_vs_enumeration_n_max; ++n) {
            if (a.coeffs[n] != count_family(ps, Family::A, n))
                o.fail(describe(ps) + " A-series vs enumeration at n=" + std::to_string(n));
            if (b.coeffs[n] != count_family(ps, Family::B, n))
                o.fail(describe(ps) + " B-series vs enumeration at n=" + std::to_string(n));
        }
    }
    if (o.pass)
        o.detail = "N=" + std::to_string(series_order) + ", enumeration n<=" + std::to_string(series_vs_enumeration_n_max);
    return o;
}

Outcome macmahon_values()
{
    Outcome o;
    auto mac = validate_params(2, 1, 1);
    const std::uint64_t expected[] = {1, 0, 1, 1, 2, 1, 4};
    auto a = a_side_series(mac, 6);
    auto b = b_side_series(mac, 6);
    for (std::uint64_t n = 0; n <= 6; ++n) {
        if (count_family(mac, Family::A, n) != expected[n] || count_family(mac, Family::B, n) != expected[n])
            o.fail("enumeration at n=" + std::to_string(n));
        if (a.coeffs[n] != expected[n] || b.coeffs[n] != expected[n])
            o.fail("series at n=" + std::to_string(n));
    }
    if (o.pass)
        o.detail = "1,0,1,1,2,1,4";
    return o;
}

Outcome error_surface()
{
    Outcome o;
    auto mac = validate_params(2, 1, 1);
    try {
        forward(mac, parse_partition("4"));
        o.fail("forward accepted 4");
    } catch (family_violation const& e) {
        if (e.threshold() != 3 || std::string(e.what()).find("= 3") == std::string::npos)
            o.fail(std::string("forward diagnostic: ") + e.what());
    }
    try {
        inverse(mac, parse_partition("1"));
        o.fail("inverse accepted 1");
    } catch (family_violation const& e) {
        if (e.part() != 1 || std::string(e.what()).find("part 1 is forbidden") == std::string::npos)
            o.fail(std::string("inverse diagnostic: ") + e.what());
    }
    try {
        validate_params(4, 2, 1);
        o.fail("validate_params accepted (4,2,1)");
    } catch (param_error const& e) {
        if (std::string(e.what()).find("gcd") == std::string::npos)
            o.fail(std::string("params diagnostic: ") + e.what());
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 equinumerosity on grid, n<=22", equinumerosity},
        {"AC2 bijectivity on grid, n<=22", bijectivity},
        {"AC3 literal index formulas = part-wise map and inverse", literal_fidelity},
        {"AC4 index families cover {1..10L} once, matching classes", index_coverage},
        {"AC5 (2,1,1) forward = AEPR map, n<=20", aepr_reduction},
        {"AC6 series A = series B to N=200, = enumeration n<=40", series_oracle},
        {"AC7 MacMahon counts n=0..6", macmahon_values},
        {"AC8 error surface", error_surface},
    };

    int failures = 0;
    for (auto const& [name, check] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (std::exception const& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%s) %.2fs\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        failures += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
