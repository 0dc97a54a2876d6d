#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "partbij/params.hpp"

namespace partbij {

using bigint = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t default_series_cap = 2000;

/* Exact coefficients c[0..order] of a power series in q truncated after q^order. */
struct SeriesCoefficients {
    std::vector<bigint> coeffs;

    std::uint64_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    static SeriesCoefficients one(std::uint64_t order);

    friend bool operator==(SeriesCoefficients const&, SeriesCoefficients const&) = default;
};

/* In place: s *= (1 - q^k), truncated. k >= 1. */
void multiply_one_minus(SeriesCoefficients& s, std::uint64_t k);

/* In place: s *= 1 / (1 - q^k), truncated. k >= 1. */
void divide_one_minus(SeriesCoefficients& s, std::uint64_t k);

/* prod over non-forbidden parts k <= N of 1/(1 - q^k). */
SeriesCoefficients b_side_series(Params const& ps, std::uint64_t order,
                                 std::uint64_t cap = default_series_cap);

/* prod_{i=1}^{N} (sum_{v=0}^{p-1} q^{i*M*v}) / (1 - q^{i*p}). */
SeriesCoefficients a_side_series(Params const& ps, std::uint64_t order,
                                 std::uint64_t cap = default_series_cap);

SeriesCoefficients family_series(Params const& ps, Family f, std::uint64_t order,
                                 std::uint64_t cap = default_series_cap);

struct SeriesComparison {
    bool equal = true;
    std::optional<std::uint64_t> first_mismatch;
};

SeriesComparison compare_series(Params const& ps, std::uint64_t order,
                                std::uint64_t cap = default_series_cap);

} // namespace partbij
