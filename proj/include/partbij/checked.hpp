#pragma once

#include <cstdint>
#include <string>

#include "partbij/errors.hpp"

namespace partbij {

inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y, const char* what)
{
    std::uint64_t out;
    if (__builtin_add_overflow(x, y, &out))
        throw overflow_error(std::string("64-bit overflow computing ") + what);
    return out;
}

inline std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y, const char* what)
{
    std::uint64_t out;
    if (__builtin_mul_overflow(x, y, &out))
        throw overflow_error(std::string("64-bit overflow computing ") + what);
    return out;
}

} // namespace partbij
