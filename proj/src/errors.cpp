#include "partbij/errors.hpp"

#include <cstdio>
#include <cstdlib>

namespace partbij {

void invariant_failure(const char* expr, const char* file, int line)
{
    std::fprintf(stderr, "partbij: internal invariant violated: %s (%s:%d)\n", expr, file, line);
    std::abort();
}

} // namespace partbij
