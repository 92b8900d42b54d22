#ifndef LIKEJUDGE_NUMERIC_HPP
#define LIKEJUDGE_NUMERIC_HPP

#include <cstdio>
#include <cstdlib>

namespace likejudge {

// Canonical likelihood value: at most 10 significant digits, the precision
// documents are rendered with. Keeping stored bounds canonical makes the
// serialize/parse round trip exact.
inline double canonical_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return std::strtod(buffer, nullptr);
}

}  // namespace likejudge

#endif
