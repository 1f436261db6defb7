#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tricalc/int_matrix.hpp"

namespace tricalc::core {

// Compact oriented surface F_{g,b}.  H1 basis is fixed once and for all as
// (a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}): symplectic pairs first, then
// boundary-parallel classes (only b-1 are independent, their sum bounds).
struct Surface {
    long long genus = 0;
    long long boundary = 0;

    bool operator==(const Surface&) const = default;
};

inline void check_surface(const Surface& s) {
    if (s.genus < 0) throw invariant_error("surface genus " + std::to_string(s.genus) + " < 0");
    if (s.boundary < 0)
        throw invariant_error("surface boundary " + std::to_string(s.boundary) + " < 0");
}

inline std::size_t h1_rank(const Surface& s) {
    return 2 * static_cast<std::size_t>(s.genus) +
           (s.boundary > 0 ? static_cast<std::size_t>(s.boundary) - 1 : 0);
}

inline long long surface_euler(const Surface& s) { return 2 - 2 * s.genus - s.boundary; }

using HomologyClass = std::vector<Int>;

// 0-based coordinate slots of the canonical basis.
inline std::size_t a_slot(std::size_t i) { return 2 * i; }        // a_{i+1}
inline std::size_t b_slot(std::size_t i) { return 2 * i + 1; }    // b_{i+1}
inline std::size_t d_slot(const Surface& s, std::size_t j) {      // d_{j+1}
    return 2 * static_cast<std::size_t>(s.genus) + j;
}

inline HomologyClass basis_class(const Surface& s, std::size_t slot) {
    HomologyClass c(h1_rank(s));
    c[slot] = 1;
    return c;
}

// Standard symplectic form on the canonical basis: J(a_i, b_i) = +1, boundary
// classes pair to zero with everything.
inline IntMatrix intersection_form(const Surface& s) {
    const std::size_t n = h1_rank(s);
    IntMatrix j(n, n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(s.genus); ++i) {
        j(a_slot(i), b_slot(i)) = 1;
        j(b_slot(i), a_slot(i)) = -1;
    }
    return j;
}

}  // namespace tricalc::core
