#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "tricalc/open_book.hpp"

namespace tricalc::trisection {

using openbook::OpenBook;
using openbook::StabVariant;

// Parameter tuple of a trisection of a 4-manifold with boundary, plus the
// induced open book on each boundary 3-manifold (one single-page OpenBook
// per component; monodromy is stored data, not derivable from parameters).
//
// Derived bookkeeping, with m = #components, p = sum of page genera:
//   g_base = k + m - p - b   genus of the splitting surface before extra
//                            stabilizations (the surface the compression
//                            bodies are built on)
//   n      = g_base - p + m - 1   2-handles per compression body
//   s      = G - g_base           splitting stabilizations applied on top
struct RelativeTrisection {
    long long surface_genus = 0;     // G
    long long surface_boundary = 0;  // b
    long long k = 0;
    std::vector<OpenBook> boundary;

    bool operator==(const RelativeTrisection&) const = default;
};

struct ClosedTrisection {
    long long g = 0;
    long long k = 0;

    bool operator==(const ClosedTrisection&) const = default;
};

using Trisection = std::variant<RelativeTrisection, ClosedTrisection>;

struct DerivedReport {
    long long m = 0;
    long long p = 0;
    long long g_base = 0;
    long long n = 0;
    long long s = 0;
    std::vector<long long> l_i;
    long long l = 0;
    long long chi = 0;
};

namespace detail {

inline void fail(const std::vector<std::string>& violations) {
    if (violations.empty()) return;
    std::string msg;
    for (const std::string& v : violations) {
        if (!msg.empty()) msg += "; ";
        msg += v;
    }
    throw core::invariant_error(msg);
}

}  // namespace detail

inline DerivedReport validate(const RelativeTrisection& t) {
    std::vector<std::string> bad;

    // Structural layer: shapes must make sense before any arithmetic.
    if (t.surface_boundary < 1)
        bad.push_back("surface_boundary = " + std::to_string(t.surface_boundary) +
                      " (trisection surface must have boundary)");
    if (t.boundary.empty()) bad.push_back("no boundary components (need m >= 1)");
    if (t.k < 0) bad.push_back("k = " + std::to_string(t.k) + " < 0");
    long long page_boundary_sum = 0;
    for (std::size_t i = 0; i < t.boundary.size(); ++i) {
        const OpenBook& ob = t.boundary[i];
        if (ob.pages.size() != 1) {
            bad.push_back("boundary component " + std::to_string(i) + " has " +
                          std::to_string(ob.pages.size()) + " pages (expected exactly 1)");
            continue;
        }
        try {
            openbook::check_open_book(ob);
        } catch (const core::invariant_error& e) {
            bad.push_back("boundary component " + std::to_string(i) + ": " + e.what());
            continue;
        }
        page_boundary_sum += ob.pages[0].boundary;
    }
    detail::fail(bad);

    if (page_boundary_sum != t.surface_boundary)
        bad.push_back("page boundary counts sum to " + std::to_string(page_boundary_sum) +
                      " but surface_boundary = " + std::to_string(t.surface_boundary));
    detail::fail(bad);

    // Derived layer.
    DerivedReport r;
    r.m = static_cast<long long>(t.boundary.size());
    for (const OpenBook& ob : t.boundary) r.p += ob.pages[0].genus;
    r.g_base = t.k + r.m - r.p - t.surface_boundary;
    r.n = r.g_base - r.p + r.m - 1;
    r.s = t.surface_genus - r.g_base;
    if (r.g_base < 0)
        bad.push_back("g_base = k + m - p - b = " + std::to_string(r.g_base) + " < 0");
    if (r.n < r.m - 1)
        bad.push_back("n = " + std::to_string(r.n) + " < m - 1 = " + std::to_string(r.m - 1) +
                      " (g_base = " + std::to_string(r.g_base) +
                      " must be at least p = " + std::to_string(r.p) + ")");
    if (r.s < 0)
        bad.push_back("s = G - g_base = " + std::to_string(t.surface_genus) + " - " +
                      std::to_string(r.g_base) + " < 0");
    detail::fail(bad);

    // Reconstruction identities; failure here is a bug, not bad input.
    if (t.k != 2 * r.g_base + t.surface_boundary - 1 - r.n ||
        r.p != r.g_base - (r.n - (r.m - 1)))
        throw core::invariant_error("derived quantities inconsistent (internal)");

    for (const OpenBook& ob : t.boundary)
        r.l_i.push_back(2 * ob.pages[0].genus + ob.pages[0].boundary - 1);
    r.l = std::accumulate(r.l_i.begin(), r.l_i.end(), 0LL);
    r.chi = 2 - 2 * r.g_base + r.s - t.surface_boundary;
    return r;
}

inline void check_closed(const ClosedTrisection& t) {
    std::vector<std::string> bad;
    if (t.k < 0) bad.push_back("k = " + std::to_string(t.k) + " < 0");
    if (t.g < t.k)
        bad.push_back("g = " + std::to_string(t.g) + " < k = " + std::to_string(t.k) +
                      " (genus-g splitting of #^k S^1 x S^2 needs g >= k)");
    detail::fail(bad);
}

inline long long euler(const RelativeTrisection& t) { return validate(t).chi; }
inline long long euler(const ClosedTrisection& t) {
    check_closed(t);
    return 2 + t.g - 3 * t.k;
}
inline long long euler(const Trisection& t) {
    return std::visit([](const auto& x) { return euler(x); }, t);
}

inline const std::vector<OpenBook>& boundary_open_books(const RelativeTrisection& t) {
    validate(t);
    return t.boundary;
}

inline RelativeTrisection interior_stabilize(const RelativeTrisection& t) {
    validate(t);
    RelativeTrisection out = t;
    out.surface_genus += 3;
    out.k += 1;
    return out;
}
inline ClosedTrisection interior_stabilize(const ClosedTrisection& t) {
    check_closed(t);
    return ClosedTrisection{t.g + 3, t.k + 1};
}
inline Trisection interior_stabilize(const Trisection& t) {
    return std::visit([](const auto& x) { return Trisection{interior_stabilize(x)}; }, t);
}

// Boundary-sensitive stabilization: Hopf-stabilizes exactly one induced open
// book and bumps k; the surface gains (1 genus, 1 boundary) or (2 genus,
// -1 boundary) depending on whether the new binding reuses a circle.
inline RelativeTrisection relative_stabilize(const RelativeTrisection& t, std::size_t comp,
                                             StabVariant variant, int sign) {
    const long long chi_before = validate(t).chi;
    if (comp >= t.boundary.size())
        throw core::invariant_error("no boundary component " + std::to_string(comp));
    RelativeTrisection out = t;
    out.boundary[comp] = openbook::hopf_stabilize(t.boundary[comp], 0, variant, sign);
    out.k += 1;
    if (variant == StabVariant::same_binding) {
        out.surface_genus += 1;
        out.surface_boundary += 1;
    } else {
        out.surface_genus += 2;
        out.surface_boundary -= 1;
    }
    if (validate(out).chi != chi_before)
        throw core::invariant_error("relative stabilization changed chi (internal)");
    return out;
}

inline RelativeTrisection connected_sum(const RelativeTrisection& a, const RelativeTrisection& b) {
    validate(a);
    validate(b);
    RelativeTrisection out;
    out.surface_genus = a.surface_genus + b.surface_genus;
    out.surface_boundary = a.surface_boundary + b.surface_boundary;
    out.k = a.k + b.k;
    out.boundary = a.boundary;
    out.boundary.insert(out.boundary.end(), b.boundary.begin(), b.boundary.end());
    return out;
}
inline ClosedTrisection connected_sum(const ClosedTrisection& a, const ClosedTrisection& b) {
    check_closed(a);
    check_closed(b);
    return ClosedTrisection{a.g + b.g, a.k + b.k};
}
inline RelativeTrisection connected_sum(const RelativeTrisection& a, const ClosedTrisection& b) {
    validate(a);
    check_closed(b);
    RelativeTrisection out = a;
    out.surface_genus += b.g;
    out.k += b.k;
    return out;
}
inline RelativeTrisection connected_sum(const ClosedTrisection& a, const RelativeTrisection& b) {
    return connected_sum(b, a);
}
inline Trisection connected_sum(const Trisection& a, const Trisection& b) {
    Trisection out = std::visit(
        [](const auto& x, const auto& y) { return Trisection{connected_sum(x, y)}; }, a, b);
    if (euler(out) != euler(a) + euler(b) - 2)
        throw core::invariant_error("connected sum broke chi additivity (internal)");
    return out;
}

// Interior stabilization moves (G,k) by (+3,+1), so G - 3k is the stable
// invariant; boundary data never changes under it.
inline bool stably_equivalent(const RelativeTrisection& a, const RelativeTrisection& b) {
    validate(a);
    validate(b);
    if (a.boundary.size() != b.boundary.size()) return false;
    for (std::size_t i = 0; i < a.boundary.size(); ++i)
        if (a.boundary[i].pages != b.boundary[i].pages) return false;
    for (std::size_t i = 0; i < a.boundary.size(); ++i)
        if (openbook::monodromy_action(a.boundary[i]) != openbook::monodromy_action(b.boundary[i]))
            return false;
    return a.surface_genus - 3 * a.k == b.surface_genus - 3 * b.k;
}
inline bool stably_equivalent(const ClosedTrisection& a, const ClosedTrisection& b) {
    check_closed(a);
    check_closed(b);
    return a.g - 3 * a.k == b.g - 3 * b.k;
}
inline bool stably_equivalent(const Trisection& a, const Trisection& b) {
    if (a.index() != b.index())
        throw core::invariant_error("cannot compare a closed trisection with a relative one");
    if (std::holds_alternative<ClosedTrisection>(a))
        return stably_equivalent(std::get<ClosedTrisection>(a), std::get<ClosedTrisection>(b));
    return stably_equivalent(std::get<RelativeTrisection>(a), std::get<RelativeTrisection>(b));
}

}  // namespace tricalc::trisection
