#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tricalc/gluing.hpp"
#include "tricalc/smith.hpp"

namespace tricalc::lefschetz {

using core::HomologyClass;
using core::Surface;
using openbook::OpenBook;
using openbook::StabVariant;
using openbook::TwistLetter;
using trisection::RelativeTrisection;

// Vanishing cycle at the homology level, with the chirality of its critical
// point.  cycles[0] belongs to the outermost critical value.
struct VanishingCycle {
    HomologyClass curve;
    int sign = 1;

    bool operator==(const VanishingCycle&) const = default;
};

// Fibration over the disk with bounded fiber and isolated quadratic
// singularities, one vanishing cycle each.
struct LefschetzFibration {
    Surface fiber;
    std::vector<VanishingCycle> cycles;

    bool operator==(const LefschetzFibration&) const = default;
};

inline void check_lefschetz(const LefschetzFibration& lf) {
    core::check_surface(lf.fiber);
    if (lf.fiber.boundary < 1)
        throw core::invariant_error("fiber must have boundary (closed fibers unsupported)");
    for (const VanishingCycle& c : lf.cycles) {
        if (c.curve.size() != core::h1_rank(lf.fiber))
            throw core::invariant_error("vanishing cycle length " + std::to_string(c.curve.size()) +
                                        " does not match fiber rank " +
                                        std::to_string(core::h1_rank(lf.fiber)));
        if (c.sign != 1 && c.sign != -1)
            throw core::invariant_error("cycle chirality must be +1 or -1");
    }
}

// Boundary open book: page = fiber, monodromy = the twists about the
// vanishing cycles in order.
inline OpenBook induced_open_book(const LefschetzFibration& lf) {
    check_lefschetz(lf);
    OpenBook ob;
    ob.pages = {lf.fiber};
    for (const VanishingCycle& c : lf.cycles) ob.word.push_back(TwistLetter{0, c.curve, c.sign});
    return ob;
}

// Attach a canceling 1-2 handle pair: the fiber changes as under a Hopf
// stabilization and the pair's 2-handle contributes one new outermost
// vanishing cycle, so the induced open book is exactly the Hopf-stabilized
// one.
inline LefschetzFibration stabilize_lefschetz(const LefschetzFibration& lf, StabVariant variant,
                                              int sign) {
    check_lefschetz(lf);
    OpenBook stabbed = openbook::hopf_stabilize(induced_open_book(lf), 0, variant, sign);
    LefschetzFibration out;
    out.fiber = stabbed.pages[0];
    for (const TwistLetter& w : stabbed.word) out.cycles.push_back(VanishingCycle{w.curve, w.sign});
    return out;
}

// Bookkeeping of trading Lefschetz singularities for triple-cusped fold
// circles; each trade raises the central fiber genus by one.
struct WrinkledRecord {
    Surface fiber;
    std::vector<VanishingCycle> lefschetz_remaining;
    long long cuspoids = 0;
    long long central_genus = 0;

    bool operator==(const WrinkledRecord&) const = default;
};

inline WrinkledRecord wrinkle_start(const LefschetzFibration& lf) {
    check_lefschetz(lf);
    return WrinkledRecord{lf.fiber, lf.cycles, 0, lf.fiber.genus};
}

inline WrinkledRecord wrinkle_step(const WrinkledRecord& r) {
    if (r.lefschetz_remaining.empty())
        throw core::invariant_error("no Lefschetz singularity left to wrinkle");
    WrinkledRecord out = r;
    out.lefschetz_remaining.pop_back();
    out.cuspoids += 1;
    out.central_genus += 1;
    return out;
}

inline WrinkledRecord wrinkle(const LefschetzFibration& lf) {
    WrinkledRecord r = wrinkle_start(lf);
    while (!r.lefschetz_remaining.empty()) r = wrinkle_step(r);
    return r;
}

// Existence-proof parameter calculator.  Inputs describe a handle
// decomposition relative to the boundary open books: h1 1-handles, h2
// 2-handles, and c crossings of the attaching data with the folds.  Extra
// crossings beyond h2 are normalized away by adding canceling 1-2 and 2-3
// pairs (one each per extra crossing), which leaves chi alone; with
// h1' = h1 + (c - h2) the canonical-case formulas apply, every 2-handle and
// every extra pair's handles contributing splitting stabilizations:
//   k      = l + h1' - m + 1
//   g_base = p + h1' - m + 1
//   G      = g_base + h2 + 2(c - h2)
// Output carries empty monodromy words (parameters only).
inline RelativeTrisection trisection_from_open_book_handles(const std::vector<Surface>& pages,
                                                            long long h1, long long h2,
                                                            long long c) {
    if (pages.empty()) throw core::invariant_error("need at least one boundary page");
    if (h1 < 0 || h2 < 0 || c < 0) throw core::invariant_error("handle counts must be >= 0");
    const long long m = static_cast<long long>(pages.size());
    if (h1 < m - 1)
        throw core::invariant_error("h1 = " + std::to_string(h1) + " < m - 1 = " +
                                    std::to_string(m - 1) + " (first piece must be connected)");
    if (c < h2)
        throw core::invariant_error("crossings c = " + std::to_string(c) + " < h2 = " +
                                    std::to_string(h2) + " (each 2-handle crosses at least once)");

    long long p = 0, b = 0, l = 0;
    for (const Surface& pg : pages) {
        core::check_surface(pg);
        if (pg.boundary < 1) throw core::invariant_error("boundary pages cannot be closed");
        p += pg.genus;
        b += pg.boundary;
        l += 2 * pg.genus + pg.boundary - 1;
    }

    const long long h1n = h1 + (c - h2);
    RelativeTrisection out;
    out.surface_boundary = b;
    out.k = l + h1n - m + 1;
    const long long g_base = p + h1n - m + 1;
    out.surface_genus = g_base + h2 + 2 * (c - h2);
    for (const Surface& pg : pages) out.boundary.push_back(OpenBook{{pg}, {}});

    const long long chi = trisection::validate(out).chi;
    if (chi != (2 * m - 2 * p - b) - 2 * h1 + h2)
        throw core::invariant_error("handle-count chi oracle failed (internal)");
    return out;
}

// Convert to a relative trisection by wrinkling: one fold circle per
// singularity, n = cycle count crossings in the canonical position.  The
// optional crossing count adds interior stabilizations (one per extra
// crossing) without touching the boundary open book.
inline RelativeTrisection lf_to_trisection(const LefschetzFibration& lf, long long crossings) {
    check_lefschetz(lf);
    const long long n = static_cast<long long>(lf.cycles.size());
    for (const VanishingCycle& cy : lf.cycles)
        if (std::all_of(cy.curve.begin(), cy.curve.end(), [](const core::Int& x) { return x == 0; }))
            throw core::invariant_error(
                "null-homologous vanishing cycle: not essential at the homology level");

    RelativeTrisection out = trisection_from_open_book_handles({lf.fiber}, 0, n, crossings);
    out.boundary = {induced_open_book(lf)};
    if (trisection::validate(out).chi != core::surface_euler(lf.fiber) + n)
        throw core::invariant_error("conversion chi oracle failed (internal)");
    return out;
}

inline RelativeTrisection lf_to_trisection(const LefschetzFibration& lf) {
    return lf_to_trisection(lf, static_cast<long long>(lf.cycles.size()));
}

// H1 of the total space: quotient of H1(fiber) by the subgroup the vanishing
// cycles span (each 2-handle kills its cycle's class).
inline core::AbelianGroup fourmanifold_h1(const LefschetzFibration& lf) {
    check_lefschetz(lf);
    const std::size_t rank = core::h1_rank(lf.fiber);
    core::IntMatrix rel(rank, lf.cycles.size());
    for (std::size_t j = 0; j < lf.cycles.size(); ++j)
        for (std::size_t i = 0; i < rank; ++i) rel(i, j) = lf.cycles[j].curve[i];
    return core::cokernel(rel);
}

}  // namespace tricalc::lefschetz
