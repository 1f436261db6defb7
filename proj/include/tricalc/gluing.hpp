#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tricalc/trisection.hpp"

namespace tricalc::gluing {

using openbook::OpenBook;
using trisection::ClosedTrisection;
using trisection::DerivedReport;
using trisection::RelativeTrisection;
using trisection::Trisection;

// Pairs (boundary index in X, boundary index in W); injective on both sides.
using GluePairing = std::vector<std::pair<std::size_t, std::size_t>>;

// Parameter form of gluing two surfaces along `circles` boundary circles:
// chi adds and the result stays connected, which forces the genus bump.
inline core::Surface glued_surface(const core::Surface& x, const core::Surface& w,
                                   long long circles) {
    core::check_surface(x);
    core::check_surface(w);
    if (circles < 1) throw core::invariant_error("must glue along at least one circle");
    if (circles > x.boundary || circles > w.boundary)
        throw core::invariant_error("cannot glue " + std::to_string(circles) +
                                    " circles: boundaries are " + std::to_string(x.boundary) +
                                    " and " + std::to_string(w.boundary));
    return core::Surface{x.genus + w.genus + circles - 1,
                         x.boundary + w.boundary - 2 * circles};
}

// Glue X and W along the paired boundary components.  Page compatibility is
// required pair by pair; the glued splitting surface gains one genus per
// glued circle beyond the first, and the derived genus bookkeeping
//   g_base_new = g_base_X + g_base_W + (glued circles) - 1
// is exactly the value forced by chi additivity.  k of the result follows
// from the reconstruction identity; the chi assertion at the end re-checks
// the whole computation against the two inputs.
inline Trisection glue(const RelativeTrisection& tx, const RelativeTrisection& tw,
                       const GluePairing& pairing) {
    const DerivedReport rx = trisection::validate(tx);
    const DerivedReport rw = trisection::validate(tw);
    if (pairing.empty()) throw core::invariant_error("gluing needs at least one pair");

    std::vector<bool> used_x(tx.boundary.size(), false), used_w(tw.boundary.size(), false);
    for (const auto& [i, j] : pairing) {
        if (i >= tx.boundary.size() || j >= tw.boundary.size())
            throw core::invariant_error("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") out of range");
        if (used_x[i] || used_w[j]) throw core::invariant_error("pairing is not injective");
        used_x[i] = used_w[j] = true;
    }
    for (const auto& [i, j] : pairing) {
        if (!openbook::compatible(tx.boundary[i], tw.boundary[j], {{0, 0}}))
            throw core::invariant_error("boundary components " + std::to_string(i) + " and " +
                                        std::to_string(j) + " carry incompatible open books");
    }

    long long circles = 0;  // binding circles identified = glued page boundaries
    for (const auto& [i, j] : pairing) circles += tx.boundary[i].pages[0].boundary;

    const long long genus = tx.surface_genus + tw.surface_genus + circles - 1;
    const long long boundary = tx.surface_boundary + tw.surface_boundary - 2 * circles;
    const long long g_base = rx.g_base + rw.g_base + circles - 1;

    std::vector<OpenBook> comps;
    for (std::size_t i = 0; i < tx.boundary.size(); ++i)
        if (!used_x[i]) comps.push_back(tx.boundary[i]);
    for (std::size_t j = 0; j < tw.boundary.size(); ++j)
        if (!used_w[j]) comps.push_back(tw.boundary[j]);

    Trisection result;
    if (boundary == 0) {
        if (!comps.empty())
            throw core::invariant_error("glued surface closed but open books remain (internal)");
        result = ClosedTrisection{genus, g_base};  // closed case: k = g_base
    } else {
        long long m = static_cast<long long>(comps.size());
        long long p = 0;
        for (const OpenBook& ob : comps) p += ob.pages[0].genus;
        RelativeTrisection out;
        out.surface_genus = genus;
        out.surface_boundary = boundary;
        out.k = g_base + p + boundary - m;
        out.boundary = std::move(comps);
        trisection::validate(out);
        result = std::move(out);
    }
    if (trisection::euler(result) != rx.chi + rw.chi)
        throw core::invariant_error("gluing broke chi additivity (internal)");
    return result;
}

// A relatively trisected cobordism: the boundary components listed in
// `source` are the incoming end, the rest the outgoing end.  Source
// components carry the orientation-reversed word of the object they attach
// to, so identities and compositions match up without extra normalization.
// The empty cobordism (no boundary at all) is carried by a closed trisection.
struct TriMorphism {
    Trisection tri;
    std::vector<std::size_t> source;

    bool operator==(const TriMorphism&) const = default;
};

inline void check_morphism(const TriMorphism& f) {
    if (std::holds_alternative<ClosedTrisection>(f.tri)) {
        trisection::check_closed(std::get<ClosedTrisection>(f.tri));
        if (!f.source.empty())
            throw core::invariant_error("closed morphism body cannot have source components");
        return;
    }
    const RelativeTrisection& t = std::get<RelativeTrisection>(f.tri);
    trisection::validate(t);
    std::vector<bool> seen(t.boundary.size(), false);
    for (std::size_t i : f.source) {
        if (i >= t.boundary.size())
            throw core::invariant_error("source index " + std::to_string(i) + " out of range");
        if (seen[i]) throw core::invariant_error("duplicate source index " + std::to_string(i));
        seen[i] = true;
    }
}

inline std::vector<std::size_t> target_indices(const TriMorphism& f) {
    check_morphism(f);
    if (std::holds_alternative<ClosedTrisection>(f.tri)) return {};
    const RelativeTrisection& t = std::get<RelativeTrisection>(f.tri);
    std::vector<bool> is_source(t.boundary.size(), false);
    for (std::size_t i : f.source) is_source[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.boundary.size(); ++i)
        if (!is_source[i]) out.push_back(i);
    return out;
}

// Glue f's outgoing end to g's incoming end (matched in index order).
inline TriMorphism compose(const TriMorphism& f, const TriMorphism& g) {
    check_morphism(f);
    check_morphism(g);
    std::vector<std::size_t> tf = target_indices(f);
    std::vector<std::size_t> sg = g.source;
    std::sort(sg.begin(), sg.end());
    if (tf.size() != sg.size())
        throw core::invariant_error("target of first morphism has " + std::to_string(tf.size()) +
                                    " components, source of second has " +
                                    std::to_string(sg.size()));
    if (tf.empty()) throw core::invariant_error("morphisms share no boundary to glue");

    GluePairing pairing;
    for (std::size_t i = 0; i < tf.size(); ++i) pairing.emplace_back(tf[i], sg[i]);
    const RelativeTrisection& x = std::get<RelativeTrisection>(f.tri);
    const RelativeTrisection& w = std::get<RelativeTrisection>(g.tri);

    TriMorphism out;
    out.tri = glue(x, w, pairing);
    // Unpaired components land as: all of f.source first, then g's targets.
    for (std::size_t i = 0; i < f.source.size(); ++i) out.source.push_back(i);
    check_morphism(out);
    return out;
}

// The product cobordism M x I over the open book's 3-manifold M: both ends
// carry the given page and word, the source end with reversed orientation.
// Parameters come out of the handle bookkeeping with a single 1-handle
// joining the two halves, every 2-handle contributing one splitting
// stabilization; chi = 0 as a product must have.
inline TriMorphism identity_trisection(const OpenBook& ob) {
    openbook::check_open_book(ob);
    if (ob.pages.size() != 1)
        throw core::invariant_error("identity expects a single-component open book");
    const long long p = ob.pages[0].genus;
    const long long b = ob.pages[0].boundary;

    OpenBook source_side = ob;
    source_side.word = openbook::reverse_flip(ob.word);

    RelativeTrisection t;
    t.surface_genus = 6 * p + 2 * b - 2;
    t.surface_boundary = 2 * b;
    t.k = 4 * p + 2 * b - 2;
    t.boundary = {source_side, ob};

    TriMorphism out;
    out.tri = std::move(t);
    out.source = {0};
    check_morphism(out);
    if (trisection::euler(out.tri) != 0)
        throw core::invariant_error("identity cobordism must have chi = 0 (internal)");
    return out;
}

}  // namespace tricalc::gluing
