#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tricalc/surface.hpp"

namespace tricalc::openbook {

using core::HomologyClass;
using core::Int;
using core::IntMatrix;
using core::Surface;

// One signed Dehn twist at the homology level, living on one page component.
struct TwistLetter {
    std::size_t component = 0;
    HomologyClass curve;
    int sign = 1;

    bool operator==(const TwistLetter&) const = default;
};

// Abstract open book: disjoint pages plus a monodromy word.  word[0] is the
// outermost twist, i.e. the word is applied right to left as a composition.
struct OpenBook {
    std::vector<Surface> pages;
    std::vector<TwistLetter> word;

    bool operator==(const OpenBook&) const = default;
};

enum class StabVariant {
    same_binding,        // page (p,b) -> (p,b+1)
    different_bindings,  // page (p,b) -> (p+1,b-1), needs b >= 2
};

inline void check_open_book(const OpenBook& ob) {
    for (std::size_t i = 0; i < ob.pages.size(); ++i) {
        core::check_surface(ob.pages[i]);
        if (ob.pages[i].boundary < 1)
            throw core::invariant_error("page " + std::to_string(i) +
                                        " is closed (binding must be nonempty)");
    }
    for (const TwistLetter& w : ob.word) {
        if (w.component >= ob.pages.size())
            throw core::invariant_error("twist references page component " +
                                        std::to_string(w.component) + " of " +
                                        std::to_string(ob.pages.size()));
        if (w.curve.size() != core::h1_rank(ob.pages[w.component]))
            throw core::invariant_error("twist curve length " + std::to_string(w.curve.size()) +
                                        " does not match page rank " +
                                        std::to_string(core::h1_rank(ob.pages[w.component])));
        if (w.sign != 1 && w.sign != -1)
            throw core::invariant_error("twist sign must be +1 or -1");
    }
}

// Homology action of a Dehn twist about c: x -> x + sign * (c^T J x) * c,
// the symplectic transvection T = I + sign * c (c^T J).
inline IntMatrix transvection_matrix(const Surface& s, const HomologyClass& c, int sign) {
    const std::size_t n = core::h1_rank(s);
    if (c.size() != n)
        throw core::invariant_error("class length " + std::to_string(c.size()) +
                                    " does not match H1 rank " + std::to_string(n));
    const IntMatrix j = core::intersection_form(s);
    std::vector<Int> row(n);  // c^T J
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) row[k] += c[i] * j(i, k);
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) t(i, k) += sign * c[i] * row[k];
    return t;
}

// Per page component, the product of the letter matrices in word order
// (word[0] outermost / leftmost factor).
inline std::vector<IntMatrix> monodromy_action(const OpenBook& ob) {
    check_open_book(ob);
    std::vector<IntMatrix> act;
    act.reserve(ob.pages.size());
    for (const Surface& p : ob.pages) act.push_back(IntMatrix::identity(core::h1_rank(p)));
    for (const TwistLetter& w : ob.word) {
        const std::size_t c = w.component;
        act[c] = act[c] * transvection_matrix(ob.pages[c], w.curve, w.sign);
    }
    return act;
}

// The monodromy of the same open book with reversed orientation: word
// reversed, all twist signs flipped.  Acts as the inverse on H1.
inline std::vector<TwistLetter> reverse_flip(const std::vector<TwistLetter>& word) {
    std::vector<TwistLetter> out(word.rbegin(), word.rend());
    for (TwistLetter& w : out) w.sign = -w.sign;
    return out;
}

namespace detail {

// Coordinate re-embedding of an old page class into the stabilized page.
inline HomologyClass embed_class(const Surface& old_page, StabVariant variant,
                                 const HomologyClass& c) {
    const std::size_t p = static_cast<std::size_t>(old_page.genus);
    const std::size_t b = static_cast<std::size_t>(old_page.boundary);
    if (variant == StabVariant::same_binding) {
        HomologyClass out = c;
        out.push_back(0);  // new slot d_b
        return out;
    }
    // different_bindings: (p,b) -> (p+1,b-1).  Old d_{b-1} becomes the new
    // b_{p+1} (the class running over the new handle); other slots keep rank.
    HomologyClass out(2 * p + b, 0);
    for (std::size_t i = 0; i < 2 * p; ++i) out[i] = c[i];
    out[2 * p + 1] = c[2 * p + (b - 2)];                        // b_{p+1} <- d_{b-1}
    for (std::size_t j = 0; j + 2 < b; ++j) out[2 * p + 2 + j] = c[2 * p + j];
    return out;
}

}  // namespace detail

// Plumb a Hopf band onto page `comp`; the compensating twist about the new
// curve is prepended as the outermost letter of the word.
inline OpenBook hopf_stabilize(const OpenBook& ob, std::size_t comp, StabVariant variant,
                               int sign) {
    check_open_book(ob);
    if (comp >= ob.pages.size())
        throw core::invariant_error("no page component " + std::to_string(comp));
    const Surface old_page = ob.pages[comp];
    if (variant == StabVariant::different_bindings && old_page.boundary < 2)
        throw core::invariant_error(
            "different_bindings stabilization needs two binding circles, page has " +
            std::to_string(old_page.boundary));
    if (sign != 1 && sign != -1) throw core::invariant_error("stabilization sign must be +1 or -1");

    OpenBook out = ob;
    Surface new_page = variant == StabVariant::same_binding
                           ? Surface{old_page.genus, old_page.boundary + 1}
                           : Surface{old_page.genus + 1, old_page.boundary - 1};
    out.pages[comp] = new_page;
    for (TwistLetter& w : out.word)
        if (w.component == comp) w.curve = detail::embed_class(old_page, variant, w.curve);

    TwistLetter stab;
    stab.component = comp;
    stab.sign = sign;
    const std::size_t slot =
        variant == StabVariant::same_binding
            ? core::d_slot(new_page, static_cast<std::size_t>(new_page.boundary) - 2)  // d_b
            : core::a_slot(static_cast<std::size_t>(new_page.genus) - 1);              // a_{p+1}
    stab.curve = core::basis_class(new_page, slot);
    out.word.insert(out.word.begin(), stab);
    return out;
}

using Pairing = std::vector<std::pair<std::size_t, std::size_t>>;

// Page-and-monodromy compatibility across an orientation-reversing
// identification: paired pages equal and the paired H1 actions are mutually
// inverse (ob2's word reversed with signs flipped must act like ob1's).
// `force` skips the word check, never the page check.
inline bool compatible(const OpenBook& ob1, const OpenBook& ob2, const Pairing& pairing,
                       bool force = false) {
    check_open_book(ob1);
    check_open_book(ob2);
    std::vector<bool> seen1(ob1.pages.size(), false), seen2(ob2.pages.size(), false);
    for (const auto& [i, j] : pairing) {
        if (i >= ob1.pages.size() || j >= ob2.pages.size())
            throw core::invariant_error("pairing index out of range");
        if (seen1[i] || seen2[j]) throw core::invariant_error("pairing is not injective");
        seen1[i] = seen2[j] = true;
    }
    for (const auto& [i, j] : pairing)
        if (ob1.pages[i] != ob2.pages[j]) return false;
    if (force) return true;
    const std::vector<IntMatrix> act1 = monodromy_action(ob1);
    const std::vector<IntMatrix> act2 = monodromy_action(ob2);
    for (const auto& [i, j] : pairing)
        if (!(act1[i] * act2[j]).is_identity()) return false;
    return true;
}

}  // namespace tricalc::openbook
