#pragma once

// Shared generators and independent oracles.  Every oracle here recomputes
// its value from raw data by a different route than the library (inclusion-
// exclusion for chi, determinantal divisors for Smith form) so agreement is
// meaningful.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tricalc/tricalc.hpp"

namespace testutil {

using Rng = std::mt19937;

inline long long rnd(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline tricalc::core::HomologyClass random_class(Rng& rng, const tricalc::core::Surface& s,
                                                 long long lo = -3, long long hi = 3) {
    tricalc::core::HomologyClass c(tricalc::core::h1_rank(s));
    for (auto& x : c) x = rnd(rng, lo, hi);
    return c;
}

inline tricalc::core::HomologyClass random_nonzero_class(Rng& rng,
                                                         const tricalc::core::Surface& s) {
    tricalc::core::HomologyClass c = random_class(rng, s);
    bool zero = true;
    for (const auto& x : c)
        if (x != 0) zero = false;
    if (zero && !c.empty()) c[static_cast<std::size_t>(rnd(rng, 0, c.size() - 1))] = 1;
    return c;
}

inline std::vector<tricalc::openbook::TwistLetter> random_word(Rng& rng,
                                                               const tricalc::core::Surface& page,
                                                               long long max_len = 3) {
    std::vector<tricalc::openbook::TwistLetter> word;
    const long long len = rnd(rng, 0, max_len);
    for (long long i = 0; i < len; ++i)
        word.push_back(tricalc::openbook::TwistLetter{0, random_class(rng, page),
                                                      rnd(rng, 0, 1) ? 1 : -1});
    return word;
}

inline tricalc::openbook::OpenBook random_book(Rng& rng, long long min_page_boundary = 1) {
    tricalc::core::Surface page{rnd(rng, 0, 2), rnd(rng, min_page_boundary, 3)};
    return tricalc::openbook::OpenBook{{page}, random_word(rng, page)};
}

// Valid by construction: pick the free quantities (pages, n - (m-1), s) and
// solve for k and G.
inline tricalc::trisection::RelativeTrisection random_relative(Rng& rng,
                                                               long long min_page_boundary = 1) {
    tricalc::trisection::RelativeTrisection t;
    const long long m = rnd(rng, 1, 3);
    long long p = 0, b = 0;
    for (long long i = 0; i < m; ++i) {
        t.boundary.push_back(random_book(rng, min_page_boundary));
        p += t.boundary.back().pages[0].genus;
        b += t.boundary.back().pages[0].boundary;
    }
    const long long extra = rnd(rng, 0, 3);  // n - (m-1)
    const long long stabs = rnd(rng, 0, 3);  // s
    const long long g_base = p + extra;
    const long long n = m - 1 + extra;
    t.surface_boundary = b;
    t.surface_genus = g_base + stabs;
    t.k = 2 * g_base + b - 1 - n;
    return t;
}

inline tricalc::trisection::ClosedTrisection random_closed(Rng& rng) {
    const long long k = rnd(rng, 0, 3);
    return tricalc::trisection::ClosedTrisection{k + rnd(rng, 0, 4), k};
}

// Independent Euler characteristic: inclusion-exclusion over the three
// 4-dimensional pieces, their pairwise 3-dimensional intersections, and the
// central surface.  chi(Z) = 1 - k; chi(Y) = chi(F_{G,b}) + n + s since each
// pairwise piece is the central surface compressed n + s times; chi(F) is
// the surface formula.  Derived quantities recomputed from scratch here.
inline long long chi_oracle(const tricalc::trisection::RelativeTrisection& t) {
    const long long m = static_cast<long long>(t.boundary.size());
    long long p = 0;
    for (const auto& ob : t.boundary) p += ob.pages[0].genus;
    const long long G = t.surface_genus, b = t.surface_boundary, k = t.k;
    const long long g_base = k + m - p - b;
    const long long n = g_base - p + m - 1;
    const long long s = G - g_base;
    const long long chi_f = 2 - 2 * G - b;
    const long long chi_y = chi_f + n + s;
    const long long chi_z = 1 - k;
    return 3 * chi_z - 3 * chi_y + chi_f;
}

inline long long chi_oracle_closed(const tricalc::trisection::ClosedTrisection& t) {
    const long long chi_f = 2 - 2 * t.g;
    const long long chi_y = 1 - t.g;  // genus-g Heegaard handlebody
    const long long chi_z = 1 - t.k;
    return 3 * chi_z - 3 * chi_y + chi_f;
}

// Matching boundary pair: W copies the glued pages of X and carries the
// orientation-reversed words, so every pair is compatible by construction.
struct GlueCase {
    tricalc::trisection::RelativeTrisection x, w;
    tricalc::gluing::GluePairing pairing;
};

inline GlueCase random_glue_case(Rng& rng) {
    GlueCase out;
    out.x = random_relative(rng);
    const long long mx = static_cast<long long>(out.x.boundary.size());
    const long long n_pairs = rnd(rng, 1, mx);

    std::vector<std::size_t> xs(out.x.boundary.size());
    std::iota(xs.begin(), xs.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    xs.resize(static_cast<std::size_t>(n_pairs));

    const long long extra_comps = rnd(rng, 0, 2);
    long long p = 0, b = 0;
    std::vector<tricalc::openbook::OpenBook> comps;
    for (std::size_t xi : xs) {
        tricalc::openbook::OpenBook ob = out.x.boundary[xi];
        ob.word = tricalc::openbook::reverse_flip(ob.word);
        comps.push_back(ob);
    }
    for (long long i = 0; i < extra_comps; ++i) comps.push_back(random_book(rng));
    std::shuffle(comps.begin(), comps.end(), rng);

    for (const auto& ob : comps) {
        p += ob.pages[0].genus;
        b += ob.pages[0].boundary;
    }
    const long long mu = static_cast<long long>(comps.size());
    const long long extra = rnd(rng, 0, 3);
    const long long stabs = rnd(rng, 0, 3);
    const long long g_base = p + extra;
    out.w.surface_boundary = b;
    out.w.surface_genus = g_base + stabs;
    out.w.k = 2 * g_base + b - 1 - (mu - 1 + extra);
    out.w.boundary = comps;

    // Recover where each glued component landed after the shuffle.
    std::vector<bool> taken(comps.size(), false);
    for (std::size_t xi : xs) {
        tricalc::openbook::OpenBook want = out.x.boundary[xi];
        want.word = tricalc::openbook::reverse_flip(want.word);
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (!taken[j] && comps[j] == want) {
                out.pairing.emplace_back(xi, j);
                taken[j] = true;
                break;
            }
        }
    }
    return out;
}

// Single-page objects and the cobordisms between them, for category tests.
// Source components carry the orientation-reversed object words.
inline std::vector<tricalc::openbook::OpenBook> random_object(Rng& rng, long long min_comps,
                                                              long long max_comps) {
    std::vector<tricalc::openbook::OpenBook> obs;
    const long long n = rnd(rng, min_comps, max_comps);
    for (long long i = 0; i < n; ++i) obs.push_back(random_book(rng));
    return obs;
}

inline tricalc::gluing::TriMorphism random_morphism_between(
    Rng& rng, const std::vector<tricalc::openbook::OpenBook>& a,
    const std::vector<tricalc::openbook::OpenBook>& b) {
    tricalc::trisection::RelativeTrisection t;
    tricalc::gluing::TriMorphism f;
    long long p = 0, bd = 0;
    for (const auto& ob : a) {
        tricalc::openbook::OpenBook rev = ob;
        rev.word = tricalc::openbook::reverse_flip(ob.word);
        t.boundary.push_back(rev);
    }
    for (const auto& ob : b) t.boundary.push_back(ob);
    for (const auto& ob : t.boundary) {
        p += ob.pages[0].genus;
        bd += ob.pages[0].boundary;
    }
    const long long m = static_cast<long long>(t.boundary.size());
    const long long extra = rnd(rng, 0, 2);
    const long long stabs = rnd(rng, 0, 2);
    const long long g_base = p + extra;
    t.surface_boundary = bd;
    t.surface_genus = g_base + stabs;
    t.k = 2 * g_base + bd - 1 - (m - 1 + extra);
    f.tri = std::move(t);
    for (std::size_t i = 0; i < a.size(); ++i) f.source.push_back(i);
    return f;
}

// Determinantal-divisor oracle: d_1 * ... * d_k equals the gcd of all k x k
// minors, so d_k = gcd_k / gcd_{k-1}.  Exponential in size; use on small
// matrices only.
inline std::vector<tricalc::core::Int> smith_diagonal_oracle(const tricalc::core::IntMatrix& a) {
    using tricalc::core::Int;
    using tricalc::core::IntMatrix;
    const std::size_t r = a.rows(), c = a.cols();
    const std::size_t kmax = r < c ? r : c;
    std::vector<Int> gcds;  // gcd of k x k minors
    for (std::size_t k = 1; k <= kmax; ++k) {
        Int g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        // enumerate k-subsets of rows and columns
        std::vector<std::size_t> rsel(k);
        for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
        while (true) {
            std::vector<std::size_t> csel(k);
            for (std::size_t i = 0; i < k; ++i) csel[i] = i;
            while (true) {
                IntMatrix minor(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(rsel[i], csel[j]);
                g = boost::multiprecision::gcd(g, determinant(minor));
                // next column subset
                std::size_t t = k;
                while (t > 0 && csel[t - 1] == c - k + t - 1) --t;
                if (t == 0) break;
                ++csel[t - 1];
                for (std::size_t u = t; u < k; ++u) csel[u] = csel[u - 1] + 1;
            }
            std::size_t t = k;
            while (t > 0 && rsel[t - 1] == r - k + t - 1) --t;
            if (t == 0) break;
            ++rsel[t - 1];
            for (std::size_t u = t; u < k; ++u) rsel[u] = rsel[u - 1] + 1;
        }
        gcds.push_back(g);
    }
    std::vector<Int> d(kmax, 0);
    Int prev = 1;
    for (std::size_t k = 0; k < kmax; ++k) {
        if (gcds[k] == 0) break;  // rank reached; the rest stay zero
        d[k] = gcds[k] / prev;
        prev = gcds[k];
    }
    return d;
}

inline tricalc::core::IntMatrix random_matrix(Rng& rng, std::size_t max_dim = 6,
                                              long long lo = -9, long long hi = 9) {
    const std::size_t r = static_cast<std::size_t>(rnd(rng, 0, max_dim));
    const std::size_t c = static_cast<std::size_t>(rnd(rng, 0, max_dim));
    tricalc::core::IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rnd(rng, lo, hi);
    return m;
}

// Named fixtures used across suites.
inline tricalc::openbook::OpenBook disk_book() {
    return tricalc::openbook::OpenBook{{tricalc::core::Surface{0, 1}}, {}};
}
inline tricalc::trisection::RelativeTrisection b4_tuple() {
    return tricalc::trisection::RelativeTrisection{0, 1, 0, {disk_book()}};
}
inline tricalc::trisection::RelativeTrisection s3xi_tuple() {
    return tricalc::trisection::RelativeTrisection{0, 2, 0, {disk_book(), disk_book()}};
}

}  // namespace testutil
