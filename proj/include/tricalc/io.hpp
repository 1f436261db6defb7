#pragma once

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "tricalc/gluing.hpp"
#include "tricalc/lefschetz.hpp"

namespace tricalc::io {

using Json = nlohmann::ordered_json;

using TriDocument =
    std::variant<trisection::RelativeTrisection, trisection::ClosedTrisection, openbook::OpenBook,
                 lefschetz::LefschetzFibration, gluing::TriMorphism>;

namespace detail {

inline const Json& require_key(const Json& j, const std::string& key) {
    if (!j.is_object()) throw schema_error("expected an object holding key \"" + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error("missing key \"" + key + "\"");
    return *it;
}

inline void reject_unknown(const Json& j, std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (item.key() == a) ok = true;
        if (!ok) throw schema_error("unknown key \"" + item.key() + "\"");
    }
}

inline long long as_int(const Json& v, const std::string& key) {
    if (!v.is_number_integer()) throw schema_error("key \"" + key + "\" must be an integer");
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        throw schema_error("key \"" + key + "\" is too large");
    return v.get<long long>();
}

inline long long require_int(const Json& j, const std::string& key) {
    return as_int(require_key(j, key), key);
}

inline long long require_nonneg(const Json& j, const std::string& key) {
    long long v = require_int(j, key);
    if (v < 0) throw schema_error("key \"" + key + "\" must be non-negative");
    return v;
}

inline int require_sign(const Json& j) {
    long long s = require_int(j, "sign");
    if (s != 1 && s != -1) throw schema_error("key \"sign\" must be 1 or -1");
    return static_cast<int>(s);
}

inline core::HomologyClass require_curve(const Json& j, std::size_t rank) {
    const Json& arr = require_key(j, "curve");
    if (!arr.is_array()) throw schema_error("key \"curve\" must be an array of integers");
    core::HomologyClass c;
    for (const Json& e : arr) c.push_back(core::Int(as_int(e, "curve")));
    if (c.size() != rank)
        throw schema_error("key \"curve\" has length " + std::to_string(c.size()) +
                           " but the page's homology rank is " + std::to_string(rank));
    return c;
}

inline core::Surface require_page(const Json& j) {
    reject_unknown(j, {"page_genus", "page_boundary", "word"});
    return core::Surface{require_nonneg(j, "page_genus"), require_nonneg(j, "page_boundary")};
}

inline trisection::RelativeTrisection parse_trisection_body(const Json& j, bool with_source) {
    trisection::RelativeTrisection t;
    t.surface_genus = require_int(j, "surface_genus");
    t.surface_boundary = require_int(j, "surface_boundary");
    t.k = require_int(j, "k");
    const Json& comps = require_key(j, "boundary");
    if (!comps.is_array()) throw schema_error("key \"boundary\" must be an array");
    for (const Json& cj : comps) {
        if (!cj.is_object()) throw schema_error("key \"boundary\" must hold objects");
        openbook::OpenBook ob;
        ob.pages = {require_page(cj)};
        const Json& word = require_key(cj, "word");
        if (!word.is_array()) throw schema_error("key \"word\" must be an array");
        for (const Json& wj : word) {
            if (!wj.is_object()) throw schema_error("key \"word\" must hold objects");
            reject_unknown(wj, {"curve", "sign"});
            ob.word.push_back(openbook::TwistLetter{0, require_curve(wj, core::h1_rank(ob.pages[0])),
                                                    require_sign(wj)});
        }
        t.boundary.push_back(std::move(ob));
    }
    (void)with_source;
    return t;
}

inline long long to_int64(const core::Int& x) {
    static const core::Int lo = std::numeric_limits<long long>::min();
    static const core::Int hi = std::numeric_limits<long long>::max();
    if (x < lo || x > hi)
        throw core::invariant_error("coefficient does not fit the serialized integer range");
    return x.convert_to<long long>();
}

inline Json letter_json(const core::HomologyClass& curve, int sign) {
    Json w = Json::object();
    Json arr = Json::array();
    for (const core::Int& x : curve) arr.push_back(to_int64(x));
    w["curve"] = std::move(arr);
    w["sign"] = sign;
    return w;
}

inline Json trisection_body(const trisection::RelativeTrisection& t) {
    Json j = Json::object();
    j["kind"] = "trisection";
    j["surface_genus"] = t.surface_genus;
    j["surface_boundary"] = t.surface_boundary;
    j["k"] = t.k;
    Json comps = Json::array();
    for (const openbook::OpenBook& ob : t.boundary) {
        Json cj = Json::object();
        cj["page_genus"] = ob.pages.at(0).genus;
        cj["page_boundary"] = ob.pages.at(0).boundary;
        Json word = Json::array();
        for (const openbook::TwistLetter& w : ob.word) word.push_back(letter_json(w.curve, w.sign));
        cj["word"] = std::move(word);
        comps.push_back(std::move(cj));
    }
    j["boundary"] = std::move(comps);
    return j;
}

}  // namespace detail

inline TriDocument parse(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what());
    }
    if (!j.is_object()) throw schema_error("document must be a JSON object");
    const Json& kj = detail::require_key(j, "kind");
    if (!kj.is_string()) throw schema_error("key \"kind\" must be a string");
    const std::string kind = kj.get<std::string>();

    if (kind == "trisection") {
        detail::reject_unknown(j, {"kind", "surface_genus", "surface_boundary", "k", "boundary"});
        return detail::parse_trisection_body(j, false);
    }
    if (kind == "closed") {
        detail::reject_unknown(j, {"kind", "g", "k"});
        return trisection::ClosedTrisection{detail::require_int(j, "g"),
                                            detail::require_int(j, "k")};
    }
    if (kind == "morphism") {
        detail::reject_unknown(
            j, {"kind", "surface_genus", "surface_boundary", "k", "boundary", "source"});
        gluing::TriMorphism f;
        trisection::RelativeTrisection t = detail::parse_trisection_body(j, true);
        const Json& src = detail::require_key(j, "source");
        if (!src.is_array()) throw schema_error("key \"source\" must be an array of indices");
        std::vector<bool> seen(t.boundary.size(), false);
        for (const Json& e : src) {
            long long v = detail::as_int(e, "source");
            if (v < 0 || v >= static_cast<long long>(t.boundary.size()))
                throw schema_error("key \"source\" holds index " + std::to_string(v) +
                                   " outside the boundary list");
            if (seen[static_cast<std::size_t>(v)])
                throw schema_error("key \"source\" repeats index " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = true;
            f.source.push_back(static_cast<std::size_t>(v));
        }
        f.tri = std::move(t);
        return f;
    }
    if (kind == "openbook") {
        detail::reject_unknown(j, {"kind", "pages", "word"});
        openbook::OpenBook ob;
        const Json& pages = detail::require_key(j, "pages");
        if (!pages.is_array()) throw schema_error("key \"pages\" must be an array");
        for (const Json& pj : pages) {
            if (!pj.is_object()) throw schema_error("key \"pages\" must hold objects");
            detail::reject_unknown(pj, {"page_genus", "page_boundary"});
            ob.pages.push_back(core::Surface{detail::require_nonneg(pj, "page_genus"),
                                             detail::require_nonneg(pj, "page_boundary")});
        }
        const Json& word = detail::require_key(j, "word");
        if (!word.is_array()) throw schema_error("key \"word\" must be an array");
        for (const Json& wj : word) {
            if (!wj.is_object()) throw schema_error("key \"word\" must hold objects");
            detail::reject_unknown(wj, {"component", "curve", "sign"});
            long long comp = detail::require_nonneg(wj, "component");
            if (comp >= static_cast<long long>(ob.pages.size()))
                throw schema_error("key \"component\" holds index " + std::to_string(comp) +
                                   " outside the page list");
            ob.word.push_back(openbook::TwistLetter{
                static_cast<std::size_t>(comp),
                detail::require_curve(wj, core::h1_rank(ob.pages[static_cast<std::size_t>(comp)])),
                detail::require_sign(wj)});
        }
        return ob;
    }
    if (kind == "lefschetz") {
        detail::reject_unknown(j, {"kind", "fiber_genus", "fiber_boundary", "cycles"});
        lefschetz::LefschetzFibration lf;
        lf.fiber = core::Surface{detail::require_nonneg(j, "fiber_genus"),
                                 detail::require_nonneg(j, "fiber_boundary")};
        const Json& cycles = detail::require_key(j, "cycles");
        if (!cycles.is_array()) throw schema_error("key \"cycles\" must be an array");
        for (const Json& cj : cycles) {
            if (!cj.is_object()) throw schema_error("key \"cycles\" must hold objects");
            detail::reject_unknown(cj, {"curve", "sign"});
            lf.cycles.push_back(lefschetz::VanishingCycle{
                detail::require_curve(cj, core::h1_rank(lf.fiber)), detail::require_sign(cj)});
        }
        return lf;
    }
    throw schema_error("unknown kind \"" + kind + "\"");
}

inline std::string serialize(const TriDocument& doc) {
    Json j;
    if (const auto* t = std::get_if<trisection::RelativeTrisection>(&doc)) {
        j = detail::trisection_body(*t);
    } else if (const auto* c = std::get_if<trisection::ClosedTrisection>(&doc)) {
        j = Json::object();
        j["kind"] = "closed";
        j["g"] = c->g;
        j["k"] = c->k;
    } else if (const auto* f = std::get_if<gluing::TriMorphism>(&doc)) {
        if (const auto* c2 = std::get_if<trisection::ClosedTrisection>(&f->tri)) {
            j = Json::object();
            j["kind"] = "closed";
            j["g"] = c2->g;
            j["k"] = c2->k;
        } else {
            j = detail::trisection_body(std::get<trisection::RelativeTrisection>(f->tri));
            j["kind"] = "morphism";
            Json src = Json::array();
            for (std::size_t i : f->source) src.push_back(static_cast<long long>(i));
            j["source"] = std::move(src);
        }
    } else if (const auto* ob = std::get_if<openbook::OpenBook>(&doc)) {
        j = Json::object();
        j["kind"] = "openbook";
        Json pages = Json::array();
        for (const core::Surface& p : ob->pages) {
            Json pj = Json::object();
            pj["page_genus"] = p.genus;
            pj["page_boundary"] = p.boundary;
            pages.push_back(std::move(pj));
        }
        j["pages"] = std::move(pages);
        Json word = Json::array();
        for (const openbook::TwistLetter& w : ob->word) {
            Json wj = Json::object();
            wj["component"] = static_cast<long long>(w.component);
            Json cw = detail::letter_json(w.curve, w.sign);
            wj["curve"] = std::move(cw["curve"]);
            wj["sign"] = w.sign;
            word.push_back(std::move(wj));
        }
        j["word"] = std::move(word);
    } else {
        const auto& lf = std::get<lefschetz::LefschetzFibration>(doc);
        j = Json::object();
        j["kind"] = "lefschetz";
        j["fiber_genus"] = lf.fiber.genus;
        j["fiber_boundary"] = lf.fiber.boundary;
        Json cycles = Json::array();
        for (const lefschetz::VanishingCycle& c : lf.cycles)
            cycles.push_back(detail::letter_json(c.curve, c.sign));
        j["cycles"] = std::move(cycles);
    }
    return j.dump(2) + "\n";
}

}  // namespace tricalc::io
