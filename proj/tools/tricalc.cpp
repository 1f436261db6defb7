#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tricalc/tricalc.hpp"

namespace {

using namespace tricalc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

io::TriDocument load(const std::string& path) { return io::parse(read_file(path)); }

// Commands that operate on trisections accept plain trisection documents,
// closed documents, and morphisms (using the underlying trisection).
trisection::Trisection as_trisection(const io::TriDocument& doc, const std::string& role) {
    if (const auto* t = std::get_if<trisection::RelativeTrisection>(&doc)) return *t;
    if (const auto* c = std::get_if<trisection::ClosedTrisection>(&doc)) return *c;
    if (const auto* f = std::get_if<gluing::TriMorphism>(&doc)) return f->tri;
    throw invariant_error(role + ": expected a trisection, closed, or morphism document");
}

trisection::RelativeTrisection as_relative(const io::TriDocument& doc, const std::string& role) {
    trisection::Trisection t = as_trisection(doc, role);
    if (std::holds_alternative<trisection::ClosedTrisection>(t))
        throw invariant_error(role + ": a closed trisection has no boundary here");
    return std::get<trisection::RelativeTrisection>(t);
}

gluing::TriMorphism as_morphism(const io::TriDocument& doc, const std::string& role) {
    if (const auto* f = std::get_if<gluing::TriMorphism>(&doc)) return *f;
    if (const auto* t = std::get_if<trisection::RelativeTrisection>(&doc))
        return gluing::TriMorphism{*t, {}};  // cobordism out of the empty manifold
    if (const auto* c = std::get_if<trisection::ClosedTrisection>(&doc))
        return gluing::TriMorphism{*c, {}};
    throw invariant_error(role + ": expected a morphism document");
}

void print_document(const io::TriDocument& doc) { std::cout << io::serialize(doc); }

void print_trisection(const trisection::Trisection& t) {
    if (const auto* c = std::get_if<trisection::ClosedTrisection>(&t))
        print_document(io::TriDocument{*c});
    else
        print_document(io::TriDocument{std::get<trisection::RelativeTrisection>(t)});
}

openbook::StabVariant variant_from_flag(const std::string& v) {
    return v == "band" ? openbook::StabVariant::same_binding
                       : openbook::StabVariant::different_bindings;
}

int sign_from_flag(const std::string& s) { return s == "+" ? 1 : -1; }

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw invariant_error("--pair expects i:j, got \"" + text + "\"");
    try {
        long long i = std::stoll(text.substr(0, colon));
        long long j = std::stoll(text.substr(colon + 1));
        if (i < 0 || j < 0) throw std::invalid_argument("negative");
        return {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
    } catch (const std::exception&) {
        throw invariant_error("--pair expects i:j, got \"" + text + "\"");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculus of relative trisections of 4-manifolds"};
    app.require_subcommand(1);
    int rc = 0;

    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "check invariants, print derived report");
    cmd_validate->add_option("file", validate_file, "input document")->required();
    cmd_validate->callback([&] {
        io::TriDocument doc = load(validate_file);
        trisection::Trisection t = as_trisection(doc, "validate");
        if (const auto* c = std::get_if<trisection::ClosedTrisection>(&t)) {
            trisection::check_closed(*c);
            std::cout << "g = " << c->g << "\n";
            std::cout << "k = " << c->k << "\n";
            std::cout << "chi = " << trisection::euler(*c) << "\n";
            return;
        }
        const auto& rel = std::get<trisection::RelativeTrisection>(t);
        trisection::DerivedReport r = trisection::validate(rel);
        std::cout << "m = " << r.m << "\n";
        std::cout << "p = " << r.p << "\n";
        std::cout << "g_base = " << r.g_base << "\n";
        std::cout << "n = " << r.n << "\n";
        std::cout << "s = " << r.s << "\n";
        for (std::size_t i = 0; i < r.l_i.size(); ++i)
            std::cout << "l_" << i << " = " << r.l_i[i] << "\n";
        std::cout << "l = " << r.l << "\n";
        std::cout << "chi = " << r.chi << "\n";
    });

    std::string euler_file;
    auto* cmd_euler = app.add_subcommand("euler", "print the Euler characteristic");
    cmd_euler->add_option("file", euler_file, "input document")->required();
    cmd_euler->callback([&] {
        std::cout << "chi = " << trisection::euler(as_trisection(load(euler_file), "euler"))
                  << "\n";
    });

    std::string stab_file, stab_variant = "band", stab_sign = "+";
    long long stab_idx = 0;
    auto* cmd_stab = app.add_subcommand("stabilize", "interior or relative stabilization");
    cmd_stab->add_option("file", stab_file, "input document")->required();
    auto* opt_interior = cmd_stab->add_flag("--interior", "interior stabilization");
    auto* opt_relative =
        cmd_stab->add_option("--relative", stab_idx, "boundary component to stabilize at");
    opt_interior->excludes(opt_relative);
    cmd_stab->add_option("--variant", stab_variant, "band (same binding) or handle (new handle)")
        ->check(CLI::IsMember({"band", "handle"}));
    cmd_stab->add_option("--sign", stab_sign, "twist sign")->check(CLI::IsMember({"+", "-"}));
    cmd_stab->callback([&] {
        io::TriDocument doc = load(stab_file);
        if (!*opt_interior && !*opt_relative)
            throw invariant_error("choose --interior or --relative IDX");
        if (*opt_interior) {
            if (auto* f = std::get_if<gluing::TriMorphism>(&doc)) {
                f->tri = trisection::interior_stabilize(f->tri);
                print_document(doc);
            } else {
                print_trisection(
                    trisection::interior_stabilize(as_trisection(doc, "stabilize")));
            }
            return;
        }
        if (stab_idx < 0) throw invariant_error("--relative index must be non-negative");
        const auto variant = variant_from_flag(stab_variant);
        const int sign = sign_from_flag(stab_sign);
        if (auto* f = std::get_if<gluing::TriMorphism>(&doc)) {
            f->tri = trisection::relative_stabilize(
                as_relative(doc, "stabilize"), static_cast<std::size_t>(stab_idx), variant, sign);
            print_document(doc);
        } else {
            print_trisection(trisection::relative_stabilize(as_relative(doc, "stabilize"),
                                                            static_cast<std::size_t>(stab_idx),
                                                            variant, sign));
        }
    });

    std::string sum_a, sum_b;
    auto* cmd_sum = app.add_subcommand("sum", "connected sum of two trisections");
    cmd_sum->add_option("file1", sum_a, "first document")->required();
    cmd_sum->add_option("file2", sum_b, "second document")->required();
    cmd_sum->callback([&] {
        print_trisection(trisection::connected_sum(as_trisection(load(sum_a), "sum"),
                                                   as_trisection(load(sum_b), "sum")));
    });

    std::string glue_a, glue_b;
    std::vector<std::string> glue_pairs;
    auto* cmd_glue = app.add_subcommand("glue", "glue two trisections along boundary components");
    cmd_glue->add_option("file1", glue_a, "first document")->required();
    cmd_glue->add_option("file2", glue_b, "second document")->required();
    cmd_glue->add_option("--pair", glue_pairs, "boundary pair i:j")->required();
    cmd_glue->callback([&] {
        gluing::GluePairing pairing;
        for (const std::string& p : glue_pairs) pairing.push_back(parse_pair(p));
        print_trisection(gluing::glue(as_relative(load(glue_a), "glue"),
                                      as_relative(load(glue_b), "glue"), pairing));
    });

    std::string lf_file;
    long long lf_crossings = -1;
    auto* cmd_lf = app.add_subcommand("from-lefschetz", "convert a Lefschetz fibration");
    cmd_lf->add_option("file", lf_file, "lefschetz document")->required();
    auto* opt_crossings =
        cmd_lf->add_option("--crossings", lf_crossings, "fold crossings (default: cycle count)");
    cmd_lf->callback([&] {
        io::TriDocument doc = load(lf_file);
        const auto* lf = std::get_if<lefschetz::LefschetzFibration>(&doc);
        if (!lf) throw invariant_error("from-lefschetz: expected a lefschetz document");
        trisection::RelativeTrisection t = *opt_crossings
                                               ? lefschetz::lf_to_trisection(*lf, lf_crossings)
                                               : lefschetz::lf_to_trisection(*lf);
        print_document(io::TriDocument{t});
    });

    std::vector<std::string> compose_files;
    auto* cmd_compose = app.add_subcommand("compose", "compose trisected cobordisms in order");
    cmd_compose->add_option("files", compose_files, "morphism documents")
        ->required()
        ->expected(2, -1);
    cmd_compose->callback([&] {
        gluing::TriMorphism acc = as_morphism(load(compose_files[0]), "compose");
        for (std::size_t i = 1; i < compose_files.size(); ++i)
            acc = gluing::compose(acc, as_morphism(load(compose_files[i]), "compose"));
        print_document(io::TriDocument{acc});
    });

    long long id_genus = 0, id_boundary = 0;
    auto* cmd_id = app.add_subcommand("identity", "identity cobordism over an open book page");
    cmd_id->add_option("--page-genus", id_genus, "page genus")->required();
    cmd_id->add_option("--page-boundary", id_boundary, "page boundary count")->required();
    cmd_id->callback([&] {
        if (id_genus < 0 || id_boundary < 0)
            throw invariant_error("page parameters must be non-negative");
        openbook::OpenBook ob;
        ob.pages = {core::Surface{id_genus, id_boundary}};
        print_document(io::TriDocument{gluing::identity_trisection(ob)});
    });

    std::string eq_a, eq_b;
    auto* cmd_eq = app.add_subcommand("equiv", "test stable equivalence (exit 0 iff equivalent)");
    cmd_eq->add_option("file1", eq_a, "first document")->required();
    cmd_eq->add_option("file2", eq_b, "second document")->required();
    cmd_eq->callback([&] {
        const bool eq = trisection::stably_equivalent(as_trisection(load(eq_a), "equiv"),
                                                      as_trisection(load(eq_b), "equiv"));
        std::cout << "equivalent = " << (eq ? "true" : "false") << "\n";
        if (!eq) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
