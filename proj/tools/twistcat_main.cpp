// twistcat: batch CLI over the JSON file formats.
//
// Exit codes: 0 success/valid, 1 validation failed (report on stdout),
// 2 malformed input, 3 search space exceeds --limit. Diagnostics go to
// stderr, data to stdout or --out.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twistcat/json_io.hpp"
#include "twistcat/linear.hpp"
#include "twistcat/product.hpp"
#include "twistcat/thin.hpp"
#include "twistcat/twisting.hpp"

namespace {

using namespace twistcat;
using nlohmann::json;

constexpr const char* kVersion = "twistcat 0.1.0";

struct Ctx {
    std::string out;
    int exit_code = 0;

    void emit(const json& j) {
        if (out.empty())
            std::cout << io::dump(j);
        else
            io::write_file(out, j);
    }
    // A report is data: it goes to the output channel, not stderr.
    void finish_report(const ValidationReport& rep) {
        emit(io::report_to_json(rep));
        exit_code = rep.ok() ? 0 : 1;
    }
    bool require_ok(const ValidationReport& rep) {
        if (rep.ok()) return true;
        emit(io::report_to_json(rep));
        exit_code = 1;
        return false;
    }
};

FiniteCategory load_category(const std::string& path) {
    return io::category_from_json(io::load_file(path));
}

// Most subcommands assume their category inputs are lawful; check once
// at the boundary.
bool load_valid_category(Ctx& ctx, const std::string& path, FiniteCategory& out) {
    out = load_category(path);
    return ctx.require_ok(validate_category(out));
}

json factorization_to_json(const Factorization& f) {
    json phi = json::array(), psi = json::array();
    for (const auto& [u, g, ff, c] : f.phi) phi.push_back({u, g, ff, c});
    for (std::size_t c = 0; c < f.psi.size(); ++c)
        psi.push_back({static_cast<int>(c), f.psi[c][0], f.psi[c][1], f.psi[c][2]});
    return json{{"phi", phi}, {"psi", psi}};
}

void add_common(CLI::App* cmd, Ctx& ctx) {
    cmd->add_option("--out", ctx.out, "write output JSON here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite categories, twisting systems and twisted tensor products"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Ctx ctx;
    std::string cat, cat_a, cat_b, twist, mp_path, bracket, sub_a, sub_b, act_path;
    std::string product_path, lin, lin_a, lin_b, lin_c, lin_d1, lin_d2, map_path, left_path,
        right_path, kind;
    std::uint64_t limit = 100'000'000;

    auto* c_check = app.add_subcommand("check-category", "validate a category file");
    c_check->add_option("--cat", cat, "category file")->required();
    add_common(c_check, ctx);
    c_check->callback([&] { ctx.finish_report(validate_category(load_category(cat))); });

    auto* c_classify = app.add_subcommand("classify", "thin/groupoid classification");
    c_classify->add_option("--cat", cat, "category file")->required();
    add_common(c_classify, ctx);
    c_classify->callback([&] {
        FiniteCategory c;
        if (!load_valid_category(ctx, cat, c)) return;
        auto inv = is_groupoid(c);
        json j{{"thin", is_thin(c)}, {"groupoid", inv.has_value()}};
        j["inverse"] = inv ? json(*inv) : json(nullptr);
        ctx.emit(j);
    });

    auto* c_tw = app.add_subcommand("check-twisting", "validate a twisting system");
    c_tw->add_option("--cat-a", cat_a)->required();
    c_tw->add_option("--cat-b", cat_b)->required();
    c_tw->add_option("--twist", twist)->required();
    add_common(c_tw, ctx);
    c_tw->callback([&] {
        FiniteCategory a, b;
        if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
        auto r = io::twisting_from_json(io::load_file(twist), b.size(), a.size());
        ctx.finish_report(validate_twisting_system(a, b, r));
    });

    auto* c_mp = app.add_subcommand("check-matched-pair", "validate a matched pair");
    c_mp->add_option("--cat-a", cat_a)->required();
    c_mp->add_option("--cat-b", cat_b)->required();
    c_mp->add_option("--mp", mp_path, "matched pair file")->required();
    add_common(c_mp, ctx);
    c_mp->callback([&] {
        FiniteCategory a, b;
        if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
        auto mp = io::matched_pair_from_json(io::load_file(mp_path), b.size(), a.size());
        ctx.finish_report(validate_matched_pair(a, b, mp));
    });

    auto* c_ex = app.add_subcommand("extract-simple",
                                    "split a twisting system into bracket and actions");
    c_ex->add_option("--cat-a", cat_a)->required();
    c_ex->add_option("--cat-b", cat_b)->required();
    c_ex->add_option("--twist", twist)->required();
    add_common(c_ex, ctx);
    c_ex->callback([&] {
        FiniteCategory a, b;
        if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
        auto r = io::twisting_from_json(io::load_file(twist), b.size(), a.size());
        if (!ctx.require_ok(validate_twisting_system(a, b, r))) return;
        auto st = extract_simple(a, b, r);
        if (!st) {
            ValidationReport rep;
            rep.add("twist/not-simple", {}, "entries of some object triple use several summands");
            ctx.emit(io::report_to_json(rep));
            ctx.exit_code = 1;
            return;
        }
        ctx.emit(io::matched_pair_to_json(twisting_to_matched_pair(*st)));
    });

    auto* c_enum = app.add_subcommand("enumerate-twisting", "all twisting systems between B and A");
    c_enum->add_option("--cat-a", cat_a)->required();
    c_enum->add_option("--cat-b", cat_b)->required();
    c_enum->add_option("--limit", limit, "assignment-space bound");
    add_common(c_enum, ctx);
    c_enum->callback([&] {
        FiniteCategory a, b;
        if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
        auto systems = enumerate_twisting_systems(a, b, limit);
        json arr = json::array();
        for (const auto& r : systems) arr.push_back(io::twisting_to_json(r));
        ctx.emit(json{{"count", systems.size()}, {"systems", arr}});
    });

    auto* c_enb = app.add_subcommand("enumerate-brackets", "all bracket functions between thin B, A");
    c_enb->add_option("--cat-a", cat_a)->required();
    c_enb->add_option("--cat-b", cat_b)->required();
    c_enb->add_option("--limit", limit, "assignment-space bound");
    add_common(c_enb, ctx);
    c_enb->callback([&] {
        FiniteCategory a, b;
        if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
        ValidationReport thin_rep;
        if (!is_thin(a)) thin_rep.add("thin/not-thin", {0}, "category A is not thin");
        if (!is_thin(b)) thin_rep.add("thin/not-thin", {1}, "category B is not thin");
        if (!ctx.require_ok(thin_rep)) return;
        auto brackets = enumerate_brackets(a, b, limit);
        json arr = json::array();
        for (const auto& bf : brackets) arr.push_back(io::bracket_to_json(bf));
        ctx.emit(json{{"count", brackets.size()}, {"brackets", arr}});
    });

    auto* c_prod = app.add_subcommand("product", "twisted tensor product A (x)_R B");
    c_prod->add_option("--cat-a", cat_a)->required();
    c_prod->add_option("--cat-b", cat_b)->required();
    c_prod->add_option("--twist", twist)->required();
    add_common(c_prod, ctx);
    c_prod->callback([&] {
        FiniteCategory a, b;
        if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
        auto r = io::twisting_from_json(io::load_file(twist), b.size(), a.size());
        if (!ctx.require_ok(validate_twisting_system(a, b, r))) return;
        auto p = twisted_tensor_product(a, b, r);
        if (!ctx.require_ok(p.report)) return;
        ctx.emit(io::product_to_json(*p));
    });

    auto* c_fact = app.add_subcommand("factorize", "check factorization through two subcategories");
    c_fact->add_option("--cat", cat)->required();
    c_fact->add_option("--sub-a", sub_a, "subset file for A")->required();
    c_fact->add_option("--sub-b", sub_b, "subset file for B")->required();
    add_common(c_fact, ctx);
    c_fact->callback([&] {
        FiniteCategory c;
        if (!load_valid_category(ctx, cat, c)) return;
        auto sa = io::subset_from_json(io::load_file(sub_a));
        auto sb = io::subset_from_json(io::load_file(sub_b));
        ValidationReport rep;
        if (!wide_subcategory_check(c, sa))
            rep.add("factorize/not-wide-subcategory", {0}, "A-subset is not a wide subcategory");
        if (!wide_subcategory_check(c, sb))
            rep.add("factorize/not-wide-subcategory", {1}, "B-subset is not a wide subcategory");
        if (!ctx.require_ok(rep)) return;
        auto f = check_factorization(c, sa, sb);
        if (!f) {
            rep.add("factorize/not-bijective", {}, "composition is not bijective onto the hom-sets");
            ctx.emit(io::report_to_json(rep));
            ctx.exit_code = 1;
            return;
        }
        ctx.emit(factorization_to_json(*f));
    });

    auto* c_der = app.add_subcommand("derive-twisting", "twisting system of a factorizable category");
    c_der->add_option("--product", product_path, "product file; round-trips to A/B ids");
    c_der->add_option("--cat-a", cat_a, "original A (with --product)");
    c_der->add_option("--cat-b", cat_b, "original B (with --product)");
    c_der->add_option("--cat", cat, "ambient category (with --sub-a/--sub-b)");
    c_der->add_option("--sub-a", sub_a);
    c_der->add_option("--sub-b", sub_b);
    add_common(c_der, ctx);
    c_der->callback([&] {
        if (!product_path.empty()) {
            if (cat_a.empty() || cat_b.empty())
                throw ParseError("derive-twisting --product needs --cat-a and --cat-b");
            FiniteCategory a, b;
            if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
            auto p = io::product_from_json(io::load_file(product_path));
            if (!ctx.require_ok(validate_category(p.category))) return;
            auto r = derive_twisting_via_product(p, a, b);
            if (!ctx.require_ok(r.report)) return;
            ctx.emit(io::twisting_to_json(*r));
            return;
        }
        FiniteCategory c;
        if (!load_valid_category(ctx, cat, c)) return;
        auto sa = io::subset_from_json(io::load_file(sub_a));
        auto sb = io::subset_from_json(io::load_file(sub_b));
        auto d = derive_twisting(c, sa, sb);
        if (!ctx.require_ok(d.report)) return;
        ctx.emit(json{{"cat_a", io::category_to_json(d->cat_a)},
                      {"cat_b", io::category_to_json(d->cat_b)},
                      {"twist", io::twisting_to_json(d->twist)}});
    });

    auto* c_cst = app.add_subcommand("cst", "the category C(S,T,|...|) of a bracket");
    c_cst->add_option("--cat-a", cat_a)->required();
    c_cst->add_option("--cat-b", cat_b)->required();
    c_cst->add_option("--bracket", bracket)->required();
    add_common(c_cst, ctx);
    c_cst->callback([&] {
        FiniteCategory a, b;
        if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
        auto bf = io::bracket_from_json(io::load_file(bracket));
        auto res = construct_CST(a, b, bf);
        if (!ctx.require_ok(res.report)) return;
        ctx.emit(json{{"category", io::category_to_json(res->category)},
                      {"iso", io::functor_to_json(res->to_product)},
                      {"product", io::product_to_json(res->product)}});
    });

    auto* c_sdp = app.add_subcommand("semidirect", "semidirect product of A with a monoid");
    c_sdp->add_option("--cat-a", cat_a)->required();
    c_sdp->add_option("--cat-b", cat_b, "one-object monoid category")->required();
    c_sdp->add_option("--act", act_path, "action file")->required();
    add_common(c_sdp, ctx);
    c_sdp->callback([&] {
        FiniteCategory a, b;
        if (!load_valid_category(ctx, cat_a, a) || !load_valid_category(ctx, cat_b, b)) return;
        auto action = io::action_from_json(io::load_file(act_path), b.size(), a.size());
        auto res = semidirect_product(a, b, action);
        if (!ctx.require_ok(res.report)) return;
        json j = io::product_to_json(res->product);
        j["inflated_monoid"] = io::category_to_json(res->inflated_monoid);
        ctx.emit(j);
    });

    auto* c_lin = app.add_subcommand("lin-check", "validate a linear structure");
    c_lin->add_option("--kind", kind, "algebra|coalgebra|bialgebra|linear-category|module-category")
        ->required();
    c_lin->add_option("--lin", lin, "structure file")->required();
    add_common(c_lin, ctx);
    c_lin->callback([&] {
        json j = io::load_file(lin);
        if (kind == "algebra")
            ctx.finish_report(validate_algebra(io::algebra_from_json(j)));
        else if (kind == "coalgebra")
            ctx.finish_report(validate_coalgebra(io::coalgebra_from_json(j)));
        else if (kind == "bialgebra")
            ctx.finish_report(validate_bialgebra(io::bialgebra_from_json(j)));
        else if (kind == "linear-category")
            ctx.finish_report(validate_linear_category(io::linear_category_from_json(j)));
        else if (kind == "module-category")
            ctx.finish_report(validate_module_category(io::module_action_from_json(j)));
        else
            throw ParseError("unknown --kind \"" + kind + "\"");
    });

    auto* c_ltc = app.add_subcommand("lin-twist-check", "validate a twisting map between algebras");
    c_ltc->add_option("--lin-a", lin_a)->required();
    c_ltc->add_option("--lin-b", lin_b)->required();
    c_ltc->add_option("--map", map_path, "linear map B x A -> A x B")->required();
    add_common(c_ltc, ctx);
    c_ltc->callback([&] {
        auto a = io::algebra_from_json(io::load_file(lin_a));
        auto b = io::algebra_from_json(io::load_file(lin_b));
        ValidationReport rep = validate_algebra(a);
        rep.merge(validate_algebra(b));
        if (!ctx.require_ok(rep)) return;
        ctx.finish_report(validate_twisting_map(a, b, io::linear_map_from_json(io::load_file(map_path))));
    });

    auto* c_lprod = app.add_subcommand("lin-product", "twisted tensor algebra A (x)_R B");
    c_lprod->add_option("--lin-a", lin_a)->required();
    c_lprod->add_option("--lin-b", lin_b)->required();
    c_lprod->add_option("--map", map_path)->required();
    add_common(c_lprod, ctx);
    c_lprod->callback([&] {
        auto a = io::algebra_from_json(io::load_file(lin_a));
        auto b = io::algebra_from_json(io::load_file(lin_b));
        ValidationReport rep = validate_algebra(a);
        rep.merge(validate_algebra(b));
        if (!ctx.require_ok(rep)) return;
        auto out = twisted_tensor_algebra(a, b, io::linear_map_from_json(io::load_file(map_path)));
        if (!ctx.require_ok(out.report)) return;
        ctx.emit(io::algebra_to_json(*out));
    });

    auto* c_split = app.add_subcommand("lin-split", "split a coalgebra map C -> D1 x D2");
    c_split->add_option("--lin-c", lin_c)->required();
    c_split->add_option("--lin-d1", lin_d1)->required();
    c_split->add_option("--lin-d2", lin_d2)->required();
    c_split->add_option("--map", map_path)->required();
    add_common(c_split, ctx);
    c_split->callback([&] {
        auto c = io::coalgebra_from_json(io::load_file(lin_c));
        auto d1 = io::coalgebra_from_json(io::load_file(lin_d1));
        auto d2 = io::coalgebra_from_json(io::load_file(lin_d2));
        ValidationReport rep = validate_coalgebra(c);
        rep.merge(validate_coalgebra(d1));
        rep.merge(validate_coalgebra(d2));
        if (!ctx.require_ok(rep)) return;
        auto split = split_coalgebra_map(c, d1, d2, io::linear_map_from_json(io::load_file(map_path)));
        if (!ctx.require_ok(split.report)) return;
        ctx.emit(json{{"f1", io::linear_map_to_json(split->f1)},
                      {"f2", io::linear_map_to_json(split->f2)}});
    });

    auto* c_dcp = app.add_subcommand("double-cross", "double cross product of bialgebras");
    c_dcp->add_option("--lin-a", lin_a)->required();
    c_dcp->add_option("--lin-b", lin_b)->required();
    c_dcp->add_option("--left", left_path, "left action B x A -> A")->required();
    c_dcp->add_option("--right", right_path, "right action B x A -> B")->required();
    add_common(c_dcp, ctx);
    c_dcp->callback([&] {
        auto a = io::bialgebra_from_json(io::load_file(lin_a));
        auto b = io::bialgebra_from_json(io::load_file(lin_b));
        auto out = double_cross_product(a, b, io::linear_map_from_json(io::load_file(left_path)),
                                        io::linear_map_from_json(io::load_file(right_path)));
        if (!ctx.require_ok(out.report)) return;
        ctx.emit(io::bialgebra_to_json(*out));
    });

    auto* c_smash = app.add_subcommand("smash", "smash product A # H of a module category");
    c_smash->add_option("--lin", lin, "module-category file")->required();
    add_common(c_smash, ctx);
    c_smash->callback([&] {
        auto act = io::module_action_from_json(io::load_file(lin));
        auto out = smash_product(act);
        if (!ctx.require_ok(out.report)) return;
        ctx.emit(io::linear_category_to_json(*out));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const SearchSpaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return ctx.exit_code;
}
