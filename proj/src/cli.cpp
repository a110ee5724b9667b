#include "parahoric/cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parahoric/catalog.hpp"
#include "parahoric/error.hpp"
#include "parahoric/jsonio.hpp"
#include "parahoric/matrixmodels.hpp"
#include "parahoric/satake.hpp"
#include "parahoric/values.hpp"

namespace parahoric::cli {

namespace {

using jsonio::json;

struct Options {
    std::string catalog_name;
    std::string spec_file;
    std::string param;
    std::string mode;  // verify only
    bool pretty = false;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t n = 3;
    std::string lambda = "4";
    bool gl = false;
};

void add_spec_options(CLI::App* sub, Options& o) {
    sub->add_option("--catalog", o.catalog_name, "built-in spec name");
    sub->add_option("--spec", o.spec_file, "JSON spec file");
    sub->add_flag("--pretty", o.pretty, "indent the JSON output");
}

// Entry label plus the spec, from --catalog or --spec.
std::pair<std::string, satake::GroupSpec> load_spec(const Options& o) {
    if (!o.catalog_name.empty() && !o.spec_file.empty())
        throw parse_error("give --catalog or --spec, not both");
    if (!o.catalog_name.empty()) {
        catalog::CatalogEntry e = catalog::catalog_lookup(o.catalog_name);
        return {e.name, std::move(e.spec)};
    }
    if (!o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) throw parse_error("cannot read spec file: " + o.spec_file);
        std::ostringstream text;
        text << in.rdbuf();
        return {o.spec_file, jsonio::spec_from_json(jsonio::parse_text(text.str()))};
    }
    throw parse_error("need --catalog NAME or --spec FILE");
}

std::vector<values::FormalValue> parse_param(const std::string& param, std::size_t expect,
                                             const char* what) {
    if (param.empty()) throw parse_error("--param is required");
    std::vector<values::FormalValue> vals = values::parse_formal_tuple(param);
    if (vals.size() != expect)
        throw parse_error(std::string(what) + " needs " + std::to_string(expect) +
                          " values, got " + std::to_string(vals.size()));
    return vals;
}

// Character validation failures on user input are input errors.
satake::SatakeParameter parameter_from_option(const satake::SpecContext& ctx,
                                              const Options& o) {
    auto vals = parse_param(o.param, ctx.params.min.group.ambient_rank, "parameter");
    try {
        return satake::make_parameter(ctx, std::move(vals));
    } catch (const invariant_error& e) {
        throw parse_error(std::string("parameter rejected: ") + e.what());
    }
}

satake::SupercuspidalSupport support_from_option(const satake::SpecContext& ctx,
                                                 const Options& o) {
    auto vals = parse_param(o.param, ctx.kottwitz.min.group.ambient_rank, "support character");
    try {
        return satake::make_support(ctx, std::move(vals));
    } catch (const invariant_error& e) {
        throw parse_error(std::string("support character rejected: ") + e.what());
    }
}

void emit(std::ostream& out, const json& j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

json verify_report(const std::string& mode, const Options& o) {
    if (mode == "steinberg") {
        const std::vector<Rat> ys = {Rat(1), Rat(2), Rat(-3), Rat(1, 2), Rat(5)};
        bool t1 = matrixmodels::verify_type1_formula(o.n >= 4 ? o.n : 4, ys);
        bool t2 = matrixmodels::verify_type2_formula(ys);
        return {{"check", "steinberg"},
                {"type1_rank", o.n >= 4 ? o.n : 4},
                {"type1", t1},
                {"type2", t2},
                {"pass", t1 && t2}};
    }
    if (mode == "nilpotent") {
        Rat lambda;
        try {
            lambda = values::rat_parse(o.lambda);
        } catch (const std::exception&) {
            throw parse_error("bad --lambda: " + o.lambda);
        }
        matrixmodels::NilpotentReport r =
            matrixmodels::verify_nilpotent_lemma(o.n, lambda, o.trials, o.seed);
        json fails = json::array();
        for (const auto& f : r.failures) fails.push_back(f);
        return {{"check", "nilpotent"}, {"rank", r.n},
                {"lambda", values::rat_render(r.lambda)}, {"trials", r.trials},
                {"successes", r.successes}, {"failures", std::move(fails)},
                {"pass", r.pass()}};
    }
    if (mode == "fixedgroup") {
        matrixmodels::FixedGroupReport r =
            matrixmodels::verify_fixed_group_facts(o.n, !o.gl, true);
        return {{"check", "fixedgroup"},
                {"rank", r.n},
                {"special", r.special},
                {"fixed_weyl_order", r.fixed_weyl_order},
                {"lifted", r.lifted},
                {"pi0_matrix", static_cast<long long>(r.pi0_matrix)},
                {"pi0_lattice", static_cast<long long>(r.pi0_lattice)},
                {"pass", r.pass()}};
    }
    throw parse_error("verify mode must be steinberg, nilpotent, or fixedgroup");
}

int dispatch(CLI::App& app, Options& o, std::ostream& out) {
    if (app.got_subcommand("catalog")) {
        json entries = json::array();
        for (const std::string& name : catalog::catalog_names()) {
            catalog::CatalogEntry e = catalog::catalog_lookup(name);
            entries.push_back({{"name", e.name}, {"description", e.description}});
        }
        emit(out, {{"entries", std::move(entries)}}, o.pretty);
        return 0;
    }
    if (app.got_subcommand("verify")) {
        emit(out, verify_report(o.mode, o), o.pretty);
        return 0;
    }

    auto [label, spec] = load_spec(o);

    if (app.got_subcommand("fold")) {
        folding::FoldedSystem f =
            folding::fold(spec.quasisplit_dual.datum, spec.quasisplit_dual.action.inertia);
        emit(out, {{"entry", label}, {"folded", jsonio::folded_to_json(f)}}, o.pretty);
        return 0;
    }
    if (app.got_subcommand("dual")) {
        rootdata::BasedRootDatum d = rootdata::dual(spec.quasisplit_dual.datum);
        emit(out, {{"entry", label}, {"dual", jsonio::datum_to_json(d)}}, o.pretty);
        return 0;
    }

    satake::SpecContext ctx(std::move(spec));

    if (app.got_subcommand("kottwitz")) {
        emit(out,
             {{"entry", label},
              {"parameter_group", jsonio::kottwitz_to_json(ctx.params)},
              {"kottwitz_group", jsonio::kottwitz_to_json(ctx.kottwitz)},
              {"projection", jsonio::matrix_to_json(ctx.proj)},
              {"kernel_generators", jsonio::matrix_to_json(ctx.kernel_gens)}},
             o.pretty);
        return 0;
    }
    if (app.got_subcommand("transfer")) {
        satake::SupercuspidalSupport chi = support_from_option(ctx, o);
        satake::SatakeParameter s = satake::transfer(ctx, chi);
        emit(out,
             {{"entry", label},
              {"support", jsonio::values_to_json(chi.chi.values)},
              {"parameter", jsonio::parameter_to_json(s)}},
             o.pretty);
        return 0;
    }
    if (app.got_subcommand("satake")) {
        satake::SatakeParameter s = parameter_from_option(ctx, o);
        emit(out, {{"entry", label}, {"parameter", jsonio::parameter_to_json(s)}}, o.pretty);
        return 0;
    }
    if (app.got_subcommand("member")) {
        satake::SatakeParameter s = parameter_from_option(ctx, o);
        json j = jsonio::member_to_json(satake::member_S_G(ctx, s));
        j["entry"] = label;
        j["parameter"] = jsonio::parameter_to_json(s);
        j["admissible_pair"] = satake::admissible_pair_check(ctx, s);
        emit(out, j, o.pretty);
        return 0;
    }
    if (app.got_subcommand("pistar")) {
        satake::SatakeParameter s = parameter_from_option(ctx, o);
        satake::GroupSpec quasi = satake::make_group_spec(ctx.spec.quasisplit_dual, {});
        satake::SpecContext qctx(std::move(quasi));
        satake::SatakeParameter t = satake::pi_star(ctx, qctx, s);
        emit(out,
             {{"entry", label},
              {"parameter", jsonio::parameter_to_json(s)},
              {"quasi_split_parameter", jsonio::parameter_to_json(t)}},
             o.pretty);
        return 0;
    }
    if (app.got_subcommand("glinner")) {
        auto shape = catalog::parse_glmd(o.catalog_name);
        if (!shape) throw parse_error("glinner needs --catalog GLmD(n,d,[m,...])");
        auto twists =
            parse_param(o.param, shape->partition.size(), "twist tuple (one per block)");
        satake::SatakeParameter s =
            satake::gl_inner_form_parameter(ctx, shape->n, shape->d, shape->partition, twists);
        emit(out,
             {{"entry", label},
              {"twists", jsonio::values_to_json(twists)},
              {"parameter", jsonio::parameter_to_json(s)}},
             o.pretty);
        return 0;
    }
    throw parse_error("no subcommand given (try --help)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with folded root data and Satake parameters"};
    app.require_subcommand(0, 1);
    Options o;

    for (const char* name : {"fold", "dual", "kottwitz"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_spec_options(sub, o);
    }
    for (const char* name : {"transfer", "satake", "member", "pistar"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_spec_options(sub, o);
        sub->add_option("--param", o.param, "tuple of formal values, e.g. \"(q^2,1)\"");
    }
    {
        CLI::App* sub = app.add_subcommand("glinner", "block parameter of an inner form of GL(n)");
        add_spec_options(sub, o);
        sub->add_option("--param", o.param, "twist tuple, one value per block");
    }
    {
        CLI::App* sub = app.add_subcommand("verify", "exact matrix-model checks");
        sub->add_option("mode", o.mode, "steinberg | nilpotent | fixedgroup")->required();
        sub->add_option("--n", o.n, "matrix rank");
        sub->add_option("--lambda", o.lambda, "scaling eigenvalue (rational)");
        sub->add_option("--trials", o.trials, "number of randomized trials");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_flag("--gl", o.gl, "use the full linear group instead of the special one");
        sub->add_flag("--pretty", o.pretty, "indent the JSON output");
    }
    {
        CLI::App* sub = app.add_subcommand("catalog", "list built-in specs");
        sub->add_flag("--pretty", o.pretty, "indent the JSON output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        return dispatch(app, o, out);
    } catch (const unknown_name_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const invariant_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const limit_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace parahoric::cli
