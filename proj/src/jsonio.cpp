#include "parahoric/jsonio.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "parahoric/error.hpp"

namespace parahoric::jsonio {

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw parse_error("bad integer: " + j.dump());
        }
    }
    throw parse_error("expected integer, got " + j.dump());
}

json int_to_json(const Int& v) {
    // Stay numeric when it fits, string otherwise.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

IntVec ivec_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected array, got " + j.dump());
    IntVec v;
    for (const auto& e : j) v.push_back(int_from_json(e));
    return v;
}

json ivec_to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(int_to_json(e));
    return a;
}

json rvec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(values::rat_render(e));
    return a;
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return values::rat_parse(j.get<std::string>());
    throw parse_error("expected rational, got " + j.dump());
}

std::vector<std::size_t> sizes_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected array, got " + j.dump());
    std::vector<std::size_t> v;
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) throw parse_error("expected index, got " + e.dump());
        v.push_back(e.get<std::size_t>());
    }
    return v;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field: ") + key);
    return j.at(key);
}

}  // namespace

json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMat matrix_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected matrix, got " + j.dump());
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw parse_error("expected matrix row");
        cols = j[0].size();
    }
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw parse_error("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

json datum_to_json(const rootdata::BasedRootDatum& d) {
    json roots = json::array(), coroots = json::array();
    for (const auto& r : d.roots) roots.push_back(ivec_to_json(r));
    for (const auto& c : d.coroots) coroots.push_back(ivec_to_json(c));
    return {{"rank", d.rank},
            {"roots", std::move(roots)},
            {"coroots", std::move(coroots)},
            {"simple", d.simple}};
}

rootdata::BasedRootDatum datum_from_json(const json& j) {
    rootdata::BasedRootDatum d;
    const json& rank = field(j, "rank");
    if (!rank.is_number_unsigned()) throw parse_error("rank must be a non-negative integer");
    d.rank = rank.get<std::size_t>();
    for (const auto& r : field(j, "roots")) d.roots.push_back(ivec_from_json(r));
    for (const auto& c : field(j, "coroots")) d.coroots.push_back(ivec_from_json(c));
    d.simple = sizes_from_json(field(j, "simple"));
    return d;
}

json action_to_json(const folding::GaloisAction& a) {
    json gens = json::array();
    for (const auto& g : a.inertia.generators) gens.push_back(matrix_to_json(g));
    return {{"rank", a.inertia.rank},
            {"inertia", std::move(gens)},
            {"frobenius", matrix_to_json(a.frobenius)}};
}

folding::GaloisAction action_from_json(const json& j) {
    const json& rank = field(j, "rank");
    if (!rank.is_number_unsigned()) throw parse_error("rank must be a non-negative integer");
    folding::GaloisAction a = folding::GaloisAction::trivial(rank.get<std::size_t>());
    for (const auto& g : field(j, "inertia")) a.inertia.generators.push_back(matrix_from_json(g));
    if (j.contains("frobenius")) a.frobenius = matrix_from_json(j.at("frobenius"));
    return a;
}

json spec_to_json(const satake::GroupSpec& s) {
    return {{"datum", datum_to_json(s.quasisplit_dual.datum)},
            {"action", action_to_json(s.quasisplit_dual.action)},
            {"minimal_levi", s.minimal_levi}};
}

satake::GroupSpec spec_from_json(const json& j) {
    rootdata::BasedRootDatum d = datum_from_json(field(j, "datum"));
    folding::GaloisAction a = j.contains("action")
                                  ? action_from_json(j.at("action"))
                                  : folding::GaloisAction::trivial(d.rank);
    std::vector<std::size_t> levi;
    if (j.contains("minimal_levi")) levi = sizes_from_json(j.at("minimal_levi"));
    // structural violations surface as invariant_error, not parse_error:
    // the JSON was well-formed, the data it carries is not a group spec
    return satake::make_group_spec({std::move(d), std::move(a)}, std::move(levi));
}

json folded_to_json(const folding::FoldedSystem& f) {
    auto vecs = [](const std::vector<RatVec>& vs) {
        json a = json::array();
        for (const auto& v : vs) a.push_back(rvec_to_json(v));
        return a;
    };
    json blocks = json::array();
    for (const auto& b : f.blocks) {
        blocks.push_back({{"members", b.members},
                          {"representative", b.representative},
                          {"type", b.type},
                          {"projection", rvec_to_json(b.projection)}});
    }
    return {{"psi", vecs(f.psi)},
            {"delta", vecs(f.delta)},
            {"reduced_long", vecs(f.reduced_long)},
            {"reduced_short", vecs(f.reduced_short)},
            {"blocks", std::move(blocks)},
            {"inertia_order", f.inertia_order}};
}

json group_to_json(const abelian::FinAbGroup& g) {
    json tors = json::array();
    for (const auto& t : g.torsion()) tors.push_back(int_to_json(t));
    json out = {{"free_rank", g.free_rank()}, {"torsion", std::move(tors)}};
    out["order"] = g.order() == 0 ? json("infinite") : int_to_json(g.order());
    return out;
}

json kottwitz_to_json(const dualdata::KottwitzGroup& k) {
    return {{"lattice_rank", k.lattice_rank},
            {"group", group_to_json(k.group)},
            {"generators_in_ambient", matrix_to_json(k.gens_in_ambient)}};
}

json value_to_json(const values::FormalValue& v) {
    json syms = json::object();
    for (const auto& [name, exp] : v.syms) syms[name] = int_to_json(exp);
    return {{"q", values::rat_render(v.q_exponent)},
            {"unity", values::rat_render(v.unity)},
            {"syms", std::move(syms)}};
}

values::FormalValue value_from_json(const json& j) {
    if (j.is_string()) return values::parse_formal_value(j.get<std::string>());
    values::FormalValue v = values::FormalValue::q_power(rat_from_json(field(j, "q")));
    v = v.mul(values::FormalValue::root_of_unity(rat_from_json(field(j, "unity"))));
    if (j.contains("syms")) {
        const json& syms = j.at("syms");
        if (!syms.is_object()) throw parse_error("syms must be an object");
        for (const auto& [name, exp] : syms.items())
            v = v.mul(values::FormalValue::symbol(name, int_from_json(exp)));
    }
    return v;
}

json values_to_json(const std::vector<values::FormalValue>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(v.render());
    return a;
}

std::vector<values::FormalValue> values_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected value array, got " + j.dump());
    std::vector<values::FormalValue> vs;
    for (const auto& e : j) vs.push_back(value_from_json(e));
    return vs;
}

json parameter_to_json(const satake::SatakeParameter& s) {
    return {{"values", values_to_json(s.chr.values)},
            {"normal_form", values_to_json(s.normal_form)}};
}

json member_to_json(const satake::MemberResult& r) {
    json out = {{"member", r.member}};
    if (r.witness_weyl) out["witness_weyl"] = *r.witness_weyl;
    if (r.witness) out["witness"] = values_to_json(r.witness->chi.values);
    if (!r.refutation.empty()) {
        json ref = json::array();
        for (const auto& [gen, val] : r.refutation)
            ref.push_back({{"kernel_generator", gen}, {"value", val.render()}});
        out["refutation"] = std::move(ref);
    }
    return out;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
}

}  // namespace parahoric::jsonio
