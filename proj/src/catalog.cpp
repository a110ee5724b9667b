#include "parahoric/catalog.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "parahoric/error.hpp"
#include "parahoric/folding.hpp"
#include "parahoric/rootdata.hpp"

namespace parahoric::catalog {

namespace {

// Matrix of the coordinate permutation i -> image[i].
IntMat perm_matrix(const std::vector<std::size_t>& image) {
    const std::size_t n = image.size();
    IntMat p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(image[i], i) = 1;
    return p;
}

std::vector<std::size_t> transposition(std::size_t n, std::size_t a, std::size_t b) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    std::swap(image[a], image[b]);
    return image;
}

satake::GroupSpec split_spec(rootdata::BasedRootDatum d) {
    folding::GaloisAction a = folding::GaloisAction::trivial(d.rank);
    return satake::make_group_spec({std::move(d), std::move(a)}, {});
}

satake::GroupSpec inertia_spec(rootdata::BasedRootDatum d, std::vector<IntMat> gens) {
    folding::GaloisAction a = folding::GaloisAction::trivial(d.rank);
    a.inertia.generators = std::move(gens);
    return satake::make_group_spec({std::move(d), std::move(a)}, {});
}

satake::GroupSpec glmd_spec(const GlmdShape& s) {
    // Interior simple positions of the block decomposition: position j is
    // the root e_j - e_{j+1}, interior when j and j+1 fall in one block.
    std::vector<std::size_t> levi;
    std::size_t start = 0;
    for (std::size_t m : s.partition) {
        const std::size_t size = m * s.d;
        for (std::size_t j = start; j + 1 < start + size; ++j) levi.push_back(j);
        start += size;
    }
    rootdata::BasedRootDatum d = rootdata::gl_datum(s.n);
    folding::GaloisAction a = folding::GaloisAction::trivial(s.n);
    return satake::make_group_spec({std::move(d), std::move(a)}, std::move(levi));
}

CatalogEntry build_entry(const std::string& name) {
    if (auto shape = parse_glmd(name)) {
        std::string desc = "inner form of GL(" + std::to_string(shape->n) +
                           ") with division algebra degree " + std::to_string(shape->d);
        return {name, desc, glmd_spec(*shape)};
    }
    if (name == "GL2" || name == "GL3" || name == "GL4" || name == "GL5") {
        const std::size_t n = static_cast<std::size_t>(name[2] - '0');
        return {name, "split general linear group GL(" + std::to_string(n) + ")",
                split_spec(rootdata::gl_datum(n))};
    }
    if (name == "SL2" || name == "SL3" || name == "SL4") {
        const std::size_t n = static_cast<std::size_t>(name[2] - '0');
        return {name, "split special linear group SL(" + std::to_string(n) + ")",
                split_spec(rootdata::sl_datum(n))};
    }
    if (name == "PGL2" || name == "PGL3") {
        const std::size_t n = static_cast<std::size_t>(name[3] - '0');
        return {name, "split projective linear group PGL(" + std::to_string(n) + ")",
                split_spec(rootdata::pgl_datum(n))};
    }
    if (name == "Sp4") {
        return {name, "split symplectic group Sp(4)", split_spec(rootdata::sp4_datum())};
    }
    if (name == "A2-swap") {
        // Ramified diagram swap on SL(3): the quasi-split SU(3) shape.
        return {name, "A2 datum folded by the ramified diagram swap",
                inertia_spec(rootdata::sl_datum(3), {perm_matrix(transposition(2, 0, 1))})};
    }
    if (name == "SU3-unram") {
        rootdata::BasedRootDatum d = rootdata::sl_datum(3);
        folding::GaloisAction a = folding::GaloisAction::trivial(2);
        a.frobenius = perm_matrix(transposition(2, 0, 1));
        return {name, "A2 datum with the diagram swap on Frobenius, inertia trivial",
                satake::make_group_spec({std::move(d), std::move(a)}, {})};
    }
    if (name == "A3-swap") {
        return {name, "A3 datum folded by the ramified diagram swap",
                inertia_spec(rootdata::sl_datum(4), {perm_matrix(transposition(3, 0, 2))})};
    }
    if (name == "A5-swap") {
        std::vector<std::size_t> image = transposition(5, 0, 4);
        std::swap(image[1], image[3]);
        return {name, "A5 datum folded by the ramified diagram swap",
                inertia_spec(rootdata::sl_datum(6), {perm_matrix(image)})};
    }
    if (name == "E6-swap") {
        std::vector<std::size_t> image = transposition(6, 0, 5);
        std::swap(image[2], image[4]);
        return {name, "E6 datum folded by the ramified diagram swap",
                inertia_spec(rootdata::e6_datum(), {perm_matrix(image)})};
    }
    if (name == "D4-triality") {
        // Full S3 on the three outer nodes 0, 2, 3 of the D4 diagram.
        std::vector<std::size_t> cycle = {2, 1, 3, 0};
        return {name, "D4 datum folded by the full triality group",
                inertia_spec(rootdata::spin8_datum(),
                             {perm_matrix(cycle), perm_matrix(transposition(4, 2, 3))})};
    }
    throw unknown_name_error("unknown catalog entry: " + name);
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"GL2",     "GL3",       "GL4",     "GL5",     "SL2",
            "SL3",     "SL4",       "PGL2",    "PGL3",    "Sp4",
            "A2-swap", "SU3-unram", "A3-swap", "A5-swap", "E6-swap",
            "D4-triality", "GLmD(2,2,[1])", "GLmD(4,2,[1,1])"};
}

CatalogEntry catalog_lookup(const std::string& name) {
    // "GL(3)" and friends are accepted as spellings of the catalog names
    for (const char* family : {"GL", "SL", "PGL", "Sp"}) {
        std::string open = std::string(family) + "(";
        if (name.rfind(open, 0) == 0 && name.size() > open.size() + 1 && name.back() == ')') {
            std::string digits = name.substr(open.size(), name.size() - open.size() - 1);
            if (!digits.empty() &&
                std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
                return build_entry(family + digits);
        }
    }
    return build_entry(name);
}

std::optional<GlmdShape> parse_glmd(const std::string& name) {
    const std::string prefix = "GLmD(";
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    if (name.empty() || name.back() != ')')
        throw unknown_name_error("malformed GLmD name: " + name);
    const std::string body = name.substr(prefix.size(), name.size() - prefix.size() - 1);

    std::size_t pos = 0;
    auto read_number = [&]() -> std::size_t {
        std::size_t start = pos;
        while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') ++pos;
        if (pos == start || pos - start > 4)
            throw unknown_name_error("malformed GLmD name: " + name);
        unsigned long v = std::stoul(body.substr(start, pos - start));
        return static_cast<std::size_t>(v);
    };
    auto expect = [&](char c) {
        if (pos >= body.size() || body[pos] != c)
            throw unknown_name_error("malformed GLmD name: " + name);
        ++pos;
    };

    GlmdShape shape;
    shape.n = read_number();
    expect(',');
    shape.d = read_number();
    expect(',');
    expect('[');
    shape.partition.push_back(read_number());
    while (pos < body.size() && body[pos] == ',') {
        ++pos;
        shape.partition.push_back(read_number());
    }
    expect(']');
    if (pos != body.size()) throw unknown_name_error("malformed GLmD name: " + name);

    if (shape.n == 0 || shape.d == 0)
        throw unknown_name_error("GLmD needs positive n and d: " + name);
    std::size_t total = 0;
    for (std::size_t m : shape.partition) {
        if (m == 0) throw unknown_name_error("GLmD blocks must be positive: " + name);
        total += m;
    }
    if (total * shape.d != shape.n)
        throw unknown_name_error("GLmD blocks must fill n: " + name);
    return shape;
}

}  // namespace parahoric::catalog
