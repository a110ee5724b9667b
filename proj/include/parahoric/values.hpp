#pragma once

#include <map>
#include <string>
#include <vector>

#include "parahoric/abelian.hpp"
#include "parahoric/linalg.hpp"

namespace parahoric::values {

using abelian::FinAbGroup;

// Exact multiplicative value: q^(rational) * e^(2*pi*i*unity) * monomial in
// free symbols.  The group of all values a weakly unramified character can
// take; 1 is the empty product.
struct FormalValue {
    Rat q_exponent{0};
    Rat unity{0};                 // reduced mod 1 into [0,1)
    std::map<std::string, Int> syms;

    FormalValue() = default;

    static FormalValue one() { return {}; }
    static FormalValue q_power(const Rat& e);
    static FormalValue root_of_unity(const Rat& angle);  // e^(2*pi*i*angle)
    static FormalValue symbol(const std::string& name, const Int& exp = Int(1));

    void normalize();

    bool is_one() const { return q_exponent == 0 && unity == 0 && syms.empty(); }

    FormalValue mul(const FormalValue& o) const;
    FormalValue inv() const;
    FormalValue pow(const Int& e) const;

    bool operator==(const FormalValue& o) const {
        return q_exponent == o.q_exponent && unity == o.unity && syms == o.syms;
    }
    // total order: q-exponent, then unity angle, then symbol map
    bool operator<(const FormalValue& o) const {
        if (q_exponent != o.q_exponent) return q_exponent < o.q_exponent;
        if (unity != o.unity) return unity < o.unity;
        return syms < o.syms;
    }

    std::string render() const;
};

FormalValue operator*(const FormalValue& a, const FormalValue& b);

std::string rat_render(const Rat& r);
Rat rat_parse(const std::string& s);
Rat rat_mod1(const Rat& r);

// Text form: factors separated by "·" or "*"; "q" with optional rational
// exponent, "ζ_b" / "zeta_b" roots of unity, anything else a free symbol with
// integer exponent.  "eta" is folded into "η"; a leading "-" contributes ζ_2.
FormalValue parse_formal_value(const std::string& text);
std::vector<FormalValue> parse_formal_tuple(const std::string& text);
std::string render_formal_tuple(const std::vector<FormalValue>& values);

// Integer combination of formal values, e.g. the result of pairing an
// orbit-sum with a character.
struct FormalSum {
    std::map<FormalValue, Int> terms;

    static FormalSum of(const FormalValue& v, const Int& coeff = Int(1));
    void add(const FormalValue& v, const Int& coeff = Int(1));
    void add(const FormalSum& o);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const FormalSum& o) const { return terms == o.terms; }
    std::string render() const;
};

// Character of a finitely generated abelian group with formal values: one
// value per ambient generator, compatible with every relation.
struct TorusCharacter {
    FinAbGroup domain;
    std::vector<FormalValue> values;  // size = domain.ambient_rank

    TorusCharacter(FinAbGroup dom, std::vector<FormalValue> vals);

    FormalValue evaluate(const IntVec& x) const;
    TorusCharacter mul(const TorusCharacter& o) const;
    TorusCharacter inv() const;
    bool operator==(const TorusCharacter& o) const;
    bool operator<(const TorusCharacter& o) const;
};

// (w.c)(x) = c(w^{-1} x); w must be a lattice automorphism preserving the
// relation subgroup.
TorusCharacter act(const IntMat& w, const TorusCharacter& c);

}  // namespace parahoric::values
