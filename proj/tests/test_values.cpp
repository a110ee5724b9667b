#include <doctest.h>

#include <vector>

#include "parahoric/error.hpp"
#include "parahoric/values.hpp"

using namespace parahoric;
using namespace parahoric::values;

TEST_CASE("formal multiplication normalizes") {
    FormalValue half = FormalValue::q_power(Rat(1, 2));
    CHECK(half.mul(half) == FormalValue::q_power(Rat(1)));

    FormalValue i = FormalValue::root_of_unity(Rat(1, 4));
    CHECK(i.mul(i) == FormalValue::root_of_unity(Rat(1, 2)));  // -1

    FormalValue a = FormalValue::symbol("eta1", Int(2)).mul(FormalValue::q_power(Rat(-1)));
    FormalValue b = FormalValue::symbol("eta1", Int(-2)).mul(FormalValue::q_power(Rat(1)));
    CHECK(a.mul(b).is_one());
}

TEST_CASE("inverse and power") {
    FormalValue v = FormalValue::q_power(Rat(3, 2))
                        .mul(FormalValue::root_of_unity(Rat(1, 3)))
                        .mul(FormalValue::symbol("z"));
    CHECK(v.mul(v.inv()).is_one());
    CHECK(v.pow(Int(0)).is_one());
    CHECK(v.pow(Int(3)) == v.mul(v).mul(v));
    CHECK(v.pow(Int(-1)) == v.inv());
}

TEST_CASE("rendering is parseable") {
    std::vector<FormalValue> samples = {
        FormalValue::one(),
        FormalValue::q_power(Rat(1, 2)),
        FormalValue::q_power(Rat(-2)),
        FormalValue::root_of_unity(Rat(1, 2)),
        FormalValue::root_of_unity(Rat(2, 3)).mul(FormalValue::q_power(Rat(5, 4))),
        FormalValue::symbol("eta1").mul(FormalValue::q_power(Rat(1, 2))),
        FormalValue::symbol("z", Int(-3)).mul(FormalValue::root_of_unity(Rat(1, 6))),
    };
    for (const auto& v : samples) CHECK(parse_formal_value(v.render()) == v);

    auto tup = parse_formal_tuple("(q^2,1)");
    REQUIRE(tup.size() == 2);
    CHECK(tup[0] == FormalValue::q_power(Rat(2)));
    CHECK(tup[1].is_one());
    CHECK(parse_formal_tuple(render_formal_tuple(tup)) == tup);

    CHECK_THROWS_AS(parse_formal_value("q^"), parse_error);
    CHECK_THROWS_AS(parse_formal_tuple("(q,"), parse_error);
}

TEST_CASE("rational text round trip") {
    for (const char* s : {"0", "1", "-1", "1/2", "-3/2", "7/3"}) {
        CHECK(rat_render(rat_parse(s)) == s);
    }
    CHECK(rat_parse("2/4") == Rat(1, 2));
    CHECK_THROWS_AS(rat_parse("1/0"), parse_error);
    CHECK_THROWS_AS(rat_parse("x"), parse_error);
}

TEST_CASE("characters evaluate multiplicatively") {
    abelian::FinAbGroup z2(2, IntMat(2, 0));
    TorusCharacter c(z2, {FormalValue::q_power(Rat(1, 2)), FormalValue::q_power(Rat(-1, 2))});
    CHECK(c.evaluate(IntVec{Int(1), Int(1)}).is_one());
    CHECK(c.evaluate(IntVec{Int(0), Int(0)}).is_one());
    CHECK(c.evaluate(IntVec{Int(3), Int(1)}) == FormalValue::q_power(Rat(1)));

    // homomorphism on random-ish points
    IntVec x{Int(2), Int(-5)}, y{Int(-1), Int(4)};
    IntVec xy{Int(1), Int(-1)};
    CHECK(c.evaluate(xy) == c.evaluate(x).mul(c.evaluate(y)));
}

TEST_CASE("torsion relations are enforced") {
    IntMat rel(1, 1);
    rel(0, 0) = 2;
    abelian::FinAbGroup z2(1, rel);
    TorusCharacter c(z2, {FormalValue::root_of_unity(Rat(1, 2))});  // -1 is fine
    CHECK(c.evaluate(IntVec{Int(1)}) == FormalValue::root_of_unity(Rat(1, 2)));
    CHECK(c.evaluate(IntVec{Int(2)}).is_one());

    CHECK_THROWS_AS(TorusCharacter(z2, {FormalValue::q_power(Rat(1))}), invariant_error);
}

TEST_CASE("weyl action on characters") {
    abelian::FinAbGroup z2(2, IntMat(2, 0));
    FormalValue a = FormalValue::symbol("a"), b = FormalValue::symbol("b");
    TorusCharacter c(z2, {a, b});
    IntMat swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    TorusCharacter sc = act(swap, c);
    CHECK(sc.values[0] == b);
    CHECK(sc.values[1] == a);
    CHECK(act(IntMat::identity(2), c) == c);

    // group action: acting by swap twice is the identity
    CHECK(act(swap, sc) == c);

    IntMat neg(1, 1);
    neg(0, 0) = -1;
    abelian::FinAbGroup z(1, IntMat(1, 0));
    TorusCharacter q(z, {FormalValue::q_power(Rat(1))});
    CHECK(act(neg, q).values[0] == FormalValue::q_power(Rat(-1)));
}

TEST_CASE("formal sums collect like terms") {
    FormalSum s = FormalSum::of(FormalValue::q_power(Rat(1)));
    s.add(FormalValue::q_power(Rat(1)), Int(2));
    s.add(FormalValue::one(), Int(1));
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms.at(FormalValue::q_power(Rat(1))) == 3);
    s.add(FormalValue::one(), Int(-1));
    CHECK(s.terms.size() == 1);  // zero coefficients vanish
    CHECK_FALSE(s.is_zero());
}
