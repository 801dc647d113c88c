#include <doctest.h>

#include "snmat/presentations.hpp"

using namespace snmat;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("recognition witnesses for the 2x2 case")
{
    AarTriple t = aar_witnesses(Q, 2, 1);
    Chain c({2});
    CHECK(t.a == CoreElement::unit(c, Q, Word::parse("0"), Word::parse("1")));
    CHECK(t.b == CoreElement::unit(c, Q, Word::parse("1"), Word::parse("0")));
    CHECK(t.c == CoreElement::unit(c, Q, Word::parse("0"), Word::parse("1")));
    CHECK(t.a * t.b + t.b * t.c == CoreElement::identity(c, Q));
    CHECK(aar_check(t.a, t.b, t.c, 2, 1));
}

TEST_CASE("recognition witnesses for n = 3, k = 1")
{
    AarTriple t = aar_witnesses(Q, 3, 1);
    Chain c({3});
    CoreElement a_expected = CoreElement::unit(c, Q, Word::parse("0"), Word::parse("1")) +
                             CoreElement::unit(c, Q, Word::parse("1"), Word::parse("2"));
    CoreElement b_expected = CoreElement::unit(c, Q, Word::parse("1"), Word::parse("0")) +
                             CoreElement::unit(c, Q, Word::parse("2"), Word::parse("1"));
    CoreElement c_expected = CoreElement::unit(c, Q, Word::parse("0"), Word::parse("2"));
    CHECK(t.a == a_expected);
    CHECK(t.b == b_expected);
    CHECK(t.c == c_expected);
    CHECK(aar_check(t.a, t.b, t.c, 3, 1));
}

TEST_CASE("witnesses pass the check over the whole grid")
{
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t k = 1; k <= n - 1; ++k) {
            AarTriple t = aar_witnesses(Q, n, k);
            CHECK(aar_check(t.a, t.b, t.c, n, k));
        }
    CHECK_THROWS_AS((void)aar_witnesses(Q, 2, 2), error);
    CHECK_THROWS_AS((void)aar_witnesses(Q, 1, 1), error);
}

TEST_CASE("check rejects non-witnesses")
{
    Chain c({2});
    CoreElement zero = CoreElement::zero(c, Q);
    CHECK(!aar_check(zero, zero, zero, 2, 1));
    // b = identity has b^n != 0
    CoreElement one = CoreElement::identity(c, Q);
    AarTriple t = aar_witnesses(Q, 2, 1);
    CHECK(!aar_check(t.a, one, t.c, 2, 1));
}

TEST_CASE("first root is the shift itself")
{
    CoreElement b = matrix_root(Q, 3, 1);
    AarTriple t = aar_witnesses(Q, 3, 1);
    CHECK(b == t.b);
}

TEST_CASE("square root of the doubled 2-shift")
{
    CoreElement b = matrix_root(Q, 2, 2);
    Chain c({2, 2});
    CHECK(b.level() == 2);
    CoreElement square = b * b;
    CoreElement expected = CoreElement::unit(c, Q, Word::parse("1"), Word::parse("0"));
    CHECK(square == expected);  // E10 + E32 compresses to the level-1 shift
    CHECK(pow(b, 4).is_zero());
    CHECK(!pow(b, 3).is_zero());
}

TEST_CASE("roots over the whole grid")
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t m = 2; m <= 4; ++m) {
            CoreElement b = matrix_root(Q, n, m);
            Chain c({n, m});
            CoreElement shift = aar_witnesses(Q, n, 1).b;
            Block rebased;
            rebased.level = 1;
            rebased.entries = shift.lift(1).entries;
            CoreElement lifted = CoreElement::from_block(c, Q, CoreElement::from_block(c, Q, rebased).lift(2));
            CHECK(pow(b, m) == lifted);
            CHECK(pow(b, n * m).is_zero());
            CHECK(!pow(b, n * m - 1).is_zero());
        }
}

TEST_CASE("chain witnesses satisfy the presentation relations")
{
    for (const char* literal : {"2", "2,2", "2,2,2", "2,3", "3,2"}) {
        Chain chain = Chain::parse(literal);
        RootChain rc = chain_witnesses(chain, Q);
        CHECK(rc.b.size() == chain.stored_depth());
        std::uint64_t m1 = chain.radix(1);
        CoreElement one = CoreElement::identity(chain, Q);
        CHECK(rc.a * rc.b[0] + pow(rc.b[0], m1 - 1) * rc.c == one);
        for (std::size_t t = 2; t <= chain.stored_depth(); ++t)
            CHECK(pow(rc.b[t - 1], chain.radix(t)) == rc.b[t - 2]);
        // each b_t is nilpotent of index exactly n_t
        for (std::size_t t = 1; t <= chain.stored_depth(); ++t) {
            std::uint64_t n = chain.level_size(t);
            CHECK(pow(rc.b[t - 1], n).is_zero());
            CHECK(!pow(rc.b[t - 1], n - 1).is_zero());
        }
    }
}
