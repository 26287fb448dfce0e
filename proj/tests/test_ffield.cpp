#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "fqgraphs/ffield.hpp"

using namespace fqg;

namespace {

// independent oracle: polynomial multiplication with explicit reduction,
// written against the coefficient vectors rather than the context's tables
std::vector<uint32_t> oracle_polymul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                     const std::vector<uint32_t>& mod, uint32_t p) {
    std::vector<uint32_t> prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    size_t r = mod.size() - 1;
    for (size_t i = prod.size(); i-- > r;) {
        uint32_t c = prod[i];
        if (!c) continue;
        for (size_t j = 0; j < mod.size(); j++)
            prod[i - r + j] = (prod[i - r + j] + (p - c % p) * mod[j]) % p;
    }
    prod.resize(r);
    return prod;
}

uint32_t oracle_mul(const FieldCtx& f, uint32_t a, uint32_t b) {
    auto pa = f.coeffs({a}), pb = f.coeffs({b});
    auto pc = oracle_polymul(pa, pb, f.modulus(), f.p());
    uint32_t v = 0, pw = 1;
    for (size_t i = 0; i < pc.size(); i++) { v += pc[i] * pw; pw *= f.p(); }
    return v;
}

const std::vector<std::pair<uint32_t, uint32_t>> kSmallFields = {
    {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {13, 1}};

} // namespace

TEST_CASE("make_field picks canonical moduli") {
    CHECK(FieldCtx::make(3, 1).modulus() == std::vector<uint32_t>{0, 1});
    // the only irreducible monic quadratic over GF(2)
    CHECK(FieldCtx::make(2, 2).modulus() == std::vector<uint32_t>{1, 1, 1});
    // t^2 + 1 has no root mod 3 and is lexicographically smallest
    CHECK(FieldCtx::make(3, 2).modulus() == std::vector<uint32_t>{1, 0, 1});
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(FieldCtx::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(2, 25), std::invalid_argument); // over the 2^20 ceiling
    CHECK_NOTHROW(FieldCtx::make(2, 4, 16));
    CHECK_THROWS_AS(FieldCtx::make(2, 5, 16), std::invalid_argument);
}

TEST_CASE("same (p,r) always yields the same context") {
    FieldCtx a = FieldCtx::make(3, 2), b = FieldCtx::make(3, 2);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.primitive_element() == b.primitive_element());
}

TEST_CASE("basic arithmetic values") {
    FieldCtx f5 = FieldCtx::make(5, 1);
    CHECK(f5.mul({3}, {4}) == FieldElem{2});
    FieldCtx f4 = FieldCtx::make(2, 2);
    // t * t = t + 1 mod t^2+t+1: index 2 * 2 -> 3
    CHECK(f4.mul({2}, {2}) == FieldElem{3});
    CHECK(f4.mul({2}, {2}).idx == oracle_mul(f4, 2, 2));
    FieldCtx f7 = FieldCtx::make(7, 1);
    CHECK(f7.inv({2}) == FieldElem{4});
    CHECK_THROWS_AS(f7.inv({0}), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively") {
    for (auto [p, r] : kSmallFields) {
        FieldCtx f = FieldCtx::make(p, r);
        uint32_t q = f.q();
        INFO("q = " << q);
        for (uint32_t a = 0; a < q; a++) {
            FieldElem ea{a};
            CHECK(f.add(ea, f.zero()) == ea);
            CHECK(f.mul(ea, f.one()) == ea);
            CHECK(f.add(ea, f.neg(ea)) == f.zero());
            if (a) CHECK(f.mul(ea, f.inv(ea)) == f.one());
            for (uint32_t b = 0; b < q; b++) {
                FieldElem eb{b};
                CHECK(f.add(ea, eb) == f.add(eb, ea));
                CHECK(f.mul(ea, eb) == f.mul(eb, ea));
                CHECK(f.mul(ea, eb).idx == oracle_mul(f, a, b));
                for (uint32_t c = 0; c < q; c++) {
                    FieldElem ec{c};
                    REQUIRE(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)));
                    REQUIRE(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
                    REQUIRE(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
                }
            }
        }
    }
}

TEST_CASE("is_square agrees with the exhaustive-squares oracle for all q <= 49") {
    for (auto [p, r] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                                  {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4},
                                                                  {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3},
                                                                  {29, 1}, {31, 1}, {2, 5}, {37, 1}, {41, 1},
                                                                  {43, 1}, {47, 1}, {7, 2}}) {
        FieldCtx f = FieldCtx::make(p, r);
        std::set<uint32_t> squares;
        for (uint32_t t = 0; t < f.q(); t++) squares.insert(f.mul({t}, {t}).idx);
        for (uint32_t a = 0; a < f.q(); a++) {
            INFO("q = " << f.q() << " a = " << a);
            REQUIRE(f.is_square({a}) == (squares.count(a) > 0));
        }
        if (f.q() % 2 == 1) {
            // exactly (q-1)/2 non-zero squares
            CHECK(squares.size() == (f.q() - 1) / 2 + 1);
        }
    }
}

TEST_CASE("spec square examples") {
    FieldCtx f5 = FieldCtx::make(5, 1);
    CHECK_FALSE(f5.is_square({3})); // squares mod 5 are {0,1,4}
    FieldCtx f7 = FieldCtx::make(7, 1);
    CHECK(f7.is_square({2})); // 3^2 = 2 mod 7
    CHECK(f7.is_square({0}));
}

TEST_CASE("sqrt returns a correct, canonical root") {
    for (auto [p, r] : kSmallFields) {
        FieldCtx f = FieldCtx::make(p, r);
        for (uint32_t a = 0; a < f.q(); a++) {
            if (!f.is_square({a})) continue;
            FieldElem root = f.sqrt({a});
            CHECK(f.mul(root, root) == FieldElem{a});
            if (f.q() % 2 == 1 && a != 0) CHECK(root < f.neg(root));
        }
    }
}

TEST_CASE("primitive elements are smallest-index generators") {
    CHECK(FieldCtx::make(3, 1).primitive_element() == FieldElem{2});
    CHECK(FieldCtx::make(5, 1).primitive_element() == FieldElem{2}); // powers 2,4,3,1
    CHECK(FieldCtx::make(7, 1).primitive_element() == FieldElem{3}); // 2 has order 3
    for (auto [p, r] : kSmallFields) {
        FieldCtx f = FieldCtx::make(p, r);
        FieldElem g = f.primitive_element();
        CHECK(f.mult_order(g) == f.q() - 1);
        for (uint32_t a = 1; a < g.idx; a++) CHECK(f.mult_order({a}) < f.q() - 1);
    }
}

TEST_CASE("pow handles negative exponents and zero") {
    FieldCtx f = FieldCtx::make(7, 1);
    CHECK(f.pow({3}, -1) == f.inv({3}));
    CHECK(f.pow({3}, 6) == f.one());
    CHECK(f.pow({0}, 5) == f.zero());
    CHECK(f.pow({0}, 0) == f.one());
    CHECK_THROWS_AS(f.pow({0}, -2), std::domain_error);
}

TEST_CASE("trace lands in the prime subfield and is additive") {
    FieldCtx f9 = FieldCtx::make(3, 2);
    for (uint32_t a = 0; a < 9; a++) {
        uint32_t t = f9.trace({a});
        CHECK(t < 3);
        for (uint32_t b = 0; b < 9; b++)
            CHECK((f9.trace({a}) + f9.trace({b})) % 3 == f9.trace(f9.add({a}, {b})));
    }
}

TEST_CASE("ext_field requires odd q and a non-square sigma") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    CHECK_NOTHROW(ExtCtx::make(f3, {2}));
    CHECK_THROWS_AS(ExtCtx::make(f3, {1}), std::invalid_argument); // 1 is a square
    CHECK_THROWS_AS(ExtCtx::make(f3, {0}), std::invalid_argument);
    FieldCtx f4 = FieldCtx::make(2, 2);
    CHECK_THROWS_AS(ExtCtx::make(f4, {2}), std::invalid_argument);
}

TEST_CASE("extension norm, conjugation and imaginary part") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    ExtCtx ext = ExtCtx::make(f3, {2});
    // norm(1 + sqrt(2)) = 1 - 2 = 2 in GF(3)
    CHECK(ext.norm(ext.from({1}, {1})) == FieldElem{2});
    // conj(sqrt(sigma)) = -sqrt(sigma)
    ExtElem s = ext.from({0}, {1});
    CHECK(ext.conj(s) == ext.from({0}, f3.neg({1})));
}

TEST_CASE("norm(z) = z^{1+q} exhaustively at q = 5 and q = 3") {
    for (uint32_t q : {3u, 5u}) {
        FieldCtx f = FieldCtx::make(q, 1);
        ExtCtx ext = ExtCtx::make(f, f.primitive_element());
        for (uint32_t x = 0; x < q; x++)
            for (uint32_t y = 0; y < q; y++) {
                ExtElem z = ext.from({x}, {y});
                ExtElem zq1 = ext.pow(z, q + 1);
                REQUIRE(zq1.im == f.zero());
                REQUIRE(zq1.re == ext.norm(z));
            }
    }
}

TEST_CASE("extension norm is multiplicative and vanishes only at zero") {
    FieldCtx f = FieldCtx::make(5, 1);
    ExtCtx ext = ExtCtx::make(f, {2}); // 2 is a non-square mod 5
    for (uint32_t a = 0; a < 25; a++)
        for (uint32_t b = 0; b < 25; b++) {
            ExtElem za = ext.from({a % 5}, {a / 5}), zb = ext.from({b % 5}, {b / 5});
            REQUIRE(ext.norm(ext.mul(za, zb)) == f.mul(ext.norm(za), ext.norm(zb)));
        }
    for (uint32_t a = 0; a < 25; a++) {
        ExtElem z = ext.from({a % 5}, {a / 5});
        REQUIRE((ext.norm(z) == f.zero()) == ext.is_zero(z));
    }
}

TEST_CASE("conj(z) * z equals the norm exhaustively at small q") {
    FieldCtx f = FieldCtx::make(7, 1);
    ExtCtx ext = ExtCtx::make(f, f.primitive_element());
    for (uint32_t x = 0; x < 7; x++)
        for (uint32_t y = 0; y < 7; y++) {
            ExtElem z = ext.from({x}, {y});
            ExtElem prod = ext.mul(z, ext.conj(z));
            REQUIRE(prod.im == f.zero());
            REQUIRE(prod.re == ext.norm(z));
        }
}

TEST_CASE("parse_prime_power") {
    CHECK(parse_prime_power(9) == std::pair<uint32_t, uint32_t>{3, 2});
    CHECK(parse_prime_power(13) == std::pair<uint32_t, uint32_t>{13, 1});
    CHECK(parse_prime_power(16) == std::pair<uint32_t, uint32_t>{2, 4});
    CHECK_THROWS_AS(parse_prime_power(12), std::invalid_argument);
}
