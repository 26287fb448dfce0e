#include <catch2/catch_amalgamated.hpp>

#include "fqgraphs/qforms.hpp"

using namespace fqg;

namespace {

std::vector<FieldElem> vec(std::initializer_list<uint32_t> xs) {
    std::vector<FieldElem> v;
    for (uint32_t x : xs) v.push_back({x});
    return v;
}

} // namespace

TEST_CASE("catalog forms evaluate as written") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    QuadraticForm qp = QuadraticForm::make(f3, FormKind::plus_even, 2);
    CHECK(qp.eval(vec({1, 2})) == FieldElem{1}); // 2*1*2 = 4 = 1
    CHECK(qp.eval(vec({0, 0})) == FieldElem{0});

    QuadraticForm qm = QuadraticForm::make(f3, FormKind::minus_even, 2);
    CHECK(qm.param() == FieldElem{2}); // the only non-square mod 3
    CHECK(qm.eval(vec({1, 1})) == FieldElem{2}); // 1 - 2 = -1 = 2

    FieldCtx f5 = FieldCtx::make(5, 1);
    QuadraticForm q3 = QuadraticForm::make(f5, FormKind::odd_std, 3);
    CHECK(q3.eval(vec({1, 1, 0})) == FieldElem{2}); // 2*1*1
    CHECK(q3.eval(vec({0, 0, 2})) == FieldElem{4});

    QuadraticForm q3p = QuadraticForm::make(f5, FormKind::odd_prime, 3);
    CHECK(q3p.param() == FieldElem{2});
    CHECK(q3p.eval(vec({0, 0, 1})) == FieldElem{2}); // alpha * 1
}

TEST_CASE("make_form parity and q-parity checks") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    CHECK_THROWS_AS(QuadraticForm::make(f3, FormKind::plus_even, 3), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticForm::make(f3, FormKind::odd_std, 4), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticForm::make(f3, FormKind::even_char_plus, 2), std::invalid_argument);
    FieldCtx f4 = FieldCtx::make(2, 2);
    CHECK_THROWS_AS(QuadraticForm::make(f4, FormKind::plus_even, 2), std::invalid_argument);
    CHECK_NOTHROW(QuadraticForm::make(f4, FormKind::even_char_plus, 2));
}

TEST_CASE("even-q parameter: t^2 + t + beta irreducible") {
    FieldCtx f2 = FieldCtx::make(2, 1);
    QuadraticForm qm2 = QuadraticForm::make(f2, FormKind::even_char_minus, 2);
    CHECK(qm2.param() == FieldElem{1});
    FieldCtx f4 = FieldCtx::make(2, 2);
    QuadraticForm qm4 = QuadraticForm::make(f4, FormKind::even_char_minus, 2);
    // {u^2 + u} = {0, 1} in GF(4), so the smallest valid beta is t (index 2)
    CHECK(qm4.param() == FieldElem{2});
    // anisotropic: only the zero vector maps to 0
    CHECK(sphere_size(qm4, {0}) == 1);
}

TEST_CASE("bilinear form identities") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    QuadraticForm qp = QuadraticForm::make(f3, FormKind::plus_even, 2);
    CHECK(qp.bilinear(vec({1, 0}), vec({0, 1})) == FieldElem{2}); // Q(1,1) - 0 - 0

    // <x,x> = 2 Q(x), symmetry, bilinearity: exhaustive at q = 3
    for (uint32_t dim : {2u, 3u}) {
        QuadraticForm form = dim == 2 ? qp : QuadraticForm::make(f3, FormKind::odd_std, 3);
        uint64_t n = space_size(3, dim);
        std::vector<FieldElem> x(dim), y(dim), z(dim), sum(dim), tx(dim);
        for (uint64_t xi = 0; xi < n; xi++) {
            decode_vindex(xi, 3, dim, x.data());
            FieldElem xx = form.bilinear(x, x);
            REQUIRE(xx == f3.mul({2}, form.eval(x)));
            for (uint64_t yi = 0; yi < n; yi++) {
                decode_vindex(yi, 3, dim, y.data());
                REQUIRE(form.bilinear(x, y) == form.bilinear(y, x));
                // <tx, y> = t <x, y>
                for (uint32_t t = 0; t < 3; t++) {
                    for (uint32_t c = 0; c < dim; c++) tx[c] = f3.mul({t}, x[c]);
                    REQUIRE(form.bilinear(tx, y) == f3.mul({t}, form.bilinear(x, y)));
                }
            }
        }
        // additivity on a sample of triples (full triple loop at dim 3 is 19683 x overhead)
        for (uint64_t xi = 0; xi < n; xi++)
            for (uint64_t yi = 0; yi < n; yi++) {
                decode_vindex(xi, 3, dim, x.data());
                decode_vindex(yi, 3, dim, y.data());
                decode_vindex((xi * 7 + yi * 5 + 1) % n, 3, dim, z.data());
                for (uint32_t c = 0; c < dim; c++) sum[c] = f3.add(x[c], z[c]);
                REQUIRE(form.bilinear(sum, y) == f3.add(form.bilinear(x, y), form.bilinear(z, y)));
            }
    }
}

TEST_CASE("Q(tx) = t^2 Q(x) underlies projective typing") {
    FieldCtx f5 = FieldCtx::make(5, 1);
    for (FormKind kind : {FormKind::plus_even, FormKind::minus_even}) {
        QuadraticForm form = QuadraticForm::make(f5, kind, 2);
        std::vector<FieldElem> x(2), tx(2);
        for (uint64_t xi = 0; xi < 25; xi++) {
            decode_vindex(xi, 5, 2, x.data());
            for (uint32_t t = 0; t < 5; t++) {
                for (uint32_t c = 0; c < 2; c++) tx[c] = f5.mul({t}, x[c]);
                REQUIRE(form.eval(tx) == f5.mul(f5.mul({t}, {t}), form.eval(x)));
            }
        }
    }
}

TEST_CASE("Gram matrices match hand-computed values") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    GramMatrix gp = QuadraticForm::make(f3, FormKind::plus_even, 2).gram();
    CHECK(gp.at(0, 0) == FieldElem{0});
    CHECK(gp.at(0, 1) == FieldElem{1});
    CHECK(gp.at(1, 0) == FieldElem{1});
    CHECK(gp.at(1, 1) == FieldElem{0});
    GramMatrix gm = QuadraticForm::make(f3, FormKind::minus_even, 2).gram();
    CHECK(gm.at(0, 0) == FieldElem{1});
    CHECK(gm.at(0, 1) == FieldElem{0});
    CHECK(gm.at(1, 1) == FieldElem{1}); // -2 = 1 mod 3
}

TEST_CASE("x S x^t = Q(x) exhaustively at small q") {
    for (uint32_t q : {3u, 5u}) {
        FieldCtx f = FieldCtx::make(q, 1);
        for (auto [kind, dim] : std::vector<std::pair<FormKind, uint32_t>>{{FormKind::plus_even, 2},
                                                                           {FormKind::minus_even, 2},
                                                                           {FormKind::odd_std, 3},
                                                                           {FormKind::odd_prime, 3},
                                                                           {FormKind::plus_even, 4}}) {
            QuadraticForm form = QuadraticForm::make(f, kind, dim);
            GramMatrix s = form.gram();
            uint64_t n = space_size(q, dim);
            std::vector<FieldElem> x(dim);
            for (uint64_t xi = 0; xi < n; xi++) {
                decode_vindex(xi, q, dim, x.data());
                FieldElem acc{0};
                for (uint32_t i = 0; i < dim; i++)
                    for (uint32_t j = 0; j < dim; j++)
                        acc = f.add(acc, f.mul(x[i], f.mul(s.at(i, j), x[j])));
                REQUIRE(acc == form.eval(x));
            }
        }
    }
}

TEST_CASE("every classified form is non-degenerate; broken Grams are caught") {
    for (uint32_t q : {3u, 5u, 7u}) {
        FieldCtx f = FieldCtx::make(q, 1);
        for (auto [kind, dim] : std::vector<std::pair<FormKind, uint32_t>>{{FormKind::plus_even, 2},
                                                                           {FormKind::minus_even, 2},
                                                                           {FormKind::odd_std, 3},
                                                                           {FormKind::odd_prime, 3},
                                                                           {FormKind::plus_even, 4},
                                                                           {FormKind::minus_even, 4},
                                                                           {FormKind::odd_std, 5}}) {
            QuadraticForm form = QuadraticForm::make(f, kind, dim);
            GramMatrix s = form.gram();
            REQUIRE(s.rank(f) == dim);
            REQUIRE(is_nondegenerate(form));
        }
        // hand-built degenerate matrices
        GramMatrix zero{2, {FieldElem{0}, FieldElem{0}, FieldElem{0}, FieldElem{0}}};
        CHECK(zero.rank(f) == 0);
        GramMatrix diag10{2, {FieldElem{1}, FieldElem{0}, FieldElem{0}, FieldElem{0}}};
        CHECK(diag10.rank(f) == 1);
    }
}

TEST_CASE("sphere sizes: hand counts and the partition identity") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    QuadraticForm qp = QuadraticForm::make(f3, FormKind::plus_even, 2);
    CHECK(sphere_size(qp, {1}) == 2); // (1,2) and (2,1)
    QuadraticForm qm = QuadraticForm::make(f3, FormKind::minus_even, 2);
    CHECK(sphere_size(qm, {1}) == 4); // x^2 + y^2 = 1 mod 3
    for (const QuadraticForm& form : {qp, qm}) {
        auto counts = sphere_counts(form);
        uint64_t total = 0;
        for (uint64_t c : counts) total += c;
        CHECK(total == 9);
    }
}

TEST_CASE("sphere sizes match the valency formulas for a != 0") {
    for (uint32_t q : {3u, 5u, 7u}) {
        FieldCtx f = FieldCtx::make(q, 1);
        for (uint32_t dim : {2u, 4u}) {
            for (FormKind kind : {FormKind::plus_even, FormKind::minus_even}) {
                QuadraticForm form = QuadraticForm::make(f, kind, dim);
                auto counts = sphere_counts(form);
                auto pred = sphere_predictions(form);
                REQUIRE(pred.size() == 1);
                for (uint32_t a = 1; a < q; a++) {
                    INFO("q=" << q << " dim=" << dim << " kind=" << form_kind_name(kind) << " a=" << a);
                    REQUIRE(counts[a] == pred[0]);
                }
            }
            // odd dimension: both signs occur and nothing else
            QuadraticForm form = QuadraticForm::make(f, FormKind::odd_std, dim + 1);
            auto counts = sphere_counts(form);
            auto pred = sphere_predictions(form);
            for (uint32_t a = 1; a < q; a++) {
                INFO("q=" << q << " dim=" << dim + 1 << " a=" << a);
                REQUIRE((counts[a] == pred[0] || counts[a] == pred[1]));
            }
        }
    }
}

TEST_CASE("even-q sphere counts follow the same shapes") {
    FieldCtx f4 = FieldCtx::make(2, 2);
    auto plus = sphere_counts(QuadraticForm::make(f4, FormKind::even_char_plus, 2));
    auto minus = sphere_counts(QuadraticForm::make(f4, FormKind::even_char_minus, 2));
    auto odd = sphere_counts(QuadraticForm::make(f4, FormKind::even_char_odd_dim, 3));
    for (uint32_t a = 1; a < 4; a++) {
        CHECK(plus[a] == 3);  // q - 1
        CHECK(minus[a] == 5); // q + 1
        CHECK(odd[a] == 16);  // q^2
    }
}

TEST_CASE("eval rejects dimension mismatch") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    QuadraticForm qp = QuadraticForm::make(f3, FormKind::plus_even, 2);
    CHECK_THROWS_AS(qp.eval(vec({1, 2, 0})), std::invalid_argument);
    CHECK_THROWS_AS(qp.bilinear(vec({1, 2}), vec({1})), std::invalid_argument);
}
