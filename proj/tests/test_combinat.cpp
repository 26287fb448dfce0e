#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fqgraphs/combinat.hpp"
#include "fqgraphs/prng.hpp"

using namespace fqg;

namespace {

Graph from_edges(const std::vector<std::pair<uint32_t, uint32_t>>& edges, uint32_t n) {
    Graph g(n, LabelKind::plain, {}, FamilyInfo{});
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph cycle(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t i = 0; i < n; i++) e.emplace_back(i, (i + 1) % n);
    return from_edges(e, n);
}

Graph random_graph(uint32_t n, uint32_t percent, SplitMix64& rng) {
    Graph g(n, LabelKind::plain, {}, FamilyInfo{});
    for (uint32_t u = 0; u < n; u++)
        for (uint32_t v = u + 1; v < n; v++)
            if (rng.below(100) < percent) g.add_edge(u, v);
    return g;
}

// ----- independent oracles, deliberately naive -----

uint64_t oracle_triangles(const Graph& g) {
    uint64_t t = 0;
    uint32_t n = g.num_vertices();
    for (uint32_t a = 0; a < n; a++)
        for (uint32_t b = a + 1; b < n; b++)
            for (uint32_t c = b + 1; c < n; c++)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) t++;
    return t;
}

uint32_t oracle_alpha(const Graph& g) {
    uint32_t n = g.num_vertices(), best = 0;
    for (uint32_t mask = 0; mask < (1u << n); mask++) {
        bool ok = true;
        for (uint32_t u = 0; u < n && ok; u++)
            for (uint32_t v = u + 1; v < n && ok; v++)
                if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, static_cast<uint32_t>(std::popcount(mask)));
    }
    return best;
}

bool oracle_colorable(const Graph& g, uint32_t k, std::vector<uint32_t>& col, uint32_t v, uint32_t used) {
    if (v == g.num_vertices()) return true;
    // colors are interchangeable: trying one fresh color suffices
    uint32_t limit = std::min(k, used + 1);
    for (uint32_t c = 0; c < limit; c++) {
        bool ok = true;
        for (uint32_t u = 0; u < v; u++)
            if (g.adjacent(u, v) && col[u] == c) { ok = false; break; }
        if (!ok) continue;
        col[v] = c;
        if (oracle_colorable(g, k, col, v + 1, std::max(used, c + 1))) return true;
    }
    return false;
}

uint32_t oracle_chi(const Graph& g) {
    if (g.num_edges() == 0) return g.num_vertices() ? 1 : 0;
    for (uint32_t k = 2;; k++) {
        std::vector<uint32_t> col(g.num_vertices());
        if (oracle_colorable(g, k, col, 0, 0)) return k;
    }
}

// toughness by adjacency-list DFS, structured differently from the library
std::optional<std::pair<int64_t, int64_t>> oracle_toughness(const Graph& g) {
    uint32_t n = g.num_vertices();
    std::vector<std::vector<uint32_t>> adj(n);
    for (uint32_t u = 0; u < n; u++)
        for (uint32_t v = 0; v < n; v++)
            if (g.adjacent(u, v)) adj[u].push_back(v);
    auto components = [&](uint32_t removed_mask) {
        std::vector<int> comp(n, -1);
        int count = 0;
        for (uint32_t s = 0; s < n; s++) {
            if ((removed_mask >> s & 1) || comp[s] >= 0) continue;
            std::vector<uint32_t> stack = {s};
            comp[s] = count;
            while (!stack.empty()) {
                uint32_t u = stack.back();
                stack.pop_back();
                for (uint32_t v : adj[u])
                    if (!(removed_mask >> v & 1) && comp[v] < 0) {
                        comp[v] = count;
                        stack.push_back(v);
                    }
            }
            count++;
        }
        return count;
    };
    std::optional<std::pair<int64_t, int64_t>> best;
    for (uint32_t s = 1; s + 1 < (1u << n); s++) {
        int c = components(s);
        if (c < 2) continue;
        int64_t cut = std::popcount(s);
        if (!best || cut * best->second < best->first * c) best = {cut, c};
    }
    return best;
}

} // namespace

TEST_CASE("triangle counts match the triple-loop oracle") {
    CHECK(count_triangles(cycle(3)) == 1);
    SplitMix64 rng(31337);
    for (int t = 0; t < 30; t++) {
        uint32_t n = 5 + static_cast<uint32_t>(rng.below(59)); // up to 64
        Graph g = random_graph(n, 20 + static_cast<uint32_t>(rng.below(50)), rng);
        REQUIRE(count_triangles(g) == oracle_triangles(g));
    }
    FieldCtx f3 = FieldCtx::make(3, 1);
    for (FormKind kind : {FormKind::plus_even, FormKind::minus_even}) {
        QuadraticForm form = QuadraticForm::make(f3, kind, 2);
        for (uint32_t a = 0; a < 3; a++) {
            Graph g = build_euclidean(form, {a});
            REQUIRE(count_triangles(g) == oracle_triangles(g));
        }
    }
}

TEST_CASE("triangle-free plane families follow the character of -3") {
    // q = 2 mod 3: Q+ graphs are triangle-free and Q- graphs are not;
    // q = 1 mod 3: the families swap. Exact counts at q in {5,7,11,13}.
    struct Row { uint32_t q; FormKind free_kind; FormKind full_kind; uint64_t full_count; };
    for (Row row : {Row{5, FormKind::plus_even, FormKind::minus_even, 50},
                    Row{7, FormKind::minus_even, FormKind::plus_even, 98},
                    Row{11, FormKind::plus_even, FormKind::minus_even, 484},
                    Row{13, FormKind::minus_even, FormKind::plus_even, 676}}) {
        FieldCtx f = FieldCtx::make(row.q, 1);
        QuadraticForm free_form = QuadraticForm::make(f, row.free_kind, 2);
        QuadraticForm full_form = QuadraticForm::make(f, row.full_kind, 2);
        for (uint32_t a = 1; a < row.q; a++) {
            CHECK(count_triangles(build_euclidean(free_form, {a})) == 0);
            CHECK(count_triangles(build_euclidean(full_form, {a})) == row.full_count);
        }
    }
}

TEST_CASE("independence: small closed forms") {
    CHECK(independence_exact(cycle(5)).value == 2);
    // perfect matching on 2m vertices has alpha = m
    std::vector<std::pair<uint32_t, uint32_t>> m5;
    for (uint32_t i = 0; i < 5; i++) m5.emplace_back(2 * i, 2 * i + 1);
    CHECK(independence_exact(from_edges(m5, 10)).value == 5);
}

TEST_CASE("independence matches the 2^n oracle, including E_3(2,Q-,1)") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    Graph g = build_euclidean(QuadraticForm::make(f3, FormKind::minus_even, 2), {1});
    SearchResult r = independence_exact(g);
    CHECK(r.outcome == SearchOutcome::exact);
    CHECK(r.value == oracle_alpha(g));

    SplitMix64 rng(777);
    for (int t = 0; t < 25; t++) {
        uint32_t n = 4 + static_cast<uint32_t>(rng.below(9));
        Graph h = random_graph(n, 15 + static_cast<uint32_t>(rng.below(70)), rng);
        REQUIRE(independence_exact(h).value == oracle_alpha(h));
    }
}

TEST_CASE("chromatic: small closed forms and the oracle") {
    CHECK(chromatic_exact(cycle(4)).value == 2);
    CHECK(chromatic_exact(cycle(6)).value == 2);
    CHECK(chromatic_exact(cycle(5)).value == 3);
    SplitMix64 rng(424242);
    for (int t = 0; t < 25; t++) {
        uint32_t n = 4 + static_cast<uint32_t>(rng.below(9));
        Graph h = random_graph(n, 15 + static_cast<uint32_t>(rng.below(70)), rng);
        REQUIRE(chromatic_exact(h).value == oracle_chi(h));
    }
}

TEST_CASE("chi(E_5(2,Q+,1)) is exact and dominated by n / alpha and d / lambda") {
    FieldCtx f5 = FieldCtx::make(5, 1);
    Graph g = build_euclidean(QuadraticForm::make(f5, FormKind::plus_even, 2), {1});
    SearchResult chi = chromatic_exact(g);
    SearchResult alpha = independence_exact(g);
    REQUIRE(chi.outcome == SearchOutcome::exact);
    REQUIRE(alpha.outcome == SearchOutcome::exact);
    CHECK(chi.value * alpha.value >= g.num_vertices());
    NDLCertificate cert = certify(g);
    CHECK(static_cast<double>(chi.value) >= cert.d / cert.lambda - 1e-9);
}

TEST_CASE("toughness: cycles are 1-tough, disconnected graphs are 0-tough") {
    ToughnessResult c6 = toughness_exact(cycle(6));
    REQUIRE(c6.t.has_value());
    CHECK(c6.t->num == 1);
    CHECK(c6.t->den == 1);

    Graph two = from_edges({{0, 1}, {2, 3}}, 4);
    ToughnessResult d = toughness_exact(two);
    CHECK_FALSE(d.connected);
    REQUIRE(d.t.has_value());
    CHECK(d.t->num == 0);

    // complete graphs have no cutset
    Graph k4 = from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 4);
    ToughnessResult k = toughness_exact(k4);
    CHECK(k.no_cutset);
}

TEST_CASE("toughness matches an independent enumeration oracle") {
    SplitMix64 rng(5150);
    int checked = 0;
    for (int t = 0; t < 30; t++) {
        uint32_t n = 4 + static_cast<uint32_t>(rng.below(7));
        Graph h = random_graph(n, 30 + static_cast<uint32_t>(rng.below(50)), rng);
        if (!h.connected()) continue;
        ToughnessResult mine = toughness_exact(h);
        auto oracle = oracle_toughness(h);
        if (!oracle) {
            CHECK(mine.no_cutset);
            continue;
        }
        REQUIRE(mine.t.has_value());
        // compare as exact rationals
        REQUIRE(mine.t->num * oracle->second == oracle->first * mine.t->den);
        checked++;
    }
    CHECK(checked > 5);
}

TEST_CASE("toughness of V_3(2,1) meets the spectral lower bound") {
    FieldCtx f3 = FieldCtx::make(3, 1);
    Graph g = build_halfplane(halfplane_ext(f3), {1});
    REQUIRE(g.num_vertices() == 6);
    NDLCertificate cert = certify(g);
    BoundsReport b = spectral_bounds(cert);
    ToughnessResult t = toughness_exact(g);
    REQUIRE(t.t.has_value());
    CHECK(t.t->value() > b.toughness_bound);
}

TEST_CASE("exact independence respects the spectral upper bound instance by instance") {
    for (uint32_t q : {3u, 5u}) {
        FieldCtx f = FieldCtx::make(q, 1);
        for (FormKind kind : {FormKind::plus_even, FormKind::minus_even}) {
            QuadraticForm form = QuadraticForm::make(f, kind, 2);
            for (uint32_t a = 1; a < q; a++) {
                Graph g = build_euclidean(form, {a});
                NDLCertificate cert = certify(g);
                if (cert.lambda >= cert.d - 1e-9) continue; // degenerate, no bound
                SearchResult alpha = independence_exact(g);
                REQUIRE(alpha.outcome == SearchOutcome::exact);
                REQUIRE(static_cast<double>(alpha.value) <= spectral_bounds(cert).alpha_bound + 1e-9);
            }
        }
    }
}

TEST_CASE("spectral_bounds rejects degenerate certificates") {
    // a perfect matching has lambda = d = 1
    Graph m = from_edges({{0, 1}, {2, 3}}, 4);
    NDLCertificate cert = certify(m);
    CHECK_THROWS_AS(spectral_bounds(cert), std::domain_error);
}

TEST_CASE("spectral bounds from a measured certificate") {
    FieldCtx f5 = FieldCtx::make(5, 1);
    Graph g = build_halfplane(halfplane_ext(f5), {1});
    NDLCertificate cert = certify(g);
    BoundsReport b = spectral_bounds(cert);
    CHECK(b.alpha_bound == Catch::Approx(20.0 * cert.lambda / 6.0));
    CHECK(b.alpha2_bound == Catch::Approx(b.alpha_bound * b.alpha_bound));
    CHECK(b.chi_bound == Catch::Approx(6.0 / cert.lambda));
    CHECK(b.toughness_bound ==
          Catch::Approx((36.0 / (cert.lambda * 6.0 + cert.lambda * cert.lambda) - 1.0) / 3.0));
}

TEST_CASE("explicit alpha bound shape holds on euclidean instances") {
    for (uint32_t q : {3u, 5u, 7u}) {
        FieldCtx f = FieldCtx::make(q, 1);
        for (uint32_t dim : {2u, 3u}) {
            QuadraticForm form = QuadraticForm::make(
                f, dim == 2 ? FormKind::minus_even : FormKind::odd_std, dim);
            Graph g = build_euclidean(form, {1});
            NDLCertificate cert = certify_with(g, spectrum_charsum(form, {1}));
            ExplicitBoundCheck chk = explicit_alpha_bound_check(cert, dim);
            INFO("q=" << q << " dim=" << dim << " const=" << chk.effective_constant);
            CHECK(chk.holds);
            CHECK(chk.effective_constant <= 4.0);
        }
    }
}

TEST_CASE("budget exhaustion degrades gracefully") {
    // Petersen graph: alpha = 4, chi = 3, greedy clique = 2, so both
    // searches must branch and a 2-node budget cannot complete
    std::vector<std::pair<uint32_t, uint32_t>> pe;
    for (uint32_t i = 0; i < 5; i++) {
        pe.emplace_back(i, (i + 1) % 5);
        pe.emplace_back(i, 5 + i);
        pe.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    Graph g = from_edges(pe, 10);
    SearchBudget tiny{.node_limit = 2, .wall_limit_seconds = 300};
    SearchResult alpha = independence_exact(g, tiny);
    CHECK(alpha.outcome == SearchOutcome::lower_bound_only);
    CHECK(alpha.value >= 1); // greedy seed still reported
    CHECK(alpha.value <= 4);
    SearchResult chi = chromatic_exact(g, tiny);
    CHECK(chi.outcome == SearchOutcome::lower_bound_only);
    CHECK(chi.value <= 3);
    // with an adequate budget both are exact
    CHECK(independence_exact(g).value == 4);
    CHECK(chromatic_exact(g).value == 3);
}

TEST_CASE("triangle-free classification scan") {
    for (uint32_t q : {5u, 7u, 11u, 13u}) {
        TriangleFreeReport rep = triangle_free_classification(q, q <= 7);
        INFO("q = " << q);
        CHECK(rep.minus_three_is_square == (q % 3 == 1));
        CHECK(rep.listed_family_free);
        CHECK(rep.nonlisted_positive);
        if (q <= 7) CHECK(rep.dim3_existential);
        // the printed chi(3) rule only agrees when -1 is a square
        CHECK(rep.printed_rule_agrees == (q % 4 == 1));
    }
    CHECK_THROWS_AS(triangle_free_classification(9), std::invalid_argument);
}

TEST_CASE("ramsey witness congruence gate") {
    CHECK_THROWS_AS(ramsey_witness(13), std::invalid_argument); // 13 = 12k+1
    CHECK_THROWS_AS(ramsey_witness(9), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(ramsey_witness(5, 0), std::invalid_argument);
}

TEST_CASE("ramsey witness at q = 5: exact alpha and chi") {
    RamseyWitness w = ramsey_witness(5, 1, {}, true, true);
    CHECK(w.n == 25);
    CHECK(w.kind == FormKind::plus_even);
    CHECK(w.d == 4);
    CHECK(w.triangle_count == 0);
    CHECK(w.alpha_kind == "exact");
    REQUIRE(w.chi_exact.has_value());
    CHECK(*w.chi_exact >= w.chi_lower - 1e-9);
    // the witness statement pins R(3, alpha+1) > n
    CHECK(w.ramsey_statement ==
          "R(3," + std::to_string(static_cast<uint64_t>(w.alpha_value) + 1) + ") > 25");
}

TEST_CASE("ramsey witness at q = 7 uses the minus family") {
    // E_7(2,Q+,a) has triangles (98 of them); the triangle-free plane
    // family at q = 7 is Q-
    RamseyWitness w = ramsey_witness(7, 1, {}, true, true);
    CHECK(w.n == 49);
    CHECK(w.kind == FormKind::minus_even);
    CHECK(w.d == 8);
    CHECK(w.triangle_count == 0);
    CHECK(w.alpha_kind == "exact");
    REQUIRE(w.chi_exact.has_value());
    CHECK(static_cast<double>(*w.chi_exact) >= w.chi_lower - 1e-9);
}

TEST_CASE("ramsey witness at q = 17: spectral upper bound route") {
    RamseyWitness w = ramsey_witness(17);
    CHECK(w.n == 289);
    CHECK(w.d == 16);
    CHECK(w.triangle_count == 0);
    CHECK(w.alpha_kind == "spectral_upper_bound");
    CHECK(w.lambda <= 2 * std::sqrt(17.0) + 1e-6);
    CHECK(w.alpha_value <= 149.0);
    CHECK(w.ramsey_statement.substr(0, 4) == "R(3,");
}
