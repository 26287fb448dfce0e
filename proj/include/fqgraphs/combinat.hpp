#pragma once
// Exact small-scale combinatorics: triangle counting, branch-and-bound
// independence number, exact chromatic number, exhaustive toughness, the
// four spectral bounds, the triangle-free classification scan, and Ramsey
// witnesses.
//
// Determinism: branch-and-bound vertex order is descending degree with ties
// by vertex index; budgets count search nodes, so outcomes are reproducible
// whenever the wall-clock limit does not bind.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqgraphs/builders.hpp"
#include "fqgraphs/graph.hpp"
#include "fqgraphs/spectral.hpp"

namespace fqg {

// ---------------------------------------------------------------------------
// triangles

inline uint64_t count_triangles(const Graph& g) {
    uint32_t n = g.num_vertices();
    size_t words = g.row_words();
    uint64_t total = 0;
    for (uint32_t u = 0; u < n; u++) {
        auto ru = g.row(u);
        for (size_t w = u / 64; w < words; w++) {
            uint64_t word = ru[w];
            if (w == u / 64) word &= ~((2ull << (u % 64)) - 1); // keep v > u
            while (word) {
                uint32_t v = static_cast<uint32_t>(w * 64 + std::countr_zero(word));
                word &= word - 1;
                auto rv = g.row(v);
                // count w' > v adjacent to both
                size_t vw = v / 64;
                uint64_t first = ru[vw] & rv[vw] & ~((2ull << (v % 64)) - 1);
                total += std::popcount(first);
                for (size_t k = vw + 1; k < words; k++) total += std::popcount(ru[k] & rv[k]);
            }
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// search budgets

struct SearchBudget {
    uint64_t node_limit = 100'000'000;
    double wall_limit_seconds = 300.0;
};

enum class SearchOutcome { exact, lower_bound_only, timeout };

inline const char* outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::exact: return "exact";
        case SearchOutcome::lower_bound_only: return "lower_bound_only";
        case SearchOutcome::timeout: return "timeout";
    }
    return "?";
}

struct SearchResult {
    uint32_t value = 0;
    SearchOutcome outcome = SearchOutcome::exact;
    uint64_t nodes = 0;
};

namespace detail {

struct BudgetState {
    uint64_t node_limit;
    std::chrono::steady_clock::time_point deadline;
    uint64_t nodes = 0;
    bool node_budget_hit = false;
    bool wall_hit = false;

    explicit BudgetState(const SearchBudget& b)
        : node_limit(b.node_limit),
          deadline(std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(b.wall_limit_seconds))) {}

    bool tick() {
        if (++nodes > node_limit) { node_budget_hit = true; return false; }
        if ((nodes & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline) {
            wall_hit = true;
            return false;
        }
        return true;
    }

    SearchOutcome outcome() const {
        if (wall_hit) return SearchOutcome::timeout;
        if (node_budget_hit) return SearchOutcome::lower_bound_only;
        return SearchOutcome::exact;
    }
};

// vertices by descending G-degree, ties by index
inline std::vector<uint32_t> degree_order(const Graph& g) {
    uint32_t n = g.num_vertices();
    std::vector<uint32_t> deg(n), order(n);
    for (uint32_t u = 0; u < n; u++) deg[u] = g.degree(u);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) { return deg[a] > deg[b]; });
    return order;
}

} // namespace detail

// ---------------------------------------------------------------------------
// maximum independent set: branch and bound on the complement (an
// independent set in G is a clique in the complement), greedy-coloring
// upper bound for pruning, greedy initial solution as the lower bound

class IndependenceSolver {
public:
    explicit IndependenceSolver(const Graph& g) : n_(g.num_vertices()), words_((n_ + 63) / 64) {
        comp_.assign(static_cast<size_t>(n_) * words_, ~0ull);
        for (uint32_t u = 0; u < n_; u++) {
            uint64_t* row = &comp_[static_cast<size_t>(u) * words_];
            auto gr = g.row(u);
            for (size_t w = 0; w < words_; w++) row[w] = ~gr[w];
            row[u / 64] &= ~(1ull << (u % 64));
            if (n_ % 64) row[words_ - 1] &= (1ull << (n_ % 64)) - 1;
        }
        order_ = detail::degree_order(g);
        rank_.resize(n_);
        for (uint32_t i = 0; i < n_; i++) rank_[order_[i]] = i;
    }

    SearchResult solve(const SearchBudget& budget) {
        detail::BudgetState bs(budget);
        // greedy seed along the branch order
        std::vector<uint64_t> chosen((n_ + 63) / 64, 0);
        best_ = 0;
        for (uint32_t v : order_) {
            if (subset_of(chosen, comp_row(v))) {
                mask_set(chosen, v);
                best_++;
            }
        }
        std::vector<uint32_t> cands = order_;
        expand(0, cands, bs);
        SearchResult res;
        res.value = best_;
        res.outcome = bs.outcome();
        res.nodes = bs.nodes;
        return res;
    }

private:
    const uint64_t* comp_row(uint32_t v) const { return &comp_[static_cast<size_t>(v) * words_]; }

    bool subset_of(const std::vector<uint64_t>& set, const uint64_t* allowed) const {
        for (size_t w = 0; w < words_; w++)
            if (set[w] & ~allowed[w]) return false;
        return true;
    }

    // greedy coloring of the complement-induced subgraph on cands (in branch
    // order); emits vertices sorted by color, colors ascending
    void color_sort(const std::vector<uint32_t>& cands, std::vector<uint32_t>& out_v,
                    std::vector<uint32_t>& out_c) {
        size_t used = 0;
        for (uint32_t v : cands) {
            size_t c = 0;
            for (; c < used; c++) {
                if (!intersects(classes_[c], comp_row(v))) break;
            }
            if (c == used) {
                if (classes_.size() <= used) {
                    classes_.emplace_back(words_, 0);
                    members_.emplace_back();
                }
                std::fill(classes_[used].begin(), classes_[used].end(), 0);
                members_[used].clear();
                used++;
            }
            classes_[c][v / 64] |= 1ull << (v % 64);
            members_[c].push_back(v);
        }
        out_v.clear();
        out_c.clear();
        for (size_t c = 0; c < used; c++)
            for (uint32_t v : members_[c]) {
                out_v.push_back(v);
                out_c.push_back(static_cast<uint32_t>(c + 1));
            }
    }

    bool intersects(const std::vector<uint64_t>& mask, const uint64_t* row) const {
        for (size_t w = 0; w < words_; w++)
            if (mask[w] & row[w]) return true;
        return false;
    }

    void expand(uint32_t size, std::vector<uint32_t>& cands, detail::BudgetState& bs) {
        if (!bs.tick()) return;
        std::vector<uint32_t> vs, cs;
        color_sort(cands, vs, cs);
        for (size_t i = vs.size(); i-- > 0;) {
            if (bs.node_budget_hit || bs.wall_hit) return;
            if (size + cs[i] <= best_) return; // coloring bound prunes all remaining
            uint32_t v = vs[i];
            std::vector<uint32_t> next;
            next.reserve(i);
            const uint64_t* cr = comp_row(v);
            for (size_t j = 0; j < i; j++) {
                uint32_t u = vs[j];
                if ((cr[u / 64] >> (u % 64)) & 1) next.push_back(u);
            }
            std::sort(next.begin(), next.end(), [&](uint32_t a, uint32_t b) { return rank_[a] < rank_[b]; });
            if (next.empty()) {
                if (size + 1 > best_) best_ = size + 1;
            } else {
                expand(size + 1, next, bs);
            }
        }
    }

    uint32_t n_;
    size_t words_;
    std::vector<uint64_t> comp_;
    std::vector<uint32_t> order_, rank_;
    std::vector<std::vector<uint64_t>> classes_;
    std::vector<std::vector<uint32_t>> members_;
    uint32_t best_ = 0;
};

inline SearchResult independence_exact(const Graph& g, const SearchBudget& budget = {}) {
    if (g.num_vertices() == 0) return {0, SearchOutcome::exact, 0};
    return IndependenceSolver(g).solve(budget);
}

// ---------------------------------------------------------------------------
// exact chromatic number: iterated k-colorability with saturation-degree
// ordering; greedy clique lower bound when the budget is exhausted

class ChromaticSolver {
public:
    explicit ChromaticSolver(const Graph& g) : g_(g), n_(g.num_vertices()) {}

    SearchResult solve(const SearchBudget& budget) {
        detail::BudgetState bs(budget);
        if (n_ == 0) return {0, SearchOutcome::exact, 0};
        if (g_.num_edges() == 0) return {1, SearchOutcome::exact, 0};
        uint32_t lb = std::max<uint32_t>(greedy_clique(), 2);
        uint32_t ub = dsatur_greedy();
        if (ub > 64) throw std::invalid_argument("chromatic_exact: more than 64 colors unsupported");
        for (uint32_t k = lb; k < ub; k++) {
            int r = colorable(k, bs);
            if (r == 1) return {k, SearchOutcome::exact, bs.nodes};
            if (r < 0) return {lb, bs.outcome(), bs.nodes}; // budget: clique bound only
            lb = k + 1;
        }
        return {ub, SearchOutcome::exact, bs.nodes};
    }

private:
    uint32_t greedy_clique() const {
        auto order = detail::degree_order(g_);
        std::vector<uint32_t> clique;
        for (uint32_t v : order) {
            bool ok = true;
            for (uint32_t u : clique)
                if (!g_.adjacent(u, v)) { ok = false; break; }
            if (ok) clique.push_back(v);
        }
        return static_cast<uint32_t>(clique.size());
    }

    uint32_t dsatur_greedy() const {
        std::vector<int> color(n_, -1);
        std::vector<uint32_t> satdeg(n_, 0);
        uint32_t used = 0;
        for (uint32_t step = 0; step < n_; step++) {
            uint32_t pick = n_;
            for (uint32_t v = 0; v < n_; v++) {
                if (color[v] >= 0) continue;
                if (pick == n_ || satdeg[v] > satdeg[pick] ||
                    (satdeg[v] == satdeg[pick] && g_.degree(v) > g_.degree(pick)))
                    pick = v;
            }
            std::vector<bool> taken(used + 2, false);
            for (uint32_t u = 0; u < n_; u++)
                if (color[u] >= 0 && g_.adjacent(pick, u) && color[u] < static_cast<int>(taken.size()))
                    taken[color[u]] = true;
            uint32_t c = 0;
            while (c < taken.size() && taken[c]) c++;
            color[pick] = static_cast<int>(c);
            used = std::max(used, c + 1);
            for (uint32_t u = 0; u < n_; u++) {
                if (g_.adjacent(pick, u)) satdeg[u]++;
            }
        }
        return used;
    }

    // 1 = colorable, 0 = proven not colorable, -1 = budget exhausted
    int colorable(uint32_t k, detail::BudgetState& bs) {
        color_.assign(n_, -1);
        return dfs(0, k, bs);
    }

    int dfs(uint32_t colored, uint32_t k, detail::BudgetState& bs) {
        if (!bs.tick()) return -1;
        if (colored == n_) return 1;
        // saturation degree order: most distinct neighbor colors, ties by
        // degree then index
        uint32_t pick = n_;
        uint32_t pick_sat = 0;
        for (uint32_t v = 0; v < n_; v++) {
            if (color_[v] >= 0) continue;
            uint32_t sat = 0;
            uint64_t seen = 0;
            for (uint32_t u = 0; u < n_; u++)
                if (color_[u] >= 0 && g_.adjacent(v, u)) {
                    uint64_t bit = 1ull << (color_[u] % 64);
                    if (!(seen & bit)) { seen |= bit; sat++; }
                }
            if (pick == n_ || sat > pick_sat ||
                (sat == pick_sat && g_.degree(v) > g_.degree(pick)))
                { pick = v; pick_sat = sat; }
        }
        uint64_t forbidden = 0;
        for (uint32_t u = 0; u < n_; u++)
            if (color_[u] >= 0 && g_.adjacent(pick, u)) forbidden |= 1ull << (color_[u] % 64);
        for (uint32_t c = 0; c < k; c++) {
            if (forbidden & (1ull << (c % 64))) continue;
            color_[pick] = static_cast<int>(c);
            int r = dfs(colored + 1, k, bs);
            if (r != 0) { color_[pick] = -1; return r; }
            color_[pick] = -1;
            // symmetry: trying one fresh color is enough
            bool fresh = true;
            for (uint32_t u = 0; u < n_; u++)
                if (color_[u] == static_cast<int>(c)) { fresh = false; break; }
            if (fresh) break;
        }
        return 0;
    }

    const Graph& g_;
    uint32_t n_;
    std::vector<int> color_;
};

inline SearchResult chromatic_exact(const Graph& g, const SearchBudget& budget = {}) {
    if (g.num_vertices() > 4096) throw std::invalid_argument("chromatic_exact: graph too large");
    return ChromaticSolver(g).solve(budget);
}

// ---------------------------------------------------------------------------
// toughness: min over cutsets S with c(G-S) >= 2 of |S| / c(G-S), exact by
// subset enumeration for n <= cap

struct Rational {
    int64_t num = 0;
    int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Rational reduced(int64_t num, int64_t den) {
    int64_t g = std::gcd(num, den);
    if (g == 0) return {num, den};
    return {num / g, den / g};
}

struct ToughnessResult {
    bool connected = false;
    bool no_cutset = false;             // complete graphs: no S disconnects
    std::optional<Rational> t;          // exact value when computed
    SearchOutcome outcome = SearchOutcome::exact;
};

inline ToughnessResult toughness_exact(const Graph& g, uint32_t exact_cap = 24) {
    uint32_t n = g.num_vertices();
    ToughnessResult res;
    res.connected = g.connected();
    if (!res.connected) {
        res.t = Rational{0, 1};
        return res;
    }
    if (n > exact_cap || n > 31) {
        res.outcome = SearchOutcome::lower_bound_only; // spectral bound applies, no exact value
        return res;
    }
    std::vector<uint32_t> adj(n, 0);
    for (uint32_t u = 0; u < n; u++)
        for (uint32_t v = 0; v < n; v++)
            if (g.adjacent(u, v)) adj[u] |= 1u << v;
    uint32_t full = (n >= 32) ? ~0u : (1u << n) - 1;
    bool found = false;
    Rational best{0, 1};
    for (uint32_t s = 1; s < full; s++) { // S = bit set s, S != V, S != empty handled by connectivity
        uint32_t rem = full & ~s;
        if (rem == 0) continue;
        uint32_t comps = 0, left = rem;
        while (left) {
            comps++;
            uint32_t frontier = left & (~left + 1); // lowest set bit
            uint32_t seen = frontier;
            while (frontier) {
                uint32_t next = 0;
                uint32_t f = frontier;
                while (f) {
                    uint32_t u = static_cast<uint32_t>(std::countr_zero(f));
                    f &= f - 1;
                    next |= adj[u] & left;
                }
                frontier = next & ~seen;
                seen |= next;
            }
            left &= ~seen;
        }
        if (comps < 2) continue;
        int64_t cut = std::popcount(s);
        if (!found || cut * best.den < best.num * static_cast<int64_t>(comps)) {
            best = reduced(cut, comps);
            found = true;
        }
    }
    if (!found) res.no_cutset = true;
    else res.t = best;
    return res;
}

// ---------------------------------------------------------------------------
// the four spectral bounds from one certificate

struct BoundsReport {
    double alpha_bound = 0;     // n lambda / d
    double alpha2_bound = 0;    // lambda^2 n^2 / d^2
    double chi_bound = 0;       // d / lambda
    double toughness_bound = 0; // (d^2 / (lambda d + lambda^2) - 1) / 3
};

inline BoundsReport spectral_bounds(const NDLCertificate& c) {
    if (c.lambda >= c.d - 1e-9) throw std::domain_error("spectral_bounds: lambda >= d (degenerate certificate)");
    BoundsReport b;
    double n = c.n, d = c.d, l = c.lambda;
    b.alpha_bound = n * l / d;
    b.alpha2_bound = l * l * n * n / (d * d);
    b.chi_bound = d / l;
    b.toughness_bound = (d * d / (l * d + l * l) - 1.0) / 3.0;
    return b;
}

// alpha(G) <= (4 + o(1)) n^{(k+1)/2k} with n = q^k; the o(1) is instantiated
// per instance: we check against the bare constant 4 and report the
// effective constant alpha_bound / n^{(k+1)/2k}
struct ExplicitBoundCheck {
    double alpha_bound = 0;
    double rhs = 0;
    double effective_constant = 0;
    bool holds = false;
};

inline ExplicitBoundCheck explicit_alpha_bound_check(const NDLCertificate& c, uint32_t dim) {
    ExplicitBoundCheck r;
    double n = c.n;
    double shape = std::pow(n, (dim + 1.0) / (2.0 * dim));
    r.alpha_bound = n * c.lambda / c.d;
    r.rhs = 4.0 * shape;
    r.effective_constant = r.alpha_bound / shape;
    r.holds = r.alpha_bound <= r.rhs;
    return r;
}

// ---------------------------------------------------------------------------
// triangle-free classification scan for one q. A triangle in E_q(2,Q,a) is
// a pair u, v with Q(u) = Q(v) = Q(u+v) = a, whose 2x2 Gram has determinant
// ~ 3; comparing discriminants, such a pair exists in the plane of Q+ iff
// -3 is a square, and in the plane of Q- iff -3 is a non-square. The
// triangle-free family is therefore decided by the character of -3 (q mod
// 3), which agrees with the character of 3 only when -1 is a square. Exact
// counts confirm this at q in {5,7,11,13}: the free family is Q+, Q-, Q+,
// Q- respectively.

struct TriangleFreeEntry {
    std::string tag;
    uint64_t triangles = 0;
    bool expected_free = false;
};

struct TriangleFreeReport {
    uint32_t q = 0;
    bool three_is_square = false;       // quantity in the printed rule
    bool minus_three_is_square = false; // quantity the exact counts follow
    bool printed_rule_agrees = false;   // the two coincide iff -1 is a square
    std::vector<TriangleFreeEntry> euclidean;
    std::vector<TriangleFreeEntry> dim3;
    bool listed_family_free = true;
    bool nonlisted_positive = false;
    bool dim3_existential = false;
};

inline TriangleFreeReport triangle_free_classification(uint32_t q, bool scan_dim3 = true) {
    if (q % 3 == 0) throw std::invalid_argument("triangle_free_classification: q divisible by 3");
    FieldCtx f = FieldCtx::make(parse_prime_power(q).first, parse_prime_power(q).second);
    if (f.q() % 2 == 0) throw std::invalid_argument("triangle_free_classification: odd q expected");
    TriangleFreeReport rep;
    rep.q = q;
    rep.three_is_square = f.is_square(f.from_int(3));
    rep.minus_three_is_square = f.is_square(f.neg(f.from_int(3)));
    rep.printed_rule_agrees = rep.three_is_square == rep.minus_three_is_square;
    FormKind listed = rep.minus_three_is_square ? FormKind::minus_even : FormKind::plus_even;
    for (FormKind kind : {FormKind::plus_even, FormKind::minus_even}) {
        QuadraticForm form = QuadraticForm::make(f, kind, 2);
        for (uint32_t a = 1; a < q; a++) {
            Graph g = build_euclidean(form, {a});
            uint64_t tri = count_triangles(g);
            bool expected = (kind == listed);
            rep.euclidean.push_back({g.family().tag, tri, expected});
            if (expected && tri != 0) rep.listed_family_free = false;
            if (!expected && tri > 0) rep.nonlisted_positive = true;
        }
    }
    if (scan_dim3) {
        // the half-plane graphs V_q(sigma,a) and the m = 1 orthogonal
        // families are the dimension-3 objects at desk scale
        ExtCtx ext = halfplane_ext(f);
        for (uint32_t a = 1; a < q; a++) {
            Graph g = build_halfplane(ext, {a});
            uint64_t tri = count_triangles(g);
            rep.dim3.push_back({g.family().tag, tri, false});
            if (tri == 0) rep.dim3_existential = true;
        }
        QuadraticForm q3 = QuadraticForm::make(f, FormKind::odd_std, 3);
        for (OrthFamily fam : {OrthFamily::odd_theta, OrthFamily::odd_omega}) {
            for (uint32_t i = 1; i <= (q + 1) / 2; i++) {
                Graph g = build_orthogonal(fam, q3, i);
                uint64_t tri = count_triangles(g);
                rep.dim3.push_back({g.family().tag, tri, false});
                if (tri == 0) rep.dim3_existential = true;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Ramsey witnesses: a triangle-free plane graph on q^2 vertices for primes
// q = 12k +- 5, with alpha exact (small q) or bounded by n lambda / d from
// the measured spectrum; either way R(3, alpha + 1) > q^2. The family is
// the triangle-free one for the given q (Q+ when -3 is a non-square, i.e.
// q = 5 mod 12 here; Q- on the q = 7 mod 12 branch, where E_q(2,Q+,a) has
// triangles - see triangle_free_classification).

struct RamseyWitness {
    uint32_t q = 0;
    uint32_t a_index = 1;
    FormKind kind = FormKind::plus_even;
    uint32_t n = 0;
    uint32_t d = 0;
    double lambda = 0;
    uint64_t triangle_count = 0;
    std::string alpha_kind; // "exact" | "spectral_upper_bound"
    double alpha_value = 0;
    std::optional<uint32_t> chi_exact;
    double chi_lower = 0;     // d / lambda
    double chi_threshold = 0; // 0.5 n^{1/4}, reported only
    std::string ramsey_statement;
};

inline RamseyWitness ramsey_witness(uint32_t q, uint32_t a_index = 1, const SearchBudget& budget = {},
                                    bool exact_alpha = false, bool exact_chi = false) {
    if (!is_prime_u64(q)) throw std::invalid_argument("ramsey_witness: q must be prime");
    if (q % 12 != 5 && q % 12 != 7)
        throw std::invalid_argument("ramsey_witness: q = " + std::to_string(q) + " is not of the form 12k +- 5");
    if (a_index == 0 || a_index >= q) throw std::invalid_argument("ramsey_witness: a must be nonzero");

    FieldCtx f = FieldCtx::make(q, 1);
    bool minus_three_square = f.is_square(f.neg(f.from_int(3)));
    FormKind kind = minus_three_square ? FormKind::minus_even : FormKind::plus_even;
    QuadraticForm form = QuadraticForm::make(f, kind, 2);
    Graph g = build_euclidean(form, {a_index});
    RamseyWitness w;
    w.q = q;
    w.a_index = a_index;
    w.kind = kind;
    w.n = g.num_vertices();
    w.triangle_count = count_triangles(g);
    if (w.triangle_count != 0)
        throw std::runtime_error("ramsey_witness: graph unexpectedly has triangles");

    NDLCertificate cert = certify(g);
    w.d = cert.d;
    w.lambda = cert.lambda;
    w.chi_lower = cert.d / cert.lambda;
    w.chi_threshold = 0.5 * std::pow(static_cast<double>(w.n), 0.25);

    uint64_t k;
    if (exact_alpha) {
        SearchResult alpha = independence_exact(g, budget);
        w.alpha_kind = alpha.outcome == SearchOutcome::exact ? "exact" : "best_found_lower_bound";
        w.alpha_value = alpha.value;
        k = alpha.value + 1;
    } else {
        w.alpha_kind = "spectral_upper_bound";
        w.alpha_value = spectral_bounds(cert).alpha_bound;
        k = static_cast<uint64_t>(std::floor(w.alpha_value)) + 1;
    }
    w.ramsey_statement = "R(3," + std::to_string(k) + ") > " + std::to_string(w.n);
    if (exact_chi) {
        SearchResult chi = chromatic_exact(g, budget);
        if (chi.outcome == SearchOutcome::exact) w.chi_exact = chi.value;
    }
    return w;
}

} // namespace fqg
