#pragma once
// Distance sets in F_q^d and H_q, pairwise two-set variants, seeded
// threshold experiments, exhaustive extremal tables at tiny q, and the
// audits of the independence/edge-count mechanisms behind the distance-set
// lower bounds.
//
// Distance conventions: the single-set Delta includes x = y, so 0 is always
// realized; the two-set Delta_Q(E,F) means {Q(x-y)}, with an optional
// bilinear-value variant exposed for comparison without any claim attached.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqgraphs/builders.hpp"
#include "fqgraphs/combinat.hpp"
#include "fqgraphs/ffield.hpp"
#include "fqgraphs/prng.hpp"
#include "fqgraphs/qforms.hpp"
#include "fqgraphs/spectral.hpp"

namespace fqg {

enum class SpaceKind { euclidean, halfplane };

inline const char* space_name(SpaceKind s) { return s == SpaceKind::euclidean ? "euclidean" : "halfplane"; }

struct DistanceReport {
    SpaceKind space = SpaceKind::euclidean;
    uint32_t q = 0, dim = 0;
    uint64_t size_e = 0, size_f = 0; // size_f = 0 for single-set reports
    std::vector<uint32_t> distance_values;
    uint64_t delta_size = 0;
    double threshold = 0;
    bool satisfied = false;
    bool meets_precondition = false;
    bool vacuous = false;
    // halfplane reports also carry |Delta restricted to F_q - {0, 4 sigma}|
    uint64_t delta_excluding_special = 0;
};

namespace detail {

inline void finish_report(DistanceReport& rep, std::set<uint32_t>&& values, double thr_num, double thr_cap,
                          double precond_lhs, double precond_rhs) {
    rep.distance_values.assign(values.begin(), values.end());
    rep.delta_size = rep.distance_values.size();
    rep.threshold = std::min(thr_num, thr_cap);
    rep.satisfied = static_cast<double>(rep.delta_size) + 1e-9 >= rep.threshold;
    rep.meets_precondition = precond_lhs >= precond_rhs;
    rep.vacuous = rep.threshold <= 1.0; // |Delta| >= 1 holds for any non-empty set
}

} // namespace detail

// Delta_Q(E) = {Q(x - y) : x, y in E}, x = y included
inline DistanceReport distance_set(const QuadraticForm& form, const std::vector<uint32_t>& members) {
    const FieldCtx& f = form.ctx();
    uint32_t q = f.q(), dim = form.dim();
    uint64_t universe = space_size(q, dim);
    DistanceReport rep;
    rep.space = SpaceKind::euclidean;
    rep.q = q;
    rep.dim = dim;
    rep.size_e = members.size();
    std::vector<std::vector<FieldElem>> pts(members.size(), std::vector<FieldElem>(dim));
    for (size_t i = 0; i < members.size(); i++) {
        if (members[i] >= universe) throw std::invalid_argument("distance_set: point outside the space");
        decode_vindex(members[i], q, dim, pts[i].data());
    }
    std::set<uint32_t> vals;
    std::vector<FieldElem> diff(dim);
    for (size_t i = 0; i < pts.size(); i++)
        for (size_t j = i; j < pts.size(); j++) {
            for (uint32_t c = 0; c < dim; c++) diff[c] = f.sub(pts[i][c], pts[j][c]);
            vals.insert(form.eval(diff).idx);
        }
    double e = static_cast<double>(members.size());
    detail::finish_report(rep, std::move(vals), e / (3.0 * std::pow(q, (dim - 1) / 2.0)), q, e,
                          3.0 * std::pow(q, dim / 2.0));
    return rep;
}

// Delta_H(E) = {d(x,y) : x, y in E} on half-plane point indices
inline DistanceReport distance_set_halfplane(const ExtCtx& ext, const std::vector<uint32_t>& members) {
    const FieldCtx& f = ext.base();
    uint32_t q = f.q();
    HalfPlane hp{ext};
    DistanceReport rep;
    rep.space = SpaceKind::halfplane;
    rep.q = q;
    rep.dim = 2;
    rep.size_e = members.size();
    std::vector<ExtElem> pts(members.size());
    for (size_t i = 0; i < members.size(); i++) {
        if (members[i] >= hp.num_points()) throw std::invalid_argument("distance_set_halfplane: bad point index");
        pts[i] = hp.point(members[i]);
    }
    std::set<uint32_t> vals;
    for (size_t i = 0; i < pts.size(); i++)
        for (size_t j = i; j < pts.size(); j++) vals.insert(hp.distance(pts[i], pts[j]).idx);
    double e = static_cast<double>(members.size());
    detail::finish_report(rep, std::move(vals), e / (3.0 * std::sqrt(q)), q - 1.0, e, 3.0 * std::sqrt(q));
    uint32_t four_sigma = f.mul(f.from_int(4), ext.sigma()).idx;
    for (uint32_t v : rep.distance_values)
        if (v != 0 && v != four_sigma) rep.delta_excluding_special++;
    return rep;
}

// Delta_Q(E,F) = {Q(x-y) : x in E, y in F}; set use_bilinear to compute the
// <x,y> variant instead (comparison only)
inline DistanceReport distance_set_pair(const QuadraticForm& form, const std::vector<uint32_t>& e_members,
                                        const std::vector<uint32_t>& f_members, bool use_bilinear = false) {
    const FieldCtx& f = form.ctx();
    uint32_t q = f.q(), dim = form.dim();
    uint64_t universe = space_size(q, dim);
    DistanceReport rep;
    rep.space = SpaceKind::euclidean;
    rep.q = q;
    rep.dim = dim;
    rep.size_e = e_members.size();
    rep.size_f = f_members.size();
    auto decode_all = [&](const std::vector<uint32_t>& ms) {
        std::vector<std::vector<FieldElem>> pts(ms.size(), std::vector<FieldElem>(dim));
        for (size_t i = 0; i < ms.size(); i++) {
            if (ms[i] >= universe) throw std::invalid_argument("distance_set_pair: point outside the space");
            decode_vindex(ms[i], q, dim, pts[i].data());
        }
        return pts;
    };
    auto pe = decode_all(e_members), pf = decode_all(f_members);
    std::set<uint32_t> vals;
    std::vector<FieldElem> diff(dim);
    for (const auto& x : pe)
        for (const auto& y : pf) {
            if (use_bilinear) {
                vals.insert(form.bilinear(x, y).idx);
            } else {
                for (uint32_t c = 0; c < dim; c++) diff[c] = f.sub(x[c], y[c]);
                vals.insert(form.eval(diff).idx);
            }
        }
    double prod = static_cast<double>(e_members.size()) * static_cast<double>(f_members.size());
    detail::finish_report(rep, std::move(vals), std::sqrt(prod) / (3.0 * std::pow(q, (dim - 1) / 2.0)), q, prod,
                          9.0 * std::pow(q, dim - 1.0));
    return rep;
}

inline DistanceReport distance_set_pair_halfplane(const ExtCtx& ext, const std::vector<uint32_t>& e_members,
                                                  const std::vector<uint32_t>& f_members) {
    const FieldCtx& f = ext.base();
    uint32_t q = f.q();
    HalfPlane hp{ext};
    DistanceReport rep;
    rep.space = SpaceKind::halfplane;
    rep.q = q;
    rep.dim = 2;
    rep.size_e = e_members.size();
    rep.size_f = f_members.size();
    std::set<uint32_t> vals;
    for (uint32_t ei : e_members)
        for (uint32_t fi : f_members) {
            if (ei >= hp.num_points() || fi >= hp.num_points())
                throw std::invalid_argument("distance_set_pair_halfplane: bad point index");
            vals.insert(hp.distance(hp.point(ei), hp.point(fi)).idx);
        }
    double prod = static_cast<double>(e_members.size()) * static_cast<double>(f_members.size());
    detail::finish_report(rep, std::move(vals), std::sqrt(prod) / (3.0 * std::sqrt(q)), q - 1.0, prod, 9.0 * q);
    uint32_t four_sigma = f.mul(f.from_int(4), ext.sigma()).idx;
    for (uint32_t v : rep.distance_values)
        if (v != 0 && v != four_sigma) rep.delta_excluding_special++;
    return rep;
}

// ---------------------------------------------------------------------------
// seeded experiments

enum class SampleMode { uniform, adversarial_line, adversarial_ball };

inline const char* sample_mode_name(SampleMode m) {
    switch (m) {
        case SampleMode::uniform: return "uniform";
        case SampleMode::adversarial_line: return "adversarial-line";
        case SampleMode::adversarial_ball: return "adversarial-ball";
    }
    return "?";
}

inline SampleMode sample_mode_from_name(const std::string& s) {
    for (SampleMode m : {SampleMode::uniform, SampleMode::adversarial_line, SampleMode::adversarial_ball})
        if (s == sample_mode_name(m)) return m;
    throw std::invalid_argument("unknown sampling mode: " + s);
}

struct ExperimentConfig {
    SpaceKind space = SpaceKind::euclidean;
    uint32_t q = 3;
    uint32_t dim = 2;                     // ignored for halfplane
    FormKind kind = FormKind::plus_even;  // ignored for halfplane
    std::vector<uint32_t> sizes;
    uint32_t trials = 100;
    uint64_t master_seed = 1;
    SampleMode mode = SampleMode::uniform;
};

struct TrialRow {
    uint32_t size = 0, trial = 0;
    uint64_t seed = 0;
    uint64_t delta_size = 0;
    double threshold = 0;
    bool satisfied = false;
    bool meets_precondition = false;
    bool vacuous = false;
};

struct SizeSummary {
    uint32_t size = 0;
    uint64_t min_delta = 0, max_delta = 0;
    double mean_delta = 0;
    double frac_satisfied = 0;
};

struct ExperimentReport {
    ExperimentConfig cfg;
    uint64_t universe = 0;
    std::vector<TrialRow> rows;
    std::vector<SizeSummary> summaries;
};

namespace detail {

// a translate of a random 1-dimensional direction, extended with parallel
// lines until s points are available
inline std::vector<uint32_t> sample_line(SplitMix64& g, const FieldCtx& f, uint32_t q, uint32_t dim, uint32_t s) {
    uint64_t universe = space_size(q, dim);
    std::vector<FieldElem> v(dim), c(dim), pt(dim);
    uint64_t dir = 1 + g.below(universe - 1);
    decode_vindex(dir, q, dim, v.data());
    std::set<uint32_t> pts;
    while (pts.size() < s) {
        decode_vindex(g.below(universe), q, dim, c.data());
        for (uint32_t t = 0; t < q && pts.size() < s; t++) {
            for (uint32_t i = 0; i < dim; i++) pt[i] = f.add(c[i], f.mul({t}, v[i]));
            pts.insert(static_cast<uint32_t>(encode_vindex(pt, q)));
        }
    }
    return {pts.begin(), pts.end()};
}

// complete spheres around a random center, in field-value order, truncated
// to s points
inline std::vector<uint32_t> sample_ball(SplitMix64& g, const QuadraticForm& form, uint32_t s) {
    const FieldCtx& f = form.ctx();
    uint32_t q = f.q(), dim = form.dim();
    uint64_t universe = space_size(q, dim);
    std::vector<FieldElem> c(dim), x(dim), diff(dim);
    decode_vindex(g.below(universe), q, dim, c.data());
    std::vector<std::vector<uint32_t>> shells(q);
    for (uint64_t v = 0; v < universe; v++) {
        decode_vindex(v, q, dim, x.data());
        for (uint32_t i = 0; i < dim; i++) diff[i] = f.sub(x[i], c[i]);
        shells[form.eval(diff).idx].push_back(static_cast<uint32_t>(v));
    }
    std::vector<uint32_t> out;
    for (uint32_t val = 0; val < q && out.size() < s; val++)
        for (uint32_t v : shells[val]) {
            if (out.size() >= s) break;
            out.push_back(v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<uint32_t> sample_halfplane_line(SplitMix64& g, uint32_t q, uint32_t s) {
    // horizontal rows y = const, extended row by row
    std::set<uint32_t> pts;
    while (pts.size() < s) {
        uint32_t y = 1 + static_cast<uint32_t>(g.below(q - 1));
        for (uint32_t x = 0; x < q && pts.size() < s; x++) pts.insert((y - 1) * q + x);
    }
    return {pts.begin(), pts.end()};
}

inline std::vector<uint32_t> sample_halfplane_ball(SplitMix64& g, const ExtCtx& ext, uint32_t s) {
    uint32_t q = ext.base().q();
    HalfPlane hp{ext};
    uint32_t n = hp.num_points();
    uint32_t center = static_cast<uint32_t>(g.below(n));
    ExtElem zc = hp.point(center);
    std::vector<std::vector<uint32_t>> shells(q);
    for (uint32_t v = 0; v < n; v++) shells[hp.distance(hp.point(v), zc).idx].push_back(v);
    std::vector<uint32_t> out;
    for (uint32_t val = 0; val < q && out.size() < s; val++)
        for (uint32_t v : shells[val]) {
            if (out.size() >= s) break;
            out.push_back(v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_experiment: trials >= 1 required");
    auto [p, r] = parse_prime_power(cfg.q);
    FieldCtx f = FieldCtx::make(p, r);
    ExperimentReport rep;
    rep.cfg = cfg;

    std::optional<QuadraticForm> form;
    std::optional<ExtCtx> ext;
    if (cfg.space == SpaceKind::euclidean) {
        form = QuadraticForm::make(f, cfg.kind, cfg.dim);
        rep.universe = space_size(cfg.q, cfg.dim);
    } else {
        ext = halfplane_ext(f);
        rep.universe = static_cast<uint64_t>(cfg.q) * (cfg.q - 1);
    }

    for (uint32_t s : cfg.sizes) {
        if (s < 1 || s > rep.universe) throw std::invalid_argument("run_experiment: size outside universe");
        SizeSummary sum;
        sum.size = s;
        sum.min_delta = ~0ull;
        uint64_t total = 0, sat = 0;
        for (uint32_t t = 0; t < cfg.trials; t++) {
            uint64_t seed = derive_seed(cfg.master_seed, s, t);
            SplitMix64 g(seed);
            std::vector<uint32_t> members;
            if (cfg.space == SpaceKind::euclidean) {
                switch (cfg.mode) {
                    case SampleMode::uniform:
                        members = sample_subset(g, static_cast<uint32_t>(rep.universe), s);
                        break;
                    case SampleMode::adversarial_line:
                        members = detail::sample_line(g, f, cfg.q, cfg.dim, s);
                        break;
                    case SampleMode::adversarial_ball:
                        members = detail::sample_ball(g, *form, s);
                        break;
                }
            } else {
                switch (cfg.mode) {
                    case SampleMode::uniform:
                        members = sample_subset(g, static_cast<uint32_t>(rep.universe), s);
                        break;
                    case SampleMode::adversarial_line:
                        members = detail::sample_halfplane_line(g, cfg.q, s);
                        break;
                    case SampleMode::adversarial_ball:
                        members = detail::sample_halfplane_ball(g, *ext, s);
                        break;
                }
            }
            DistanceReport dr = (cfg.space == SpaceKind::euclidean) ? distance_set(*form, members)
                                                                    : distance_set_halfplane(*ext, members);
            TrialRow row{s, t, seed, dr.delta_size, dr.threshold, dr.satisfied, dr.meets_precondition, dr.vacuous};
            rep.rows.push_back(row);
            sum.min_delta = std::min(sum.min_delta, dr.delta_size);
            sum.max_delta = std::max(sum.max_delta, dr.delta_size);
            total += dr.delta_size;
            if (dr.satisfied) sat++;
        }
        sum.mean_delta = static_cast<double>(total) / cfg.trials;
        sum.frac_satisfied = static_cast<double>(sat) / cfg.trials;
        rep.summaries.push_back(sum);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// exhaustive extremal tables: min/max |Delta| over ALL subsets of each size

struct ExhaustiveRow {
    uint32_t size = 0;
    uint64_t subsets = 0;
    uint64_t min_delta = 0, max_delta = 0;
};

namespace detail {

template <typename DeltaFn>
inline std::vector<ExhaustiveRow> exhaustive_table(uint32_t universe, uint32_t max_size, DeltaFn&& delta_of,
                                                   uint64_t subset_limit) {
    std::vector<ExhaustiveRow> rows;
    for (uint32_t s = 1; s <= max_size && s <= universe; s++) {
        // C(universe, s) with overflow-safe early exit
        long double cnt = 1;
        for (uint32_t i = 0; i < s; i++) cnt = cnt * (universe - i) / (i + 1);
        if (cnt > static_cast<long double>(subset_limit))
            throw std::invalid_argument("exhaustive table: too many subsets at size " + std::to_string(s));
        ExhaustiveRow row;
        row.size = s;
        row.min_delta = ~0ull;
        std::vector<uint32_t> comb(s);
        for (uint32_t i = 0; i < s; i++) comb[i] = i;
        while (true) {
            uint64_t d = delta_of(comb);
            row.subsets++;
            row.min_delta = std::min(row.min_delta, d);
            row.max_delta = std::max(row.max_delta, d);
            // next combination, lexicographic
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && comb[i] == universe - s + i) i--;
            if (i < 0) break;
            comb[i]++;
            for (uint32_t j = i + 1; j < s; j++) comb[j] = comb[j - 1] + 1;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace detail

inline std::vector<ExhaustiveRow> exhaustive_extremal_table(const QuadraticForm& form, uint32_t max_size,
                                                            uint64_t subset_limit = 10'000'000) {
    uint32_t universe = static_cast<uint32_t>(space_size(form.ctx().q(), form.dim()));
    return detail::exhaustive_table(
        universe, max_size, [&](const std::vector<uint32_t>& comb) { return distance_set(form, comb).delta_size; },
        subset_limit);
}

inline std::vector<ExhaustiveRow> exhaustive_extremal_table_halfplane(const ExtCtx& ext, uint32_t max_size,
                                                                      uint64_t subset_limit = 10'000'000) {
    uint32_t universe = ext.base().q() * (ext.base().q() - 1);
    return detail::exhaustive_table(
        universe, max_size,
        [&](const std::vector<uint32_t>& comb) { return distance_set_halfplane(ext, comb).delta_size; },
        subset_limit);
}

// ---------------------------------------------------------------------------
// mechanism audits: the independence bounds and edge-count inequalities the
// distance-set lower bounds run on, instance by instance

struct AlphaCheck {
    std::string graph_tag;
    std::string alpha_kind; // "exact" | "spectral_upper_bound"
    double alpha_value = 0;
    double bound = 0;
    bool vacuous = false; // bound >= number of vertices
    bool holds = false;
};

struct InequalityAudit {
    std::string which; // "induced" or "pair"
    std::string graph_tag;
    uint64_t samples = 0;
    double max_violation = 0; // max over samples of (measured - allowed)
    bool holds = false;
};

struct LemmaReport {
    SpaceKind space = SpaceKind::euclidean;
    uint32_t q = 0, dim = 0;
    std::vector<AlphaCheck> alpha_checks;
    std::vector<AlphaCheck> alpha2_checks;
    std::vector<InequalityAudit> induced_audits;
    std::vector<InequalityAudit> pair_audits;
    bool all_hold = true;
};

namespace detail {

inline std::vector<uint64_t> random_mask(SplitMix64& g, uint32_t n, uint64_t& count) {
    auto m = make_mask(n);
    count = 0;
    for (uint32_t v = 0; v < n; v++)
        if (g.coin()) {
            mask_set(m, v);
            count++;
        }
    return m;
}

} // namespace detail

inline LemmaReport verify_lemma_mechanisms_euclidean(uint32_t q, uint32_t dim, FormKind kind,
                                                     uint32_t samples = 500, uint64_t seed = 1) {
    auto [p, r] = parse_prime_power(q);
    FieldCtx f = FieldCtx::make(p, r);
    QuadraticForm form = QuadraticForm::make(f, kind, dim);
    LemmaReport rep;
    rep.space = SpaceKind::euclidean;
    rep.q = q;
    rep.dim = dim;
    double dhalf = (dim - 1) / 2.0;
    double edge_coef = (std::pow(q, dim - 1.0) + std::pow(q, dhalf)) / (2.0 * std::pow(q, static_cast<double>(dim)));
    double pair_coef = 2.0 * edge_coef;

    for (uint32_t a = 1; a < q; a++) {
        Graph g = build_euclidean(form, {a});
        uint32_t n = g.num_vertices();
        NDLCertificate cert = certify_with(g, spectrum_charsum(form, {a}));

        AlphaCheck ac;
        ac.graph_tag = g.family().tag;
        ac.bound = 3.0 * std::pow(q, (dim + 1) / 2.0);
        ac.vacuous = ac.bound >= n;
        if (n <= 256) {
            SearchResult alpha = independence_exact(g);
            ac.alpha_kind = "exact";
            ac.alpha_value = alpha.value;
        } else {
            ac.alpha_kind = "spectral_upper_bound";
            ac.alpha_value = static_cast<double>(n) * cert.lambda / cert.d;
        }
        ac.holds = ac.alpha_value <= ac.bound + 1e-9;
        rep.alpha_checks.push_back(ac);

        AlphaCheck a2;
        a2.graph_tag = g.family().tag;
        a2.alpha_kind = "spectral_upper_bound";
        a2.alpha_value = std::pow(static_cast<double>(n) * cert.lambda / cert.d, 2.0);
        a2.bound = 9.0 * std::pow(q, dim + 1.0);
        a2.vacuous = a2.bound >= static_cast<double>(n) * n;
        a2.holds = a2.alpha_value <= a2.bound + 1e-9;
        rep.alpha2_checks.push_back(a2);

        InequalityAudit ind{"induced", g.family().tag, 0, 0, true};
        InequalityAudit pair{"pair", g.family().tag, 0, 0, true};
        SplitMix64 rng(derive_seed(seed, q * 1000 + dim, a));
        for (uint32_t t = 0; t < samples; t++) {
            uint64_t cb = 0, cc = 0;
            auto mb = detail::random_mask(rng, n, cb);
            double e_in = 0;
            for (uint32_t v = 0; v < n; v++)
                if (mask_test(mb, v)) e_in += intersect_count(g.row(v), mb);
            e_in /= 2;
            double allowed = edge_coef * static_cast<double>(cb) * cb + std::pow(q, dhalf) * cb;
            ind.samples++;
            ind.max_violation = std::max(ind.max_violation, e_in - allowed);

            auto mc = detail::random_mask(rng, n, cc);
            double e_pair = 0;
            for (uint32_t v = 0; v < n; v++)
                if (mask_test(mb, v)) e_pair += intersect_count(g.row(v), mc);
            double allowed_pair = pair_coef * static_cast<double>(cb) * cc +
                                  2.0 * std::pow(q, dhalf) * std::sqrt(static_cast<double>(cb) * cc);
            pair.samples++;
            pair.max_violation = std::max(pair.max_violation, e_pair - allowed_pair);
        }
        ind.holds = ind.max_violation <= 1e-9;
        pair.holds = pair.max_violation <= 1e-9;
        rep.induced_audits.push_back(ind);
        rep.pair_audits.push_back(pair);
    }
    for (const auto& c : rep.alpha_checks) rep.all_hold = rep.all_hold && c.holds;
    for (const auto& c : rep.alpha2_checks) rep.all_hold = rep.all_hold && c.holds;
    for (const auto& c : rep.induced_audits) rep.all_hold = rep.all_hold && c.holds;
    for (const auto& c : rep.pair_audits) rep.all_hold = rep.all_hold && c.holds;
    return rep;
}

inline LemmaReport verify_lemma_mechanisms_halfplane(uint32_t q, uint32_t samples = 500, uint64_t seed = 1) {
    auto [p, r] = parse_prime_power(q);
    FieldCtx f = FieldCtx::make(p, r);
    ExtCtx ext = halfplane_ext(f);
    LemmaReport rep;
    rep.space = SpaceKind::halfplane;
    rep.q = q;
    rep.dim = 2;
    uint32_t four_sigma = f.mul(f.from_int(4), ext.sigma()).idx;
    for (uint32_t a = 1; a < q; a++) {
        if (a == four_sigma) continue;
        Graph g = build_halfplane(ext, {a});
        uint32_t n = g.num_vertices();
        NDLCertificate cert = certify(g);

        AlphaCheck ac;
        ac.graph_tag = g.family().tag;
        ac.bound = 2.0 * std::pow(q, 1.5);
        ac.vacuous = ac.bound >= n;
        SearchResult alpha = independence_exact(g);
        ac.alpha_kind = "exact";
        ac.alpha_value = alpha.value;
        ac.holds = ac.alpha_value <= ac.bound + 1e-9;
        rep.alpha_checks.push_back(ac);

        InequalityAudit ind{"induced", g.family().tag, 0, 0, true};
        double coef = (q + 1.0) / (2.0 * (static_cast<double>(q) * q - q));
        SplitMix64 rng(derive_seed(seed, q, a));
        for (uint32_t t = 0; t < samples; t++) {
            uint64_t cb = 0;
            auto mb = detail::random_mask(rng, n, cb);
            double e_in = 0;
            for (uint32_t v = 0; v < n; v++)
                if (mask_test(mb, v)) e_in += intersect_count(g.row(v), mb);
            e_in /= 2;
            double allowed = coef * static_cast<double>(cb) * cb + std::sqrt(static_cast<double>(q)) * cb;
            ind.samples++;
            ind.max_violation = std::max(ind.max_violation, e_in - allowed);
        }
        ind.holds = ind.max_violation <= 1e-9;
        rep.induced_audits.push_back(ind);
    }
    for (const auto& c : rep.alpha_checks) rep.all_hold = rep.all_hold && c.holds;
    for (const auto& c : rep.induced_audits) rep.all_hold = rep.all_hold && c.holds;
    return rep;
}

} // namespace fqg
