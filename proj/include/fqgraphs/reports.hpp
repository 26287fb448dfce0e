#pragma once
// JSON and CSV serialization for every report type. Key order is
// alphabetical (nlohmann::json's default map) and floating-point fields use
// the shortest round-trip form, so identical inputs give byte-identical
// output.

#include <bit>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "fqgraphs/combinat.hpp"
#include "fqgraphs/distance.hpp"
#include "fqgraphs/ffield.hpp"
#include "fqgraphs/graph.hpp"
#include "fqgraphs/qforms.hpp"
#include "fqgraphs/spectral.hpp"

namespace fqg {

using json = nlohmann::json;

inline json field_to_json(const FieldCtx& f) {
    json j;
    j["p"] = f.p();
    j["r"] = f.r();
    j["q"] = f.q();
    j["modulus"] = f.modulus();
    j["primitive_element"] = f.primitive_element().idx;
    uint32_t squares = 0;
    for (uint32_t a = 1; a < f.q(); a++)
        if (f.is_square({a})) squares++;
    j["nonzero_squares"] = squares;
    return j;
}

inline json form_to_json(const QuadraticForm& form, bool with_spheres = true) {
    json j;
    j["q"] = form.ctx().q();
    j["dim"] = form.dim();
    j["kind"] = form_kind_name(form.kind());
    j["name"] = form.name();
    if (form.kind() == FormKind::minus_even || form.kind() == FormKind::odd_prime)
        j["alpha"] = form.param().idx;
    if (form.kind() == FormKind::even_char_minus) j["beta"] = form.param().idx;
    if (form.ctx().q() % 2 == 1) {
        GramMatrix g = form.gram();
        json rows = json::array();
        for (uint32_t i = 0; i < g.dim; i++) {
            json row = json::array();
            for (uint32_t c = 0; c < g.dim; c++) row.push_back(g.at(i, c).idx);
            rows.push_back(row);
        }
        j["gram"] = rows;
        j["rank"] = g.rank(form.ctx());
        j["nondegenerate"] = is_nondegenerate(form);
    }
    if (with_spheres) {
        j["sphere_sizes"] = sphere_counts(form);
        j["sphere_predictions_nonzero_a"] = sphere_predictions(form);
    }
    return j;
}

inline json graph_to_json(const Graph& g) {
    json j;
    j["family_tag"] = g.family().tag;
    j["n"] = g.num_vertices();
    j["labels"] = g.labels();
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    return j;
}

// one vertex per line: `index: neighbor indices`
inline std::string graph_to_adjlist(const Graph& g) {
    std::string out;
    for (uint32_t u = 0; u < g.num_vertices(); u++) {
        out += std::to_string(u);
        out += ":";
        auto r = g.row(u);
        for (size_t w = 0; w < r.size(); w++) {
            uint64_t word = r[w];
            while (word) {
                uint32_t v = static_cast<uint32_t>(w * 64 + std::countr_zero(word));
                word &= word - 1;
                out += " " + std::to_string(v);
            }
        }
        out += "\n";
    }
    return out;
}

inline json certificate_to_json(const NDLCertificate& c) {
    json j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["lambda"] = c.lambda;
    if (c.bound) j["bound"] = *c.bound;
    else j["bound"] = nullptr;
    switch (c.status) {
        case CertStatus::passed: j["pass"] = true; break;
        case CertStatus::failed: j["pass"] = false; break;
        case CertStatus::not_applicable: j["pass"] = nullptr; break;
    }
    j["connected"] = c.connected;
    j["d_multiplicity"] = c.d_multiplicity;
    j["family_tag"] = c.family_tag;
    j["source"] = c.source == SpectrumSource::dense ? "dense" : "charsum";
    return j;
}

inline json mixing_to_json(const MixingReport& m) {
    json j;
    j["size_b"] = m.size_b;
    j["size_c"] = m.size_c;
    j["edges"] = m.edges;
    j["expected"] = m.expected;
    j["bound"] = m.bound;
    j["deviation"] = m.deviation;
    j["holds"] = m.holds;
    return j;
}

inline json witness_to_json(const RamseyWitness& w) {
    json j;
    j["q"] = w.q;
    j["a"] = w.a_index;
    j["kind"] = form_kind_name(w.kind);
    j["n"] = w.n;
    j["d"] = w.d;
    j["lambda"] = w.lambda;
    j["triangle_count"] = w.triangle_count;
    j["alpha_kind"] = w.alpha_kind;
    j["alpha_value"] = w.alpha_value;
    j["chi_lower"] = w.chi_lower;
    j["chi_threshold_half_n_quarter"] = w.chi_threshold;
    if (w.chi_exact) j["chi_exact"] = *w.chi_exact;
    j["ramsey_statement"] = w.ramsey_statement;
    return j;
}

inline json distance_report_to_json(const DistanceReport& r) {
    json j;
    j["space"] = space_name(r.space);
    j["q"] = r.q;
    j["d"] = r.dim;
    j["size_e"] = r.size_e;
    if (r.size_f) j["size_f"] = r.size_f;
    j["distance_set"] = r.distance_values;
    j["delta_size"] = r.delta_size;
    j["threshold"] = r.threshold;
    j["satisfied"] = r.satisfied;
    j["meets_precondition"] = r.meets_precondition;
    j["vacuous"] = r.vacuous;
    if (r.space == SpaceKind::halfplane) j["delta_excluding_special"] = r.delta_excluding_special;
    return j;
}

inline json experiment_config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["space"] = space_name(cfg.space);
    j["q"] = cfg.q;
    j["d"] = cfg.dim;
    if (cfg.space == SpaceKind::euclidean) j["kind"] = form_kind_name(cfg.kind);
    j["sizes"] = cfg.sizes;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.master_seed;
    j["mode"] = sample_mode_name(cfg.mode);
    return j;
}

inline json experiment_to_json(const ExperimentReport& rep) {
    json j;
    j["config"] = experiment_config_to_json(rep.cfg);
    j["universe"] = rep.universe;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["size"] = r.size;
        row["trial"] = r.trial;
        row["seed"] = r.seed;
        row["delta_size"] = r.delta_size;
        row["threshold"] = r.threshold;
        row["satisfied"] = r.satisfied;
        row["meets_precondition"] = r.meets_precondition;
        row["vacuous"] = r.vacuous;
        rows.push_back(row);
    }
    j["rows"] = rows;
    json sums = json::array();
    for (const auto& s : rep.summaries) {
        json sum;
        sum["size"] = s.size;
        sum["min_delta"] = s.min_delta;
        sum["max_delta"] = s.max_delta;
        sum["mean_delta"] = s.mean_delta;
        sum["frac_satisfied"] = s.frac_satisfied;
        sums.push_back(sum);
    }
    j["summaries"] = sums;
    return j;
}

namespace detail {
inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}
} // namespace detail

inline std::string experiment_to_csv(const ExperimentReport& rep) {
    std::string out = "space,q,d,size,trial,seed,delta_size,threshold,satisfied\n";
    for (const auto& r : rep.rows) {
        out += space_name(rep.cfg.space);
        out += "," + std::to_string(rep.cfg.q);
        out += "," + std::to_string(rep.cfg.space == SpaceKind::euclidean ? rep.cfg.dim : 2);
        out += "," + std::to_string(r.size);
        out += "," + std::to_string(r.trial);
        out += "," + std::to_string(r.seed);
        out += "," + std::to_string(r.delta_size);
        out += "," + detail::fmt_double(r.threshold);
        out += ",";
        out += (r.satisfied ? "1" : "0");
        out += "\n";
    }
    return out;
}

inline std::string exhaustive_to_csv(SpaceKind space, uint32_t q, uint32_t dim, const std::string& kind,
                                     const std::vector<ExhaustiveRow>& rows) {
    std::string out = "space,q,d,kind,size,subsets,min_delta,max_delta\n";
    for (const auto& r : rows) {
        out += space_name(space);
        out += "," + std::to_string(q);
        out += "," + std::to_string(dim);
        out += "," + kind;
        out += "," + std::to_string(r.size);
        out += "," + std::to_string(r.subsets);
        out += "," + std::to_string(r.min_delta);
        out += "," + std::to_string(r.max_delta);
        out += "\n";
    }
    return out;
}

inline json lemma_report_to_json(const LemmaReport& rep) {
    json j;
    j["space"] = space_name(rep.space);
    j["q"] = rep.q;
    j["d"] = rep.dim;
    auto alpha_json = [](const std::vector<AlphaCheck>& cs) {
        json arr = json::array();
        for (const auto& c : cs) {
            json e;
            e["graph"] = c.graph_tag;
            e["alpha_kind"] = c.alpha_kind;
            e["alpha_value"] = c.alpha_value;
            e["bound"] = c.bound;
            e["vacuous"] = c.vacuous;
            e["holds"] = c.holds;
            arr.push_back(e);
        }
        return arr;
    };
    j["alpha_checks"] = alpha_json(rep.alpha_checks);
    j["alpha2_checks"] = alpha_json(rep.alpha2_checks);
    auto audit_json = [](const std::vector<InequalityAudit>& as) {
        json arr = json::array();
        for (const auto& a : as) {
            json e;
            e["which"] = a.which;
            e["graph"] = a.graph_tag;
            e["samples"] = a.samples;
            e["max_violation"] = a.max_violation;
            e["holds"] = a.holds;
            arr.push_back(e);
        }
        return arr;
    };
    j["induced_audits"] = audit_json(rep.induced_audits);
    j["pair_audits"] = audit_json(rep.pair_audits);
    j["all_hold"] = rep.all_hold;
    return j;
}

inline json bounds_to_json(const BoundsReport& b) {
    json j;
    j["alpha_bound"] = b.alpha_bound;
    j["alpha2_bound"] = b.alpha2_bound;
    j["chi_bound"] = b.chi_bound;
    j["toughness_bound"] = b.toughness_bound;
    return j;
}

} // namespace fqg
