#pragma once
// Command-line front end. Exit codes: 0 success, 1 check failure, 2
// usage/parameter error. Every report embeds its full configuration; the
// timestamp lives in a separate "meta" object that --no-meta removes so
// outputs can be compared byte for byte.

#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fqgraphs/acceptance.hpp"
#include "fqgraphs/builders.hpp"
#include "fqgraphs/combinat.hpp"
#include "fqgraphs/distance.hpp"
#include "fqgraphs/reports.hpp"
#include "fqgraphs/spectral.hpp"

namespace fqg {

namespace cli_detail {

struct OutputSink {
    std::string path; // empty = stdout
    bool with_meta = true;

    void write(json j, std::ostream& fallback) const {
        if (with_meta) {
            std::time_t now = std::time(nullptr);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            j["meta"] = json{{"generated_at", buf}};
        }
        write_text(j.dump(2) + "\n", fallback);
    }

    void write_text(const std::string& text, std::ostream& fallback) const {
        if (path.empty()) {
            fallback << text;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot open output file: " + path);
            out << text;
        }
    }
};

inline FieldCtx field_from_q(uint64_t q) {
    auto [p, r] = parse_prime_power(q);
    return FieldCtx::make(p, r);
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    using cli_detail::OutputSink;
    CLI::App app{"finite Euclidean and non-Euclidean graphs over F_q: construction, spectral "
                 "certification, combinatorial bounds, distance-set experiments"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    bool no_meta = false;
    app.add_flag("--no-meta", no_meta, "omit the timestamp metadata (comparison mode)");

    // field
    auto* c_field = app.add_subcommand("field", "print a GF(p^r) context summary");
    uint64_t f_p = 0, f_r = 1;
    std::string f_out;
    c_field->add_option("--p", f_p, "prime characteristic")->required();
    c_field->add_option("--r", f_r, "extension degree");
    c_field->add_option("--out", f_out, "output file (default stdout)");

    // form
    auto* c_form = app.add_subcommand("form", "print a quadratic form with Gram matrix and sphere table");
    uint64_t fo_q = 0;
    std::string fo_kind = "plus_even", fo_out;
    uint32_t fo_dim = 2;
    c_form->add_option("--q", fo_q, "field size (prime power)")->required();
    c_form->add_option("--kind", fo_kind, "form kind (plus_even, minus_even, odd_std, odd_prime, ...)");
    c_form->add_option("--dim", fo_dim, "dimension");
    c_form->add_option("--out", fo_out, "output file");

    // graph
    auto* c_graph = app.add_subcommand("graph", "build a graph family member, optionally certify it");
    std::string g_family, g_kind = "plus_even", g_out, g_adjlist;
    uint64_t g_q = 0;
    uint32_t g_d = 2, g_a = 1, g_i = 1, g_k = 2, g_m = 1;
    bool g_certify = false;
    uint64_t g_ceiling = kDefaultVertexCeiling;
    c_graph->add_option("--family", g_family,
                        "euclidean | halfplane | odd_theta | odd_omega | even_plus | even_minus | bch | alon")
        ->required();
    c_graph->add_option("--q", g_q, "field size");
    c_graph->add_option("--d", g_d, "dimension (euclidean)");
    c_graph->add_option("--kind", g_kind, "form kind (euclidean)");
    c_graph->add_option("--a", g_a, "distance value index");
    c_graph->add_option("--i", g_i, "orthogonal class index, 1..(q+1)/2");
    c_graph->add_option("--m", g_m, "orthogonal parameter m");
    c_graph->add_option("--k", g_k, "code graph parameter k");
    c_graph->add_option("--ceiling", g_ceiling, "vertex ceiling");
    c_graph->add_flag("--certify", g_certify, "attach an (n,d,lambda) certificate");
    c_graph->add_option("--out", g_out, "output file");
    c_graph->add_option("--adjlist", g_adjlist, "also write the adjacency-list text format here");

    // ramsey
    auto* c_ramsey = app.add_subcommand("ramsey", "build a triangle-free Ramsey witness");
    uint64_t r_q = 0;
    uint32_t r_a = 1;
    bool r_exact_alpha = false, r_exact_chi = false;
    uint64_t r_nodes = 100'000'000;
    std::string r_out;
    c_ramsey->add_option("--q", r_q, "prime of the form 12k +- 5")->required();
    c_ramsey->add_option("--a", r_a, "distance value index");
    c_ramsey->add_flag("--exact-alpha", r_exact_alpha, "compute alpha exactly by branch and bound");
    c_ramsey->add_flag("--exact-chi", r_exact_chi, "compute chi exactly");
    c_ramsey->add_option("--budget-nodes", r_nodes, "search node budget");
    c_ramsey->add_option("--out", r_out, "output file");

    // distance
    auto* c_dist = app.add_subcommand("distance", "distance-set experiments and exhaustive tables");
    std::string d_config, d_space = "euclidean", d_kind = "plus_even", d_mode = "uniform", d_format = "csv", d_out;
    uint64_t d_q = 3, d_seed = 1;
    uint32_t d_dim = 2, d_trials = 100, d_max_size = 0;
    std::vector<uint32_t> d_sizes;
    bool d_exhaustive = false;
    c_dist->add_option("--config", d_config, "JSON config file (overrides the flags)");
    c_dist->add_option("--space", d_space, "euclidean | halfplane");
    c_dist->add_option("--q", d_q, "field size");
    c_dist->add_option("--d", d_dim, "dimension (euclidean)");
    c_dist->add_option("--kind", d_kind, "form kind (euclidean)");
    c_dist->add_option("--sizes", d_sizes, "set sizes to sample")->delimiter(',');
    c_dist->add_option("--trials", d_trials, "trials per size");
    c_dist->add_option("--seed", d_seed, "master seed");
    c_dist->add_option("--mode", d_mode, "uniform | adversarial-line | adversarial-ball");
    c_dist->add_flag("--exhaustive", d_exhaustive, "exact extremal table over all subsets");
    c_dist->add_option("--max-size", d_max_size, "largest subset size for --exhaustive");
    c_dist->add_option("--format", d_format, "csv | json");
    c_dist->add_option("--out", d_out, "output file");

    // suite
    auto* c_suite = app.add_subcommand("suite", "run the full acceptance suite");
    bool s_list = false, s_corrupt = false;
    uint64_t s_seed = 1;
    int s_only = 0;
    c_suite->add_flag("--list", s_list, "list the criteria and exit");
    c_suite->add_option("--seed", s_seed, "master seed");
    c_suite->add_option("--only", s_only, "run a single criterion by number");
    c_suite->add_flag("--inject-corruption", s_corrupt,
                      "test hook: corrupt one adjacency bit so the suite must fail");

    std::vector<std::string> argv_copy = args;
    std::vector<char*> argv;
    argv.reserve(argv_copy.size());
    for (auto& s : argv_copy) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_field) {
            OutputSink sink{f_out, !no_meta};
            FieldCtx f = FieldCtx::make(static_cast<uint32_t>(f_p), static_cast<uint32_t>(f_r));
            json j;
            j["config"] = json{{"p", f_p}, {"r", f_r}};
            j["field"] = field_to_json(f);
            sink.write(j, out);
            return 0;
        }
        if (*c_form) {
            OutputSink sink{fo_out, !no_meta};
            FieldCtx f = cli_detail::field_from_q(fo_q);
            QuadraticForm form = QuadraticForm::make(f, form_kind_from_name(fo_kind), fo_dim);
            json j;
            j["config"] = json{{"q", fo_q}, {"kind", fo_kind}, {"dim", fo_dim}};
            j["form"] = form_to_json(form);
            sink.write(j, out);
            return 0;
        }
        if (*c_graph) {
            OutputSink sink{g_out, !no_meta};
            Graph g;
            if (g_family == "euclidean") {
                FieldCtx f = cli_detail::field_from_q(g_q);
                QuadraticForm form = QuadraticForm::make(f, form_kind_from_name(g_kind), g_d);
                g = build_euclidean(form, f.from_index(g_a), g_ceiling);
            } else if (g_family == "halfplane") {
                FieldCtx f = cli_detail::field_from_q(g_q);
                g = build_halfplane(halfplane_ext(f), f.from_index(g_a), g_ceiling);
            } else if (g_family == "odd_theta" || g_family == "odd_omega" || g_family == "even_plus" ||
                       g_family == "even_minus") {
                FieldCtx f = cli_detail::field_from_q(g_q);
                OrthFamily fam = g_family == "odd_theta"   ? OrthFamily::odd_theta
                                 : g_family == "odd_omega" ? OrthFamily::odd_omega
                                 : g_family == "even_plus" ? OrthFamily::even_plus
                                                           : OrthFamily::even_minus;
                bool odd = fam == OrthFamily::odd_theta || fam == OrthFamily::odd_omega;
                FormKind kind = odd ? FormKind::odd_std
                                    : (fam == OrthFamily::even_plus ? FormKind::plus_even : FormKind::minus_even);
                QuadraticForm form = QuadraticForm::make(f, kind, odd ? 2 * g_m + 1 : 2 * g_m);
                g = build_orthogonal(fam, form, g_i, g_ceiling);
            } else if (g_family == "bch") {
                g = build_code_graph(g_k, g_ceiling);
            } else if (g_family == "alon") {
                g = build_alon_graph(g_k, g_ceiling);
            } else {
                throw std::invalid_argument("unknown family: " + g_family);
            }
            json j;
            j["config"] = json{{"family", g_family}, {"q", g_q},  {"d", g_d}, {"kind", g_kind},
                               {"a", g_a},           {"i", g_i},  {"m", g_m}, {"k", g_k}};
            j["graph"] = graph_to_json(g);
            int rc = 0;
            if (g_certify) {
                NDLCertificate cert = certify(g);
                j["certificate"] = certificate_to_json(cert);
                if (cert.bound) {
                    const FamilyInfo& fi = g.family();
                    std::string formula =
                        fi.family == Family::halfplane
                            ? "2*sqrt(q)"
                            : (fi.family == Family::euclidean
                                   ? "2*q^((d-1)/2)"
                                   : (fi.dim % 2 == 1 ? "2*q^((2m-1)/2)" : "2*q^((2m-2)/2)"));
                    j["certificate"]["bound_formula"] = formula;
                }
                if (cert.status == CertStatus::failed) rc = 1;
            }
            if (!g_adjlist.empty()) {
                OutputSink adj{g_adjlist, false};
                adj.write_text(graph_to_adjlist(g), out);
            }
            sink.write(j, out);
            return rc;
        }
        if (*c_ramsey) {
            OutputSink sink{r_out, !no_meta};
            SearchBudget budget;
            budget.node_limit = r_nodes;
            RamseyWitness w =
                ramsey_witness(static_cast<uint32_t>(r_q), r_a, budget, r_exact_alpha, r_exact_chi);
            json j;
            j["config"] = json{{"q", r_q},
                               {"a", r_a},
                               {"exact_alpha", r_exact_alpha},
                               {"exact_chi", r_exact_chi},
                               {"budget_nodes", r_nodes}};
            j["witness"] = witness_to_json(w);
            j["witness"]["alpha_bound_formula"] = "n*lambda/d";
            sink.write(j, out);
            return 0;
        }
        if (*c_dist) {
            OutputSink sink{d_out, !no_meta};
            if (d_exhaustive) {
                if (d_max_size == 0) throw std::invalid_argument("--exhaustive requires --max-size");
                FieldCtx f = cli_detail::field_from_q(d_q);
                std::vector<ExhaustiveRow> rows;
                std::string kind_label;
                if (d_space == "euclidean") {
                    QuadraticForm form = QuadraticForm::make(f, form_kind_from_name(d_kind), d_dim);
                    rows = exhaustive_extremal_table(form, d_max_size);
                    kind_label = d_kind;
                } else {
                    rows = exhaustive_extremal_table_halfplane(halfplane_ext(f), d_max_size);
                    kind_label = "poincare";
                }
                SpaceKind space = d_space == "euclidean" ? SpaceKind::euclidean : SpaceKind::halfplane;
                sink.write_text(exhaustive_to_csv(space, static_cast<uint32_t>(d_q),
                                                  d_space == "euclidean" ? d_dim : 2, kind_label, rows),
                                out);
                return 0;
            }
            ExperimentConfig cfg;
            if (!d_config.empty()) {
                std::ifstream in(d_config);
                if (!in) throw std::invalid_argument("cannot open config: " + d_config);
                json j = json::parse(in);
                cfg.space = j.at("space") == "halfplane" ? SpaceKind::halfplane : SpaceKind::euclidean;
                cfg.q = j.at("q");
                cfg.dim = j.value("d", 2);
                if (j.contains("kind")) cfg.kind = form_kind_from_name(j["kind"]);
                cfg.sizes = j.at("sizes").get<std::vector<uint32_t>>();
                cfg.trials = j.value("trials", 100);
                cfg.master_seed = j.value("seed", 1);
                cfg.mode = sample_mode_from_name(j.value("mode", "uniform"));
            } else {
                cfg.space = d_space == "halfplane" ? SpaceKind::halfplane : SpaceKind::euclidean;
                cfg.q = static_cast<uint32_t>(d_q);
                cfg.dim = d_dim;
                cfg.kind = form_kind_from_name(d_kind);
                cfg.sizes = d_sizes;
                cfg.trials = d_trials;
                cfg.master_seed = d_seed;
                cfg.mode = sample_mode_from_name(d_mode);
            }
            if (cfg.sizes.empty()) throw std::invalid_argument("no set sizes given");
            ExperimentReport rep = run_experiment(cfg);
            if (d_format == "csv") sink.write_text(experiment_to_csv(rep), out);
            else sink.write(experiment_to_json(rep), out);
            return 0;
        }
        if (*c_suite) {
            if (s_list) {
                auto names = acceptance_names();
                for (size_t i = 0; i < names.size(); i++) out << (i + 1) << " " << names[i] << "\n";
                return 0;
            }
            AcceptanceOptions opt;
            opt.master_seed = s_seed;
            opt.corrupt_adjacency = s_corrupt;
            opt.only = s_only;
            auto results = run_acceptance(opt, &out);
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace fqg
