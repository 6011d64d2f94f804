#pragma once

// Command-line front end. Four subcommands:
//
//   classify            class vectors for subsets or a map of one space
//   check-claims        run the claim registry and report verdicts
//   enumerate           count catalog spaces per ground size
//   implication-matrix  pairwise implication survey over the set classes
//
// Exit status: 0 on success (refuted claims included — refutation is an
// answer, not a failure), 2 when a fatal claim (an internal-consistency
// check) is violated, 1 on usage, parse, validation or budget errors.
//
// Reports contain no timestamps or timings; identical invocations must
// produce byte-identical output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fintop/claims.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/errors.hpp"
#include "fintop/implications.hpp"
#include "fintop/io.hpp"
#include "fintop/version.hpp"

namespace fintop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFatalClaim = 2;

namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::optional<std::string> cache_dir_from_env() {
    const char* dir = std::getenv("FINTOP_CACHE_DIR");
    if (dir && *dir) return std::string(dir);
    return std::nullopt;
}

inline AlphaMVariant variant_from_flag(const std::string& flag) {
    const auto v = parse_variant(flag);
    if (!v) throw Error("unknown variant: " + flag);
    return *v;
}

inline std::vector<AlphaMVariant> variants_from_flag(const std::string& flag) {
    if (flag == "both") return {AlphaMVariant::alpha_open_witnesses, AlphaMVariant::open_witnesses};
    return {variant_from_flag(flag)};
}

inline CatalogMode mode_from_flag(const std::string& flag) {
    const auto m = parse_catalog_mode(flag);
    if (!m) throw Error("unknown mode: " + flag);
    return *m;
}

struct ClassifyArgs {
    std::string space_file;
    std::optional<std::string> subset_expr;
    std::optional<std::string> map_file;
    std::string variant = "alpha-open";
    std::string format = "table";
};

inline int cmd_classify(const ClassifyArgs& args, std::ostream& out) {
    const AlphaMVariant variant = variant_from_flag(args.variant);
    const SpaceDocument doc = parse_space_document(read_file(args.space_file));
    const FiniteSpace space = resolve_space(doc);
    const PointNames names{doc.points};
    SpaceTables tables(space);

    Json report = report_envelope("classify");
    report["variant"] = to_string(variant);
    report["space"] = json_space(space, names);

    std::string table_text;
    if (args.map_file) {
        const MapDocument map_doc = parse_map_document(read_file(*args.map_file));
        const ResolvedMap resolved = resolve_map(map_doc, space, names);
        SpaceTables codomain_tables(resolved.codomain);
        const auto image = resolved.map.image_array();
        report["codomain"] = json_space(resolved.codomain, resolved.codomain_names);
        report["map"] = json_map_classification(tables, codomain_tables, image, names,
                                                resolved.codomain_names, variant);

        const MapClassification mc = classify_map(tables, codomain_tables, image, variant);
        table_text += "map:";
        bool any = false;
        for (MapClass c : kAllMapClasses)
            if (mc.has(c)) {
                table_text += std::string(any ? ", " : " ") + to_string(c);
                any = true;
            }
        if (!any) table_text += " (no class)";
        table_text += "\n";
        if (auto v = alpha_m_continuity_violation(tables, codomain_tables, image, variant)) {
            table_text += "not alpha-m continuous: preimage of closed " +
                          format_subset(v->closed_set, resolved.codomain_names.names) + " is " +
                          format_subset(v->preimage, names.names) + ", witness " +
                          format_subset(v->witness, names.names) + "\n";
        }
    } else {
        Json rows = Json::array();
        std::vector<SubsetMask> targets;
        if (args.subset_expr) {
            targets.push_back(parse_subset(*args.subset_expr, names));
        } else {
            for (std::uint32_t a = 0; a <= full_bits(space.ground_size()); ++a)
                targets.push_back(SubsetMask(a, space.ground_size()));
        }
        for (SubsetMask target : targets) {
            rows.push_back(json_subset_classification(tables, target, names, variant));
            table_text += table_subset_row(tables, target, names, variant) + "\n";
        }
        report["subsets"] = std::move(rows);
    }

    if (args.format == "machine")
        out << dump_report(report);
    else
        out << table_text;
    return kExitOk;
}

struct CheckClaimsArgs {
    std::vector<std::string> claim_ids;
    std::string variant = "both";
    int max_n = 3;
    std::optional<int> max_domain_n;
    std::optional<int> max_codomain_n;
    std::optional<std::uint64_t> max_witness_spaces;
    std::optional<std::int64_t> time_limit_ms;
    unsigned workers = 1;
    std::string format = "table";
};

inline int cmd_check_claims(const CheckClaimsArgs& args, std::ostream& out) {
    SearchBudget budget;
    budget.max_domain_n = args.max_domain_n.value_or(args.max_n);
    budget.max_codomain_n = args.max_codomain_n.value_or(args.max_n);
    budget.max_witness_spaces = args.max_witness_spaces;
    if (args.time_limit_ms) budget.time_limit = std::chrono::milliseconds(*args.time_limit_ms);

    std::vector<std::string> ids = args.claim_ids;
    if (ids.empty())
        for (const ClaimSpec& spec : registered_claims()) ids.push_back(spec.id);
    for (const std::string& id : ids) find_claim(id);  // reject unknown ids up front

    const std::vector<AlphaMVariant> variants = variants_from_flag(args.variant);

    std::optional<std::string> cache_dir = cache_dir_from_env();
    std::optional<TopologyCache> cache;
    if (cache_dir) cache.emplace(*cache_dir);
    CatalogStore store(cache ? &*cache : nullptr, args.workers);
    RunOptions options;
    options.workers = args.workers;
    options.store = &store;

    std::vector<ClaimVerdict> verdicts;
    for (const std::string& id : ids)
        for (AlphaMVariant variant : variants)
            verdicts.push_back(run_claim(id, budget, variant, options));

    // Claims whose outcome depends on the witness-family reading get an
    // explicit callout; this is the heart of the printed-versus-used split.
    std::vector<std::string> divergent;
    if (variants.size() > 1) {
        std::map<std::string, std::set<ClaimOutcome>> outcomes;
        for (const ClaimVerdict& v : verdicts) outcomes[v.claim_id].insert(v.outcome);
        for (const auto& [id, set] : outcomes)
            if (set.size() > 1) divergent.push_back(id);
    }

    bool fatal = false;
    for (const ClaimVerdict& v : verdicts)
        if (v.outcome == ClaimOutcome::counterexample && find_claim(v.claim_id).fatal_on_violation)
            fatal = true;

    if (args.format == "machine") {
        Json report = report_envelope("check-claims");
        Json variant_names = Json::array();
        for (AlphaMVariant v : variants) variant_names.push_back(to_string(v));
        report["variants"] = std::move(variant_names);
        report["budget"] = json_budget(budget);
        Json claims = Json::array();
        for (const ClaimVerdict& v : verdicts) claims.push_back(json_verdict(v));
        report["claims"] = std::move(claims);
        report["variant_divergences"] = divergent;
        report["fatal_violation"] = fatal;
        out << dump_report(report);
    } else {
        for (const ClaimVerdict& v : verdicts) out << table_verdict_line(v) << "\n";
        for (const std::string& id : divergent)
            out << "note: verdicts for " << id
                << " differ between witness-family variants\n";
        if (fatal) out << "FATAL: an internal-consistency claim was violated\n";
    }
    return fatal ? kExitFatalClaim : kExitOk;
}

struct EnumerateArgs {
    int max_n = 4;
    std::string mode = "labeled";
    std::optional<std::int64_t> time_limit_ms;
    unsigned workers = 1;
    std::string format = "table";
};

inline int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
    const CatalogMode mode = mode_from_flag(args.mode);
    std::optional<std::string> cache_dir = cache_dir_from_env();
    std::optional<TopologyCache> cache;
    if (cache_dir) cache.emplace(*cache_dir);

    EnumerationOptions options;
    options.workers = args.workers;
    if (args.time_limit_ms) options.time_limit = std::chrono::milliseconds(*args.time_limit_ms);
    options.cache = cache ? &*cache : nullptr;

    Json counts = Json::array();
    std::string table_text;
    for (int n = 1; n <= args.max_n; ++n) {
        const TopologyCatalog catalog = enumerate_topologies(n, mode, options);
        Json row;
        row["n"] = n;
        row["mode"] = to_string(mode);
        row["count"] = catalog.entries.size();
        counts.push_back(std::move(row));
        table_text += "n=" + std::to_string(n) + " " + to_string(mode) + " " +
                      std::to_string(catalog.entries.size()) + "\n";
    }

    if (args.format == "machine") {
        Json report = report_envelope("enumerate");
        report["max_n"] = args.max_n;
        report["mode"] = to_string(mode);
        report["counts"] = std::move(counts);
        out << dump_report(report);
    } else {
        out << table_text;
    }
    return kExitOk;
}

struct ImplicationArgs {
    int max_n = 3;
    std::string variant = "alpha-open";
    std::string format = "table";
    unsigned workers = 1;
};

inline int cmd_implication_matrix(const ImplicationArgs& args, std::ostream& out) {
    const AlphaMVariant variant = variant_from_flag(args.variant);
    std::optional<std::string> cache_dir = cache_dir_from_env();
    std::optional<TopologyCache> cache;
    if (cache_dir) cache.emplace(*cache_dir);
    CatalogStore store(cache ? &*cache : nullptr, args.workers);

    const ImplicationMatrix matrix = compute_implication_matrix(store, args.max_n, variant);
    if (args.format == "machine") {
        Json report = report_envelope("implication-matrix");
        report["matrix"] = json_implication_matrix(matrix);
        out << dump_report(report);
    } else if (args.format == "graph") {
        out << render_dot(condensed_reduction(matrix));
    } else {
        out << table_implications(matrix);
    }
    return kExitOk;
}

}  // namespace cli_detail

/// Full CLI entry point; returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"workbench for finite topological spaces and generalized continuity"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    cli_detail::ClassifyArgs classify_args;
    std::string classify_subset_expr, classify_map_file;
    CLI::App* classify = app.add_subcommand("classify", "class vectors for subsets or a map");
    classify->add_option("--space", classify_args.space_file, "space document")->required();
    CLI::Option* subset_opt =
        classify->add_option("--subset", classify_subset_expr, "subset expression, e.g. \"a,c\"");
    CLI::Option* map_opt =
        classify->add_option("--map", classify_map_file, "map document (codomain plus map lines)");
    subset_opt->excludes(map_opt);
    classify->add_option("--variant", classify_args.variant, "alpha-m witness family")
        ->check(CLI::IsMember({"alpha-open", "open"}))
        ->capture_default_str();
    classify->add_option("--format", classify_args.format, "output format")
        ->check(CLI::IsMember({"table", "machine"}))
        ->capture_default_str();

    cli_detail::CheckClaimsArgs claims_args;
    std::int64_t claims_time_limit = 0;
    int claims_max_domain = 0, claims_max_codomain = 0;
    std::uint64_t claims_max_spaces = 0;
    CLI::App* claims = app.add_subcommand("check-claims", "run the claim registry");
    claims->add_option("--claim", claims_args.claim_ids, "claim id filter (repeatable)");
    claims->add_option("--variant", claims_args.variant, "alpha-m witness family")
        ->check(CLI::IsMember({"alpha-open", "open", "both"}))
        ->capture_default_str();
    claims->add_option("--max-n", claims_args.max_n, "ground-size budget for both sides")
        ->check(CLI::Range(1, 7))
        ->capture_default_str();
    CLI::Option* max_domain_opt =
        claims->add_option("--max-domain-n", claims_max_domain, "domain ground-size budget")
            ->check(CLI::Range(1, 7));
    CLI::Option* max_codomain_opt =
        claims->add_option("--max-codomain-n", claims_max_codomain, "codomain ground-size budget")
            ->check(CLI::Range(1, 7));
    CLI::Option* max_spaces_opt = claims->add_option(
        "--max-witness-spaces", claims_max_spaces, "cap on catalog entries used per ground size");
    CLI::Option* claims_time_opt =
        claims->add_option("--time-limit-ms", claims_time_limit, "per-claim time budget");
    claims->add_option("--workers", claims_args.workers, "worker threads")->capture_default_str();
    claims->add_option("--format", claims_args.format, "output format")
        ->check(CLI::IsMember({"table", "machine"}))
        ->capture_default_str();

    cli_detail::EnumerateArgs enumerate_args;
    std::int64_t enumerate_time_limit = 0;
    CLI::App* enumerate = app.add_subcommand("enumerate", "count catalog spaces per ground size");
    enumerate->add_option("--max-n", enumerate_args.max_n, "largest ground size")
        ->check(CLI::Range(1, 7))
        ->capture_default_str();
    enumerate->add_option("--mode", enumerate_args.mode, "labeled or homeo")
        ->check(CLI::IsMember({"labeled", "homeo"}))
        ->capture_default_str();
    CLI::Option* enumerate_time_opt =
        enumerate->add_option("--time-limit-ms", enumerate_time_limit, "time budget");
    enumerate->add_option("--workers", enumerate_args.workers, "worker threads")
        ->capture_default_str();
    enumerate->add_option("--format", enumerate_args.format, "output format")
        ->check(CLI::IsMember({"table", "machine"}))
        ->capture_default_str();

    cli_detail::ImplicationArgs implication_args;
    CLI::App* implication =
        app.add_subcommand("implication-matrix", "pairwise implication survey over set classes");
    implication->add_option("--max-n", implication_args.max_n, "largest ground size")
        ->check(CLI::Range(1, 5))
        ->capture_default_str();
    implication->add_option("--variant", implication_args.variant, "alpha-m witness family")
        ->check(CLI::IsMember({"alpha-open", "open"}))
        ->capture_default_str();
    implication->add_option("--format", implication_args.format, "output format")
        ->check(CLI::IsMember({"table", "graph", "machine"}))
        ->capture_default_str();
    implication->add_option("--workers", implication_args.workers, "worker threads")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (classify->parsed()) {
            if (*subset_opt) classify_args.subset_expr = classify_subset_expr;
            if (*map_opt) classify_args.map_file = classify_map_file;
            return cli_detail::cmd_classify(classify_args, out);
        }
        if (claims->parsed()) {
            if (*max_domain_opt) claims_args.max_domain_n = claims_max_domain;
            if (*max_codomain_opt) claims_args.max_codomain_n = claims_max_codomain;
            if (*max_spaces_opt) claims_args.max_witness_spaces = claims_max_spaces;
            if (*claims_time_opt) claims_args.time_limit_ms = claims_time_limit;
            return cli_detail::cmd_check_claims(claims_args, out);
        }
        if (enumerate->parsed()) {
            if (*enumerate_time_opt) enumerate_args.time_limit_ms = enumerate_time_limit;
            return cli_detail::cmd_enumerate(enumerate_args, out);
        }
        if (implication->parsed()) return cli_detail::cmd_implication_matrix(implication_args, out);
    } catch (const Error& e) {
        err << kToolName << ": error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << kToolName << ": error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace fintop
