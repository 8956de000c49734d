#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfi/axioms.hpp"
#include "bfi/io.hpp"

namespace {

using bfi::Aggregator;
using bfi::Interval;
using bfi::Variant;

struct IntegralSpec {
    std::string integral = "choquet";
    std::string polarity = "classic";
    std::string variant = "neutral";
    std::string carrier_path;
    int demo_n = 2; // for the carrier-free mean/max demos
};

void add_integral_flags(CLI::App* cmd, IntegralSpec& spec) {
    cmd->add_option("--carrier", spec.carrier_path, "carrier file (JSON)");
    cmd->add_option("--integral", spec.integral, "integral family")
        ->check(CLI::IsMember({"choquet", "shilkret", "sugeno", "mean", "max"}));
    cmd->add_option("--polarity", spec.polarity, "scale polarity")
        ->check(CLI::IsMember({"classic", "negative", "symmetric", "bipolar"}));
    cmd->add_option("--variant", spec.variant, "bipolar maximum variant")
        ->check(CLI::IsMember({"neutral", "right", "left", "pos", "neg"}));
    cmd->add_option("--n", spec.demo_n, "dimension for the carrier-free demo aggregators")
        ->check(CLI::Range(1, bfi::kMaxCriteria));
}

bool is_demo(const IntegralSpec& spec) {
    return spec.integral == "mean" || spec.integral == "max";
}

[[noreturn]] void unsupported(const IntegralSpec& spec) {
    bfi::fail(bfi::errc::parse_error,
              "unsupported combination --integral " + spec.integral + " --polarity " +
                  spec.polarity);
}

Aggregator build_aggregator(const IntegralSpec& spec) {
    if (is_demo(spec)) {
        return spec.integral == "mean" ? bfi::make_mean(spec.demo_n)
                                       : bfi::make_coordinate_max(spec.demo_n);
    }
    if (spec.carrier_path.empty())
        bfi::fail(bfi::errc::parse_error, "--carrier is required for " + spec.integral);
    Variant v = bfi::parse_variant(spec.variant);
    if (spec.polarity == "bipolar") {
        bfi::BiCapacity mb = bfi::load_bicapacity(spec.carrier_path);
        if (spec.integral == "choquet") return bfi::make_bipolar_choquet(std::move(mb));
        if (spec.integral == "shilkret") return bfi::make_bipolar_shilkret(std::move(mb), v);
        return bfi::make_bipolar_sugeno(std::move(mb), v);
    }
    bfi::Capacity mu = bfi::load_capacity(spec.carrier_path);
    if (spec.integral == "choquet") {
        if (spec.polarity != "classic") unsupported(spec);
        return bfi::make_choquet(std::move(mu), Interval::reals());
    }
    if (spec.integral == "shilkret") {
        if (spec.polarity == "classic")
            return bfi::make_shilkret(std::move(mu), Interval::reals());
        if (spec.polarity == "negative") return bfi::make_shilkret_negative(std::move(mu));
        return bfi::make_shilkret_symmetric(std::move(mu));
    }
    if (spec.polarity == "classic")
        return bfi::make_sugeno(bfi::Measure::from_capacity(mu));
    if (spec.polarity == "symmetric") return bfi::make_sugeno_symmetric(std::move(mu));
    unsupported(spec);
}

std::string fingerprint_of(const IntegralSpec& spec) {
    if (is_demo(spec)) return "-";
    if (spec.polarity == "bipolar")
        return bfi::carrier_fingerprint(
            bfi::serialize_bicapacity(bfi::load_bicapacity(spec.carrier_path)));
    return bfi::carrier_fingerprint(
        bfi::serialize_capacity(bfi::load_capacity(spec.carrier_path)));
}

std::ostream& open_out(std::ofstream& file, const std::string& out_path) {
    if (out_path.empty()) return std::cout;
    file.open(out_path, std::ios::binary);
    if (!file) bfi::fail(bfi::errc::parse_error, "cannot open '" + out_path + "' for writing");
    return file;
}

int run_score(const IntegralSpec& spec, const std::string& alternatives_path,
              const std::string& format, const std::string& out_path, bool ranked) {
    Aggregator G = build_aggregator(spec);
    bfi::AlternativesTable table = bfi::load_alternatives(alternatives_path, G.scale);
    std::vector<double> values = bfi::score_batch_parallel(G, table);
    std::string fp = fingerprint_of(spec);

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    std::vector<bfi::RankedRow> rows;
    if (ranked) {
        rows = bfi::rank_rows(table, values);
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            rows.push_back({0, table.ids[i], values[i]});
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["integral"] = spec.integral;
        doc["polarity"] = spec.polarity;
        doc["variant"] = spec.variant;
        doc["carrier"] = fp;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            if (ranked) row["rank"] = r.rank;
            row["id"] = r.id;
            row["value"] = r.value;
            doc["rows"].push_back(std::move(row));
        }
        os << doc.dump(2) << "\n";
    } else {
        os << "# integral: " << spec.integral << "\n";
        os << "# polarity: " << spec.polarity << "\n";
        os << "# variant: " << spec.variant << "\n";
        os << "# carrier: " << fp << "\n";
        os << (ranked ? "rank\tid\tvalue\n" : "id\tvalue\n");
        for (const auto& r : rows) {
            if (ranked) os << r.rank << "\t";
            os << r.id << "\t" << bfi::format_value(r.value) << "\n";
        }
    }
    return 0;
}

void print_report(const bfi::AxiomReport& r) {
    std::printf("%-24s %-38s %s  trials=%ld violations=%ld\n", r.aggregator.c_str(),
                bfi::to_string(r.axiom), r.passed() ? "pass" : "FAIL", r.trials,
                r.total_violations);
    std::size_t shown = 0;
    for (const auto& v : r.violations) {
        if (++shown > 3) break;
        std::printf("    trial %ld: %s  lhs=%s rhs=%s\n", v.trial, v.witness.c_str(),
                    bfi::format_value(v.lhs).c_str(), bfi::format_value(v.rhs).c_str());
    }
}

int run_check_axioms(const IntegralSpec& spec, const std::vector<std::string>& axiom_names,
                     long trials, std::uint64_t seed, double eps) {
    if (is_demo(spec) || !axiom_names.empty()) {
        Aggregator G = build_aggregator(spec);
        std::vector<bfi::Axiom> axioms;
        if (axiom_names.empty()) {
            axioms = {bfi::Axiom::bipolar_comonotone_additivity,
                      bfi::Axiom::bipolar_comonotone_maxitivity_neutral,
                      bfi::Axiom::bipolar_sign_stability, bfi::Axiom::bipolar_min_stability};
        } else {
            for (const auto& name : axiom_names) axioms.push_back(bfi::parse_axiom(name));
        }
        bool all_pass = true;
        for (bfi::Axiom a : axioms) {
            bfi::AxiomReport r = bfi::check_axiom(G, a, trials, seed, eps);
            print_report(r);
            all_pass = all_pass && r.passed();
        }
        return all_pass ? 0 : 4;
    }

    if (spec.carrier_path.empty())
        bfi::fail(bfi::errc::parse_error, "--carrier is required for " + spec.integral);
    bfi::Family family;
    bfi::Carrier carrier{bfi::Capacity::from_table(1, {0.0, 1.0})};
    if (spec.polarity == "bipolar") {
        family = spec.integral == "choquet"    ? bfi::Family::bipolar_choquet
                 : spec.integral == "shilkret" ? bfi::Family::bipolar_shilkret
                                               : bfi::Family::bipolar_sugeno;
        carrier = bfi::load_bicapacity(spec.carrier_path);
    } else {
        if (spec.polarity == "symmetric") unsupported(spec);
        family = spec.integral == "choquet"    ? bfi::Family::choquet
                 : spec.integral == "shilkret" ? bfi::Family::shilkret
                                               : bfi::Family::sugeno;
        carrier = bfi::load_capacity(spec.carrier_path);
    }
    bfi::SuiteResult suite = bfi::run_characterization_suite(
        family, carrier, bfi::parse_variant(spec.variant), trials, seed, eps);
    for (const auto& r : suite.reports) print_report(r);
    std::printf("elicitation round-trip: %s\n", suite.roundtrip_exact ? "exact" : "FAIL");
    std::printf("suite: %s\n", suite.passed() ? "pass" : "FAIL");
    return suite.passed() ? 0 : 4;
}

int run_elicit(const IntegralSpec& spec, const std::string& out_path) {
    Aggregator G = build_aggregator(spec);
    bool exact = false;
    if (spec.polarity == "bipolar") {
        bfi::BiCapacity original = bfi::load_bicapacity(spec.carrier_path);
        bfi::BiCapacity elicited = bfi::elicit_bicapacity(G);
        exact = original.table() == elicited.table();
        if (!out_path.empty()) bfi::save_bicapacity(elicited, out_path);
    } else {
        bfi::Capacity original = bfi::load_capacity(spec.carrier_path);
        bfi::Capacity elicited = bfi::elicit_capacity(G);
        exact = original.table() == elicited.table();
        if (!out_path.empty()) bfi::save_capacity(elicited, out_path);
    }
    std::printf("exact-roundtrip: %s\n", exact ? "true" : "false");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy integral scoring, ranking, axiom audits, and elicitation"};
    app.require_subcommand(1);

    IntegralSpec spec;
    std::string alternatives_path;
    std::string format = "table";
    std::string out_path;
    std::vector<std::string> axiom_names;
    long trials = 1000;
    std::uint64_t seed = 0;
    double eps = 1e-9;

    CLI::App* score = app.add_subcommand("score", "evaluate each alternative");
    CLI::App* rank = app.add_subcommand("rank", "evaluate and rank alternatives");
    for (CLI::App* cmd : {score, rank}) {
        add_integral_flags(cmd, spec);
        cmd->add_option("--alternatives", alternatives_path, "CSV of score rows")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--out", out_path, "write output here instead of stdout");
    }

    CLI::App* check = app.add_subcommand("check-axioms", "run a characterization suite");
    add_integral_flags(check, spec);
    check->add_option("--axiom", axiom_names, "check only these axioms (repeatable)");
    check->add_option("--trials", trials, "sampled trials per axiom")
        ->check(CLI::NonNegativeNumber);
    check->add_option("--seed", seed, "base RNG seed");
    check->add_option("--eps", eps, "comparison tolerance")->check(CLI::PositiveNumber);

    CLI::App* elicit = app.add_subcommand("elicit", "recover the carrier from indicators");
    add_integral_flags(elicit, spec);
    elicit->add_option("--out", out_path, "write the elicited carrier here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (score->parsed()) return run_score(spec, alternatives_path, format, out_path, false);
        if (rank->parsed()) return run_score(spec, alternatives_path, format, out_path, true);
        if (check->parsed()) return run_check_axioms(spec, axiom_names, trials, seed, eps);
        return run_elicit(spec, out_path);
    } catch (const bfi::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.cli_exit_code();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
