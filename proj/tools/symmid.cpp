// Command-line interface: computes homological invariants of symmetric
// monomial ideals from JSON descriptions and cross-checks the combinatorial
// formulas against the homology oracle.
//
// Exit codes: 0 success, 1 invalid input, 2 resource cap exceeded,
// 3 internal cross-check failure (a bug, never user error).

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <string>

#include "symmid/betti.hpp"
#include "symmid/chains.hpp"
#include "symmid/errors.hpp"
#include "symmid/ext_invariants.hpp"
#include "symmid/ideal.hpp"
#include "symmid/json_io.hpp"
#include "symmid/powers.hpp"
#include "symmid/zset.hpp"

namespace {

using symmid::json;

struct Options {
    std::string ideal_file;
    std::string weights;
    int n = 0;
    int d = 1;
    int field = 2;
    int vbound = 3;
    int j = -1;
    std::string n_range;
    bool pretty = false;
    bool json_out = false;
    unsigned long long seed = 20240811ULL;
    int degree_bound = 10;
    bool want_support = false;
    bool want_reg = false;
    bool want_asymptotic = false;
    bool want_shifted = false;
    bool table_only = false;
    bool invariants_only = false;
};

void emit(const json& value, bool pretty_text, const std::string& rendered = "") {
    if (pretty_text && !rendered.empty())
        std::cout << rendered;
    else
        std::cout << value.dump(2) << '\n';
}

symmid::Ideal load_ideal(const std::string& path) {
    bool warned = false;
    symmid::Ideal ideal = symmid::load_ideal_file(path, &warned);
    if (warned)
        std::cerr << "warning: generators were not an antichain; minimalized on load\n";
    return ideal;
}

symmid::Partition parse_weights(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            parts.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw symmid::DomainError("cannot parse weight list: " + text);
        }
    }
    return symmid::Partition::sorted(std::move(parts));
}

std::pair<int, int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw symmid::DomainError("range must look like A:B");
    try {
        int a = std::stoi(text.substr(0, colon));
        int b = std::stoi(text.substr(colon + 1));
        if (a > b) throw symmid::DomainError("range must satisfy A <= B");
        return {a, b};
    } catch (const std::invalid_argument&) {
        throw symmid::DomainError("cannot parse range: " + text);
    }
}

int run_invariants(const Options& opt) {
    symmid::InvariantReport report = symmid::invariants(load_ideal(opt.ideal_file));
    json out = symmid::to_json(report);
    std::ostringstream text;
    text << "reg " << report.reg << ", pdim " << report.pdim << ", depth " << report.depth << '\n';
    emit(out, opt.pretty, text.str());
    return 0;
}

int run_zset(const Options& opt) {
    symmid::Ideal ideal = load_ideal(opt.ideal_file);
    std::vector<symmid::ZPair> zs = symmid::z_set(ideal);
    json out = symmid::z_set_to_json(zs, ideal.n());
    std::ostringstream text;
    for (const symmid::ZPair& p : zs) {
        text << "(";
        for (std::size_t i = 0; i < p.z.length(); ++i)
            text << (i ? "," : "") << p.z.nth(i);
        text << ") l=" << p.l << "  reg_term=" << p.z.sum() + p.l + 1
             << "  pdim_term=" << ideal.n() - 1 - p.l << '\n';
    }
    emit(out, opt.pretty, text.str());
    return 0;
}

int run_ext(const Options& opt) {
    symmid::Ideal ideal = load_ideal(opt.ideal_file);
    if (opt.j < 0) throw symmid::DomainError("ext requires --j");
    json out = symmid::to_json(symmid::ext_character_quotient(ideal, opt.j, opt.vbound));
    emit(out, opt.pretty);
    return 0;
}

int run_cm(const Options& opt) {
    json out = symmid::to_json(symmid::is_cohen_macaulay(load_ideal(opt.ideal_file)));
    emit(out, opt.pretty);
    return 0;
}

int run_scm(const Options& opt) {
    std::vector<symmid::Ideal> chain =
        symmid::sequentially_cm_filtration(load_ideal(opt.ideal_file));
    json steps = json::array();
    for (const symmid::Ideal& step : chain) steps.push_back(symmid::to_json(step));
    emit(json{{"steps", steps}}, opt.pretty);
    return 0;
}

int run_powers(const Options& opt) {
    symmid::Partition w = parse_weights(opt.weights);
    if (opt.n <= 0) throw symmid::DomainError("powers requires -n");
    bool all = !opt.want_support && !opt.want_reg && !opt.want_asymptotic && !opt.want_shifted;
    json out;
    out["w"] = symmid::to_json(w);
    out["n"] = opt.n;
    out["d"] = opt.d;
    std::vector<symmid::Partition> support;
    if (all || opt.want_support || opt.want_reg || opt.want_shifted)
        support = symmid::powers_support(w, opt.d, opt.n);
    if (all || opt.want_support) {
        json arr = json::array();
        for (const symmid::Partition& x : support) arr.push_back(symmid::to_json(x));
        out["support"] = arr;
    }
    if (all || opt.want_reg) {
        int exact = symmid::invariants(symmid::Ideal(opt.n, support)).reg;
        out["reg"] = exact;
        // never silently substitute the asymptotic formula for the exact value
        out["matches_asymptotic"] = (exact == symmid::asymptotic_reg(w, opt.n, opt.d));
    }
    if (all || opt.want_asymptotic) {
        out["b_const"] = symmid::b_const(w, opt.n);
        out["asymptotic"] = symmid::asymptotic_reg(w, opt.n, opt.d);
    }
    if (opt.want_shifted) {
        symmid::Ideal ideal(opt.n, support);
        out["symmetric_shifted"] = symmid::is_symmetric_shifted(ideal);
        out["symmetric_strongly_shifted"] = symmid::is_symmetric_strongly_shifted(ideal);
    }
    emit(out, opt.pretty);
    return 0;
}

int run_chain(const Options& opt) {
    std::vector<symmid::Partition> x = symmid::load_partition_set_file(opt.ideal_file);
    symmid::ChainProfile profile = symmid::chain_profile(x);
    json yj = json::array();
    for (const symmid::Partition& p : profile.y) yj.push_back(symmid::to_json(p));
    json out;
    out["profile"] = json{{"m", profile.m},        {"w", profile.w},
                          {"W", profile.big_w},    {"Y", yj},
                          {"C", profile.c},        {"threshold", profile.threshold}};
    auto [lo, hi] = opt.n_range.empty() ? std::pair<int, int>{profile.m, profile.m + 4}
                                        : parse_range(opt.n_range);
    json rows = json::array();
    for (int n = lo; n <= hi; ++n) {
        if (n < profile.m) {
            rows.push_back(json{{"n", n}, {"reg", nullptr}, {"mode", "undefined"}});
            continue;
        }
        symmid::ChainReg reg = symmid::reg_chain(profile, n);
        rows.push_back(json{{"n", n}, {"reg", reg.value}, {"mode", reg.formula ? "formula" : "exact"}});
    }
    out["rows"] = rows;
    emit(out, opt.pretty);
    return 0;
}

int run_shifted(const Options& opt) {
    symmid::Ideal ideal = load_ideal(opt.ideal_file);
    json out{{"symmetric_shifted", symmid::is_symmetric_shifted(ideal)},
             {"symmetric_strongly_shifted", symmid::is_symmetric_strongly_shifted(ideal)},
             {"linear_resolution", symmid::has_linear_resolution(ideal)}};
    emit(out, opt.pretty);
    return 0;
}

int run_betti(const Options& opt) {
    symmid::Ideal ideal = load_ideal(opt.ideal_file);
    symmid::BettiTable table = symmid::betti_numbers(symmid::expand_orbits(ideal), opt.field);
    json out = symmid::to_json(table);
    if (opt.invariants_only)
        out = json{{"field", table.field_char}, {"reg", table.reg()}, {"pdim", table.pdim()}};
    emit(out, opt.pretty, symmid::render_betti_table(table));
    return 0;
}

int run_check(const Options& opt) {
    symmid::Ideal ideal = load_ideal(opt.ideal_file);
    json checks = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, bool pass) {
        checks.push_back(json{{"name", name}, {"pass", pass}});
        all_pass = all_pass && pass;
    };

    symmid::InvariantReport report = symmid::invariants(ideal);
    auto [oreg, opdim] = symmid::oracle_invariants(symmid::expand_orbits(ideal), opt.field);
    record("reg_matches_oracle", report.reg == oreg);
    record("pdim_matches_oracle", report.pdim == opdim);

    std::vector<symmid::ZPair> zs = symmid::z_set(ideal);
    bool lattice_ok = true;
    for (int c = 0; c < ideal.max_first_part(); ++c)
        for (int l = 0; l < ideal.n(); ++l)
            for (const symmid::Partition& z : symmid::enumerate_box_partitions(c, ideal.n(), l + 1)) {
                if (z.first() != c) continue;
                symmid::ZPair pair{z, l};
                if (symmid::zpair_member(pair, ideal) !=
                    symmid::zpair_member_via_lattice(pair, ideal))
                    lattice_ok = false;
            }
    record("membership_matches_lattice", lattice_ok);

    bool slice_ok = true;
    for (int p = 0; p <= ideal.n(); ++p) {
        symmid::Ideal sat = ideal.saturate(p);
        std::vector<symmid::ZPair> expected;
        for (const symmid::ZPair& pair : zs)
            if (pair.l >= p) expected.push_back(pair);
        std::vector<symmid::ZPair> actual =
            sat.is_unit() ? std::vector<symmid::ZPair>{} : symmid::z_set(sat);
        if (actual != expected) slice_ok = false;
    }
    record("saturation_slices_levels", slice_ok);

    std::vector<long long> total(static_cast<std::size_t>(opt.degree_bound) + 1, 0);
    for (const symmid::ZPair& pair : zs) {
        std::vector<long long> part =
            symmid::hilbert_function_Jzl(pair.z, pair.l, ideal.n(), opt.degree_bound);
        for (std::size_t t = 0; t < total.size(); ++t) total[t] += part[t];
    }
    record("filtration_hilbert_identity", total == ideal.quotient_hilbert_function(opt.degree_bound));

    symmid::CohenMacaulayReport cm = symmid::is_cohen_macaulay(ideal);
    record("cm_conditions_agree", cm.equal_first_parts == cm.uniform_level);
    record("cm_matches_unmixed", cm.cohen_macaulay == cm.unmixed);
    if (cm.cohen_macaulay)
        record("cm_pdim_is_codim", opdim == ideal.small_dimension_data().codim - 1);

    // randomized membership consistency between the ideal and its expansion
    std::mt19937_64 rng(opt.seed);
    symmid::MonomialIdeal expanded = symmid::expand_orbits(ideal);
    bool member_ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> u(static_cast<std::size_t>(ideal.n()));
        for (int& e : u) e = static_cast<int>(rng() % static_cast<unsigned>(ideal.max_first_part() + 2));
        bool direct = ideal.contains_exponent(u);
        bool via_orbit = false;
        for (const std::vector<int>& g : expanded.gens) {
            bool div = true;
            for (std::size_t i = 0; i < u.size(); ++i)
                if (g[i] > u[i]) div = false;
            if (div) via_orbit = true;
        }
        if (direct != via_orbit) member_ok = false;
    }
    record("membership_matches_expansion", member_ok);

    emit(json{{"checks", checks}, {"all_pass", all_pass}}, opt.pretty);
    // disagreement between the calculus and the oracle is an implementation
    // bug, reported with the internal-failure exit code
    return all_pass ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological invariants of symmetric monomial ideals"};
    app.require_subcommand(1);
    Options opt;

    auto add_ideal_opt = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("-i,--ideal", opt.ideal_file, "ideal description (JSON file)");
        if (required) o->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--pretty", opt.pretty, "human readable output");
        cmd->add_flag("--json", opt.json_out, "JSON output (default)");
        cmd->add_option("--seed", opt.seed, "seed for randomized cross-checks");
    };

    CLI::App* invariants_cmd = app.add_subcommand("invariants", "regularity and projective dimension");
    add_ideal_opt(invariants_cmd);
    add_common(invariants_cmd);

    CLI::App* zset_cmd = app.add_subcommand("zset", "the controlling set of pairs (z,l)");
    add_ideal_opt(zset_cmd);
    add_common(zset_cmd);

    CLI::App* ext_cmd = app.add_subcommand("ext", "multigraded ext character");
    add_ideal_opt(ext_cmd);
    ext_cmd->add_option("--j", opt.j, "cohomological degree")->required();
    ext_cmd->add_option("--vbound", opt.vbound, "completeness bound for the shift variable");
    add_common(ext_cmd);

    CLI::App* cm_cmd = app.add_subcommand("cm", "cohen-macaulay test with diagnostics");
    add_ideal_opt(cm_cmd);
    add_common(cm_cmd);

    CLI::App* scm_cmd = app.add_subcommand("scm-filtration", "saturation filtration");
    add_ideal_opt(scm_cmd);
    add_common(scm_cmd);

    CLI::App* powers_cmd = app.add_subcommand("powers", "powers of a single-orbit ideal");
    powers_cmd->add_option("-w,--weights", opt.weights, "generator exponents, comma separated")->required();
    powers_cmd->add_option("-n", opt.n, "number of variables")->required();
    powers_cmd->add_option("-d", opt.d, "power");
    powers_cmd->add_flag("--support", opt.want_support, "emit the support partitions");
    powers_cmd->add_flag("--reg", opt.want_reg, "emit the exact regularity");
    powers_cmd->add_flag("--asymptotic", opt.want_asymptotic, "emit the linear formula value");
    powers_cmd->add_flag("--shifted", opt.want_shifted, "emit shiftedness tests");
    add_common(powers_cmd);

    CLI::App* chain_cmd = app.add_subcommand("chain", "regularity along a chain of ambient dimensions");
    chain_cmd->add_option("-i,--ideal,-x", opt.ideal_file, "partition set (JSON file)")->required();
    chain_cmd->add_option("--n-range", opt.n_range, "ambient range A:B");
    add_common(chain_cmd);

    CLI::App* shifted_cmd = app.add_subcommand("shifted", "symmetric shiftedness and linearity");
    add_ideal_opt(shifted_cmd);
    add_common(shifted_cmd);

    CLI::App* betti_cmd = app.add_subcommand("betti", "graded betti numbers by the homology oracle");
    add_ideal_opt(betti_cmd);
    betti_cmd->add_option("--field", opt.field, "field characteristic (prime)");
    auto* table_flag = betti_cmd->add_flag("--table", opt.table_only, "emit the full table (default)");
    betti_cmd->add_flag("--invariants", opt.invariants_only, "emit reg and pdim only")
        ->excludes(table_flag);
    add_common(betti_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "cross-check formulas against the oracle");
    add_ideal_opt(check_cmd);
    check_cmd->add_option("--field", opt.field, "field characteristic (prime)");
    check_cmd->add_option("--degree-bound", opt.degree_bound, "hilbert comparison bound");
    add_common(check_cmd);

    try {
        app.parse(argc, argv);
        if (invariants_cmd->parsed()) return run_invariants(opt);
        if (zset_cmd->parsed()) return run_zset(opt);
        if (ext_cmd->parsed()) return run_ext(opt);
        if (cm_cmd->parsed()) return run_cm(opt);
        if (scm_cmd->parsed()) return run_scm(opt);
        if (powers_cmd->parsed()) return run_powers(opt);
        if (chain_cmd->parsed()) return run_chain(opt);
        if (shifted_cmd->parsed()) return run_shifted(opt);
        if (betti_cmd->parsed()) return run_betti(opt);
        if (check_cmd->parsed()) return run_check(opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const symmid::TheoremViolation& e) {
        std::cout << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 3;
    } catch (const symmid::ResourceError& e) {
        std::cout << json{{"error", {{"kind", "resource"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 2;
    } catch (const symmid::DomainError& e) {
        std::cout << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 1;
    }
    return 0;
}
