#include "dyadic/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dyadic/json_io.hpp"

namespace dyadic {

namespace {

json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw DomainError("cannot open " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

struct Options {
    int field_f = 1;
    int precision = 12;
    int k = 1;
    bool classic = false;
    bool oracle = false;
    bool brute_force = false;
    int modulus_exp = 9;
    std::string lattice;
    std::string ell;
    int max_components = 3;
    int scale_min = -1;
    int scale_max = 3;
    int max_comp_dim = 4;
    int max_dim = 5;
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string a, b;
};

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Universality of quadratic lattices over unramified dyadic fields", "dyadic"};
    app.require_subcommand(1);
    app.add_option("--field-f", o.field_f, "residue degree f of F over Q_2")->check(CLI::Range(1, kMaxDegree));
    app.add_option("--precision", o.precision, "working precision N (elements mod 2^N)");

    auto* classify_cmd = app.add_subcommand("classify", "closed-form (or --oracle) k-universality verdict");
    classify_cmd->add_option("--k", o.k, "dimension k")->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--classic", o.classic, "classic k-universality");
    classify_cmd->add_flag("--oracle", o.oracle, "decide through test-lattice representations");
    classify_cmd->add_option("--lattice", o.lattice, "lattice JSON or @file")->required();

    auto* represents_cmd = app.add_subcommand("represents", "does L represent ell");
    represents_cmd->add_option("--ell", o.ell, "lattice JSON or @file")->required();
    represents_cmd->add_option("--lattice", o.lattice, "lattice JSON or @file")->required();
    represents_cmd->add_flag("--brute-force", o.brute_force, "congruence search on Gram matrices");
    represents_cmd->add_option("--modulus-exp", o.modulus_exp, "search modulus exponent");

    auto* invariants_cmd = app.add_subcommand("invariants", "Jordan invariants and derived ideals");
    invariants_cmd->add_option("--lattice", o.lattice, "lattice JSON or @file")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "dominant (or classic basic) test lattices");
    enumerate_cmd->add_option("--k", o.k, "dimension k")->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--classic", o.classic, "classic basic lattices");

    auto* cross_cmd = app.add_subcommand("crosscheck", "classifier vs oracle over a lattice family");
    cross_cmd->add_option("--k", o.k, "dimension k")->check(CLI::PositiveNumber);
    cross_cmd->add_flag("--classic", o.classic, "classic variant");
    cross_cmd->add_option("--max-components", o.max_components)->check(CLI::NonNegativeNumber);
    cross_cmd->add_option("--scale-min", o.scale_min);
    cross_cmd->add_option("--scale-max", o.scale_max);
    cross_cmd->add_option("--max-comp-dim", o.max_comp_dim)->check(CLI::PositiveNumber);
    cross_cmd->add_option("--max-dim", o.max_dim)->check(CLI::NonNegativeNumber);
    cross_cmd->add_option("--sample", o.sample, "random sample size instead of the full family");
    cross_cmd->add_option("--seed", o.seed, "sampling seed");
    cross_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (a, b)");
    hilbert_cmd->add_option("a", o.a)->required();
    hilbert_cmd->add_option("b", o.b)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    try {
        const Field F(o.field_f, o.precision);
        if (classify_cmd->parsed()) {
            const JordanLattice L = lattice_from_json(load_json_arg(o.lattice), F).lattice;
            const ClassifyVerdict v = o.oracle ? oracle_k_universal(L, o.k, o.classic, F) : classify(L, o.k, o.classic, F);
            emit(out, to_json(v, F));
        } else if (represents_cmd->parsed()) {
            const ParsedLattice l = lattice_from_json(load_json_arg(o.ell), F);
            const ParsedLattice L = lattice_from_json(load_json_arg(o.lattice), F);
            if (o.brute_force) {
                const GramMatrix gl = l.gram ? *l.gram : gram_of(l.lattice, F);
                const GramMatrix gL = L.gram ? *L.gram : gram_of(L.lattice, F);
                emit(out, to_json(brute_force_represents(gl, gL, o.modulus_exp, F), F));
            } else {
                emit(out, to_json(represents_lattice(l.lattice, L.lattice, F), F));
            }
        } else if (invariants_cmd->parsed()) {
            emit(out, invariants_report(lattice_from_json(load_json_arg(o.lattice), F).lattice, F));
        } else if (enumerate_cmd->parsed()) {
            const auto list = o.classic ? enumerate_classic_basic(o.k, F) : enumerate_dominant(o.k, F);
            for (const auto& l : list) emit(out, to_json(l, F));
        } else if (cross_cmd->parsed()) {
            FamilyBounds b;
            b.max_components = o.max_components;
            b.scale_min = o.scale_min;
            b.scale_max = o.scale_max;
            b.max_comp_dim = o.max_comp_dim;
            b.max_total_dim = o.max_dim;
            CrosscheckOptions co;
            co.k = o.k;
            co.classic = o.classic;
            co.jobs = o.jobs;
            co.seed = o.seed;
            if (cross_cmd->count("--sample")) co.sample = o.sample;
            co.sink = [&](const CrosscheckRecord& r) { emit(out, to_json(r, F)); };
            const CrosscheckReport rep = crosscheck(b, co, F);
            emit(out, {{"summary",
                        {{"total", rep.total},
                         {"agreements", rep.agreements},
                         {"disagreements", rep.disagreements.size()}}}});
        } else if (hilbert_cmd->parsed()) {
            emit(out, {{"symbol", F.hilbert(F.parse(o.a), F.parse(o.b))}});
        }
    } catch (const DomainError& e) {
        emit(out, {{"error", e.what()}});
        return 1;
    } catch (const json::exception& e) {
        emit(out, {{"error", e.what()}});
        return 1;
    }
    return 0;
}

}  // namespace dyadic
