#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "bsaf/attack_split.hpp"
#include "bsaf/combined_split.hpp"
#include "bsaf/harness.hpp"
#include "bsaf/io.hpp"
#include "bsaf/split_finder.hpp"
#include "bsaf/support_split.hpp"

namespace bsaf::cli {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Framework load_framework(const std::string& path, bool allow_dummies = false) {
    try {
        return parse_framework(read_file(path), ParseOptions{allow_dummies});
    } catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

Extension load_cut(const std::string& path, const Framework& f) {
    try {
        return parse_cut(read_file(path), f);
    } catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

const std::map<std::string, Semantics>& semantics_names() {
    static const std::map<std::string, Semantics> names = [] {
        std::map<std::string, Semantics> m;
        for (Semantics s : kAllSemantics) m.emplace(std::string(to_string(s)), s);
        return m;
    }();
    return names;
}

const std::map<std::string, SplitMode>& mode_names() {
    static const std::map<std::string, SplitMode> names = {
        {"attack", SplitMode::Attack}, {"support", SplitMode::Support}, {"combined", SplitMode::Combined}};
    return names;
}

void report_invalid_cut(std::ostream& err, const Framework& f, const InvalidCut& e) {
    err << "error: " << e.what() << '\n';
    for (const Link& l : e.offending()) err << "  offending: " << format_link(f.table(), l) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Splitting-based reasoning for bipolar set-based argumentation frameworks", "bsaf"};
    app.require_subcommand(1);

    std::string sem_text;
    std::string file;
    std::string cut_file;
    bool allow_dummies = false;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the extensions of a framework");
    enumerate_cmd->add_option("--semantics", sem_text, "cf, adm, com, grd, pref or stb")
        ->required()
        ->check(CLI::IsMember(semantics_names()));
    enumerate_cmd->add_flag("--allow-dummies", allow_dummies, "Accept *0, *1, *2 declarations");
    enumerate_cmd->add_option("FILE", file)->required();

    auto* split_cmd = app.add_subcommand("split", "Cut discovery and split solving");
    split_cmd->require_subcommand(1);
    auto* find_cmd = split_cmd->add_subcommand("find", "List candidate cuts");
    find_cmd->add_option("FILE", file)->required();

    std::string mode_text = "combined";
    auto* solve_cmd = split_cmd->add_subcommand("solve", "Solve through a cut");
    solve_cmd->add_option("--semantics", sem_text)->required()->check(CLI::IsMember(semantics_names()));
    solve_cmd->add_option("--cut", cut_file)->required();
    solve_cmd->add_option("--mode", mode_text, "attack, support or combined")
        ->check(CLI::IsMember(mode_names()));
    solve_cmd->add_option("FILE", file)->required();

    std::string extension_text;
    auto* trace_cmd = split_cmd->add_subcommand("trace", "Print every pipeline stage for one E1");
    trace_cmd->add_option("--cut", cut_file)->required();
    trace_cmd->add_option("--extension", extension_text, "E1 as comma-separated names, {} for none")->required();
    trace_cmd->add_option("FILE", file)->required();

    auto* check_cmd = app.add_subcommand("check", "Validate a framework and optionally a cut");
    check_cmd->add_option("--cut", cut_file);
    check_cmd->add_flag("--allow-dummies", allow_dummies, "Accept *0, *1, *2 declarations");
    check_cmd->add_option("FILE", file)->required();

    GenConfig gen;
    bool cyclic = false;
    auto* gen_cmd = app.add_subcommand("gen", "Print a random framework");
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--args", gen.n_args)->check(CLI::Range(std::size_t{1}, kMaxArguments - 3));
    gen_cmd->add_option("--p-att", gen.p_attack)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--p-sup", gen.p_support)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--max-tail", gen.max_tail)->check(CLI::PositiveNumber);
    gen_cmd->add_flag("--cyclic-supports", cyclic, "Allow support cycles");

    CampaignConfig campaign;
    auto* diff_cmd = app.add_subcommand("diff", "Differential fuzz campaign against the oracle");
    diff_cmd->add_option("--semantics", sem_text)->required()->check(CLI::IsMember(semantics_names()));
    diff_cmd->add_option("--seed", campaign.seed);
    diff_cmd->add_option("--count", campaign.count);
    diff_cmd->add_option("--max-args", campaign.max_args)->check(CLI::Range(std::size_t{2}, std::size_t{16}));

    auto* bench_cmd = app.add_subcommand("bench", "Time oracle against split solve");
    bench_cmd->add_option("--semantics", sem_text)->required()->check(CLI::IsMember(semantics_names()));
    bench_cmd->add_option("--cut", cut_file)->required();
    bench_cmd->add_option("FILE", file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Semantics sem = sem_text.empty() ? Semantics::Admissible : semantics_names().at(sem_text);
    const SplitMode mode = mode_names().at(mode_text);
    campaign.semantics = sem;

    Framework f;
    try {
        if (enumerate_cmd->parsed()) {
            f = load_framework(file, allow_dummies);
            out << serialize_extensions(f.table(), enumerate(f, sem));
        } else if (find_cmd->parsed()) {
            f = load_framework(file);
            const std::vector<Extension> cuts = enumerate_cuts(f);
            if (cuts.empty()) out << "NONE\n";
            for (const Extension& c : cuts) out << format_extension(f.table(), c) << '\n';
        } else if (solve_cmd->parsed()) {
            f = load_framework(file);
            const Extension a1 = load_cut(cut_file, f);
            if (sem == Semantics::ConflictFree) {
                err << "error: no splitting result covers cf\n";
                return 2;
            }
            const SplitSolution sol = solve_split(mode, f, a1, sem);
            if (sol.possibly_incomplete) out << "# warning: sound but possibly incomplete under this semantics\n";
            out << serialize_extensions(f.table(), sol.extensions);
        } else if (trace_cmd->parsed()) {
            f = load_framework(file);
            const Extension a1 = load_cut(cut_file, f);
            const Framework whole =
                f.rebased(with_dummies(f.table_ptr(), {ArgKind::Dummy0, ArgKind::Dummy1, ArgKind::Dummy2}));
            const SplitSpec spec = derive_splitting(whole, a1);
            Extension e1;
            try {
                e1 = parse_extension(extension_text, f);
            } catch (const ParseError& e) {
                throw Error(std::string("--extension: ") + e.what());
            }
            if (!e1.subset_of(a1)) throw Error("--extension must be a subset of the cut");
            out << serialize_trace(build_reduced(spec, e1));
        } else if (check_cmd->parsed()) {
            f = load_framework(file, allow_dummies);
            out << "ok: " << f.args().size() << " arguments, " << f.attacks().size() << " attacks, "
                << f.supports().size() << " supports\n";
            if (!cut_file.empty()) {
                const Extension a1 = load_cut(cut_file, f);
                const SplitSpec spec = derive_splitting(f, a1);
                out << "ok: cut " << format_set(f.table(), a1) << " with " << spec.r3.size() << " crossing attacks, "
                    << spec.s3.size() << " crossing supports\n";
                auto accepted = [&](auto derive) {
                    try {
                        derive(f, a1);
                        return "yes";
                    } catch (const InvalidCut&) {
                        return "no";
                    }
                };
                out << "attack splitting: " << accepted(derive_attack_splitting) << '\n';
                out << "support splitting: " << accepted(derive_support_splitting) << '\n';
            }
        } else if (gen_cmd->parsed()) {
            gen.support_dag = !cyclic;
            out << serialize_framework(gen_random(gen));
        } else if (diff_cmd->parsed()) {
            const CampaignResult r = run_campaign(campaign);
            out << "semantics=" << to_string(campaign.semantics) << " cases=" << r.cases << " equal=" << r.equal
                << " sound_subset=" << r.sound_subset << " violations=" << r.failures.size() << '\n';
            for (const CampaignFailure& fail : r.failures) {
                const Framework bad = parse_framework(fail.framework);
                out << "# failure: seed " << fail.seed << ", mode " << to_string(fail.report.mode) << ", verdict "
                    << to_string(fail.report.verdict) << ", cut " << format_set(bad.table(), fail.report.cut) << '\n'
                    << fail.framework << "# missing\n"
                    << serialize_extensions(bad.table(), fail.report.missing) << "# extra\n"
                    << serialize_extensions(bad.table(), fail.report.extra);
            }
            return r.failures.empty() ? 0 : 1;
        } else if (bench_cmd->parsed()) {
            f = load_framework(file);
            const Extension a1 = load_cut(cut_file, f);
            const BenchRecord rec = bench(f, a1, sem);
            out << bench_csv_header() << '\n' << to_csv(rec) << '\n';
        }
    } catch (const InvalidCut& e) {
        report_invalid_cut(err, f, e);
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace bsaf::cli
