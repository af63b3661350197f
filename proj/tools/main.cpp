// Command line front end for the ergodic averaging workbench.
//
//   ergo group info      --group zd:2 --radius 8
//   ergo folner scan     --group zd:1 --measures balls:40 --K 4
//   ergo met run         --group zd:1 --rep regular --cocycle generated:point:e \
//                        --measures balls:100 --xi point:e
//   ergo fixpoint run    --group zd:1 --rep regular --cocycle generated:point:e \
//                        --measures balls:60 --target 0.15
//   ergo higson classify --group zd:1 --rep regular --cocycle generated:point:e \
//                        --xi point:e --field pairing --p 4 --radius 100
//   ergo harmonic test   --group zd:1 --field step --radius 20
//   ergo rigidity demo   --group zd:1 --field step --n-max 50
//   ergo validate        --group heisenberg --radius 12 ...
//
// Every table embeds the canonical manifest and its hash; identical manifests
// produce byte-identical output regardless of --threads.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ergo/workbench.hpp"

namespace {

void add_manifest_options(CLI::App* cmd, ergo::Manifest& m) {
    cmd->add_option("--group", m.group, "group: zd:<d> | heisenberg | lamplighter2 | bs12");
    cmd->add_option("--rep", m.rep, "representation: trivial | regular | rotation:<angles|golden>");
    cmd->add_option("--cocycle", m.cocycle, "cocycle: generated:<vec>[;<vec>] | coboundary:<vec>");
    cmd->add_option("--field", m.field, "scalar field: pairing | step | constant:<c>");
    cmd->add_option("--measures", m.measures, "measure sequence: balls:<n|lo-hi> | shalom:<K>,<n> | shifted:<a>,<b>,<k>");
    cmd->add_option("--xi", m.xi, "vector: point:e | point:<ints> | coord:<doubles>");
    cmd->add_option("--radius", m.radius, "window radius");
    cmd->add_option("--n-max", m.n_max, "sequence horizon");
    cmd->add_option("--p", m.p, "summability exponent (>= 1)");
    cmd->add_option("--K", m.K, "controlled Folner constant");
    cmd->add_option("--target", m.target, "displacement target");
    cmd->add_option("--threads", m.threads, "worker threads (never changes output bytes)");
    cmd->add_option("--format", m.format, "output format: csv | json");
}

int emit(const ergo::RunResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << result.table;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 1;
        }
        out << result.table;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ergodic averaging workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("ergo ") + ergo::kVersion);

    ergo::Manifest m;
    std::string out_path;
    int selected = -1;  // runner index

    struct Entry {
        const char* group;
        const char* verb;
        const char* help;
        ergo::RunResult (*run)(const ergo::Manifest&);
    };
    const Entry entries[] = {
        {"group", "info", "generators, ball sizes, growth diagnostics", ergo::run_group_info},
        {"folner", "scan", "controlled Folner diagnostics per measure", ergo::run_folner_scan},
        {"met", "run", "mean ergodic averages of the flattened cocycle", ergo::run_met},
        {"fixpoint", "run", "almost fixed point search (eta sequence + convexification)", ergo::run_fixpoint},
        {"higson", "classify", "variation profile and partial p-norms", ergo::run_higson_classify},
        {"harmonic", "test", "harmonic defect table for the field", ergo::run_harmonic_test},
        {"rigidity", "demo", "witness-driven Reiter measure construction", ergo::run_rigidity_demo},
    };

    int index = 0;
    for (const auto& e : entries) {
        CLI::App* parent = app.get_subcommand_no_throw(e.group);
        if (!parent) parent = app.add_subcommand(e.group, "");
        parent->require_subcommand(1);
        CLI::App* verb = parent->add_subcommand(e.verb, e.help);
        add_manifest_options(verb, m);
        verb->add_option("--out", out_path, "write the table to a file instead of stdout");
        int id = index++;
        verb->callback([&selected, id] { selected = id; });
    }

    CLI::App* val = app.add_subcommand("validate", "dry-run parse and budget projection");
    add_manifest_options(val, m);

    CLI11_PARSE(app, argc, argv);

    try {
        if (val->parsed()) {
            for (const auto& line : ergo::validate(m)) std::cout << line << "\n";
            return 0;
        }
        return emit(entries[selected].run(m), out_path);
    } catch (const ergo::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
