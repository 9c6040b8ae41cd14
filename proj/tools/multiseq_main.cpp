// multiseq: exact multiplicity-sequence toolkit for homogeneous ideals.
//
//   multiseq <subcommand> <file> [--seed N] [--char P] [--route A|B|C]
//            [--oracle] [--json] [--no-timings]
//
// Subcommands: multseq, jmult, endpoints, check-integral, sv, hilbert.
// The file supplies the ring, the ideals and the task arguments; CLI flags
// override file options. Exit codes: 0 ok, 2 parse error, 3 precondition
// violation, 4 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "multiseq/task.hpp"

namespace {

int run(const std::string& subcommand, const std::string& path,
        const multiseq::RunOverrides& overrides, bool as_json) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "multiseq: cannot open '" << path << "'\n";
        return multiseq::exit_precondition;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    multiseq::ProblemFile file = multiseq::parse_problem_file(buf.str());
    multiseq::RunOverrides o = overrides;
    o.task_name = subcommand;
    if (!file.task.name.empty() && file.task.name != subcommand)
        std::cerr << "multiseq: note: file task '" << file.task.name << "' overridden by '"
                  << subcommand << "'\n";
    multiseq::Json report = multiseq::run_task(std::move(file), o);
    std::cout << multiseq::emit_report(report, as_json);
    return multiseq::exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicity sequences, integral dependence and "
                 "intersection degrees for homogeneous ideals"};
    app.require_subcommand(1);

    std::string path;
    unsigned long char_override = 0;
    bool have_char = false;
    std::uint64_t seed_override = 0;
    bool have_seed = false;
    std::string route;
    bool oracle = false;
    bool as_json = false;
    bool no_timings = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "problem file (text or JSON)")->required();
        cmd->add_option("--char", char_override, "coefficient field characteristic (0 = Q)")
            ->each([&](const std::string&) { have_char = true; });
        cmd->add_option("--seed", seed_override, "master seed for randomized routes")
            ->each([&](const std::string&) { have_seed = true; });
        cmd->add_option("--route", route, "sequence route: A, B or C")
            ->check(CLI::IsMember({"A", "B", "C"}));
        cmd->add_flag("--oracle", oracle, "run the independent oracle routes as cross-checks");
        cmd->add_flag("--json", as_json, "emit the machine-readable JSON report");
        cmd->add_flag("--no-timings", no_timings, "omit timings (byte-stable output)");
    };

    for (const char* name : {"multseq", "jmult", "endpoints", "check-integral", "sv", "hilbert"})
        add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);

    // accepted for compatibility; execution is sequential either way
    if (const char* threads = std::getenv("MULTISEQ_THREADS"); threads && *threads) {
        (void)threads;
    }

    multiseq::RunOverrides o;
    if (have_char) o.characteristic = char_override;
    if (have_seed) o.seed = seed_override;
    if (!route.empty()) o.route = route[0];
    if (oracle) o.oracle = true;
    o.include_timings = !no_timings;

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        return run(sub, path, o, as_json);
    } catch (const multiseq::parse_error& e) {
        std::cerr << "multiseq: parse error: " << e.what() << "\n";
        return multiseq::exit_parse_error;
    } catch (const multiseq::precondition_error& e) {
        std::cerr << "multiseq: precondition violation: " << e.what() << "\n";
        return multiseq::exit_precondition;
    } catch (const multiseq::internal_error& e) {
        std::cerr << "multiseq: internal inconsistency: " << e.what() << "\n";
        return multiseq::exit_internal;
    }
}
