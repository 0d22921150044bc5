#include "thl/commands.hpp"
#include "thl/config.hpp"
#include "thl/errors.hpp"
#include "thl/fixtures.hpp"
#include "thl/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Twisted and crossed-product cyclic homology over Q"};
    std::string command, config, twist, lambda_coinv, format, fixture;
    std::optional<std::size_t> max_degree;

    std::string names;
    for (const auto& n : thl::command_names()) names += (names.empty() ? "" : ", ") + n;
    std::string fixtures;
    for (const auto& f : thl::builtin_fixtures()) fixtures += (fixtures.empty() ? "" : ", ") + f.name;

    app.add_option("command", command, "One of: " + names)->required();
    app.add_option("--config", config, "Job file (JSON)");
    app.add_option("--fixture", fixture, "Built-in example: " + fixtures);
    app.add_option("--max-degree", max_degree, "Report homology through this degree");
    app.add_option("--twist", twist, "Group element used by single-twist commands");
    app.add_option("--lambda-coinv", lambda_coinv, "Divide the Connes complex by G")->check(CLI::IsMember({"on", "off"}));
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (config.empty() == fixture.empty()) throw thl::ParseError("give exactly one of --config and --fixture");
        thl::JobConfig job = fixture.empty() ? thl::load_config(config) : thl::fixture_job(fixture);
        if (max_degree) job.task.max_degree = max_degree;
        if (!twist.empty()) job.task.twist = twist;
        if (!lambda_coinv.empty()) job.task.lambda_coinvariants = lambda_coinv == "on";
        if (!format.empty()) job.task.format = format;

        thl::Report rep = thl::run(command, job);
        std::cout << (job.task.format == "machine" ? thl::emit_machine(rep) : thl::emit_human(rep));
        return rep.passed() ? 0 : 1;
    } catch (const thl::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const thl::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const thl::ReducedBasisError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const thl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
