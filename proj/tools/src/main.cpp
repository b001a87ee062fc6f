#include <chrono>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "bohl_cli/commands.hpp"

namespace {

constexpr int kExitInvalid = 2;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohl transformation and diagonal Green function checks"};
    app.require_subcommand(1);
    std::string spec_path;
    std::optional<double> tolerance;
    std::string dump_path;
    bool json = false;
    std::string domain;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--spec", spec_path, "JSON potential specification")->required();
        sub->add_option("--tolerance", tolerance, "Replace every check tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--dump", dump_path, "Write sequence columns to this file");
        sub->add_flag("--json", json, "Emit the report as JSON");
    };
    const std::vector<std::pair<std::string, std::vector<std::string>>> tree = {
        {"discrete", {"reconstruct", "verify", "agmon"}},
        {"continuum", {"analyze", "classify", "darboux"}}};
    for (const auto& [dname, subs] : tree) {
        CLI::App* d = app.add_subcommand(dname, dname + " operator");
        d->require_subcommand(1);
        for (const std::string& sname : subs) {
            CLI::App* s = d->add_subcommand(sname);
            add_common(s);
            s->callback([&domain, &command, dname, sname] {
                domain = dname;
                command = sname;
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const bohl::cli::PotentialSpec spec = bohl::cli::load_spec(spec_path);
        const bohl::cli::Report report =
            bohl::cli::run_command(domain, command, spec, {tolerance});
        std::cout << (json ? report.to_json() : report.to_text());
        if (!dump_path.empty()) report.write_dump(dump_path);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        std::fprintf(stderr, "elapsed: %.3f ms\n", ms);
        return bohl::cli::exit_code(report);
    } catch (const bohl::Error& e) {
        std::cerr << "error (" << bohl::to_string(e.kind()) << "): " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
