#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cosep/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact coseparability and relative cohomology of finite-dimensional corings"};
    app.require_subcommand(1);

    cosep::CommandRequest req;
    std::string format = "human";
    if (const char* env = std::getenv("COSEP_BUDGET")) req.budget = std::strtoull(env, nullptr, 10);

    auto add = [&](const std::string& name, const std::string& help, bool pair, bool degrees) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", req.path, "definition file")->required();
        if (pair) {
            sub->add_option("--n", req.n, "source bicomodule (regular, zero, induced:<name> or a file name)");
            sub->add_option("--m", req.m, "target bicomodule");
        }
        if (degrees) sub->add_option("--max-degree", req.max_degree, "highest cohomological degree");
        sub->add_option("--budget", req.budget, "cap on term dimensions (env COSEP_BUDGET)");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json"}));
        sub->callback([&req, name] { req.command = name; });
    };
    add("validate", "check all axioms", false, false);
    add("cosep", "decide coseparability", false, false);
    add("spaces", "coderivation and cointegration dimensions", true, false);
    add("ext", "relative Ext and H dimensions", true, true);
    add("universal", "universal cointegration and coderivation", true, false);
    add("battery", "all equivalent coseparability predicates", false, false);
    add("coext", "separability of a coalgebra coextension", false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(cosep::ExitCode::Parse);
    }

    std::ifstream in(req.path, std::ios::binary);
    std::string text;
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::cerr << "cannot read " << req.path << "\n";
        return static_cast<int>(cosep::ExitCode::Parse);
    }

    cosep::CommandResult res = cosep::run_command(req, text);
    std::cout << cosep::render(res.report, format == "json" ? cosep::Format::Json : cosep::Format::Human);
    return static_cast<int>(res.exit);
}
