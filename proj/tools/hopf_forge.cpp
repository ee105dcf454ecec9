#include <CLI11.hpp>

#include <iostream>

#include "hforge/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"hopf-forge: build and verify the Hopf algebras covering crossed products"};
    app.require_subcommand(1);
    hforge::CliOptions opt;
    std::string depth;

    auto add = [&](const char* name, const char* help, const char* what) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", opt.input, what)->required();
        sub->add_option("--out", opt.out, "write the certificate JSON here");
        sub->add_option("--depth", depth, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
        sub->add_flag("--json-only", opt.json_only, "print no summary");
        sub->add_flag_callback("--no-parallel", [&] { opt.parallel = false; }, "run every sweep on one thread");
        return sub;
    };
    auto* construct = add("construct", "build and verify one object (A, H or X)", "scenario file");
    construct->add_option("--emit", opt.emit, "also write the constructed Hopf structure here");
    add("realize", "run the full pipeline down to the crossed product", "scenario file");
    add("cocycle-order", "class order m and witness f of the cocycle", "scenario file");
    add("verify", "re-check a serialized algebra or Hopf structure", "structure file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opt.command = app.get_subcommands().front()->get_name();
    if (depth == "exhaustive") opt.depth = hforge::Depth::exhaustive;
    if (depth == "sampled") opt.depth = hforge::Depth::sampled;
    return hforge::run_cli(opt, std::cout, std::cerr);
}
