#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "stabpoly/cli_run.hpp"

using stabpoly::cli::CommandRequest;

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for stable polynomials and matroid supports"};
    app.require_subcommand(1);

    CommandRequest req;
    auto common = [&](CLI::App* sc) {
        sc->add_option("--seed", req.seed, "seed for every randomized search");
        sc->add_option("--samples", req.samples, "falsifier sample budget")
            ->check(CLI::NonNegativeNumber);
        sc->add_option("--descent-iters", req.descent, "local descent rounds")
            ->check(CLI::NonNegativeNumber);
        sc->add_option("--out", req.out_path, "write the JSON report to this file");
        sc->add_option("input", req.inputs, "input JSON file")->required()->expected(1);
    };

    common(app.add_subcommand("check-stability",
                              "certify or refute a multi-affine real polynomial"));
    auto* ray = app.add_subcommand("rayleigh", "pairwise Rayleigh differences of a matroid");
    ray->add_option("--mode", req.mode, "positive-orthant or all-reals")
        ->check(CLI::IsMember({"positive-orthant", "all-reals"}));
    common(ray);
    common(app.add_subcommand("check-support",
                              "test that the support satisfies the jump system axiom"));
    auto* ver = app.add_subcommand("verify", "run a combinatorial axiom verifier");
    ver->add_option("family", req.kind, "jump, delta, or matroid")
        ->required()
        ->check(CLI::IsMember({"jump", "delta", "matroid"}));
    common(ver);
    auto* con = app.add_subcommand("construct", "build a certified-stable polynomial");
    con->add_option("kind", req.kind,
                    "matching, forest, spanning-tree, degree, principal-minors, "
                    "representable, det-pencil, or basis-generating")
        ->required();
    con->add_option("--root", req.root, "spanning-tree root vertex, 1-indexed");
    common(con);
    common(app.add_subcommand("polarize", "multi-affine symmetric lift"));
    common(app.add_subcommand("obstruct", "run the rank-3 half-plane obstruction pipeline"));
    auto* rea = app.add_subcommand("realify", "pick h + alpha*g preserving the support");
    rea->add_option("--alpha", req.alphas, "candidate rational multipliers, tried in order");
    common(rea);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }
    req.subcommand = app.get_subcommands().front()->get_name();

    stabpoly::cli::RunOutcome outcome = stabpoly::cli::run(req);
    std::string text = outcome.report.dump(2) + "\n";
    if (req.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(req.out_path, std::ios::binary);
        if (!out || !(out << text)) {
            std::cerr << "cannot write report to '" << req.out_path << "'\n";
            return 2;
        }
    }
    return outcome.exit_code;
}
