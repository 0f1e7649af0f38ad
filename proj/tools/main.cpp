#include "finsler/commands.hpp"
#include "finsler/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Ricci curvature engine for homogeneous Finsler spaces with "
                 "square-type (alpha,beta)-metrics"};
    app.require_subcommand(1);

    std::string metric = "square";
    std::string emit = "object";
    std::string zeta_source = "generic";
    std::string input;
    std::string direction;
    bool vanishing_s = false;
    int grid = 100;
    double tol = finsler::kPoleTol;

    auto* verify = app.add_subcommand("verify-zeta",
                                      "Compare the derived zeta coefficients against the "
                                      "published closed-form table");
    verify->add_option("--metric", metric, "square | randers-square")->required();
    verify->add_option("--emit", emit, "object | table");

    auto* ricci = app.add_subcommand("ricci", "Ricci curvature in one direction");
    ricci->add_option("--input", input, "algebra specification file")->required();
    ricci->add_option("--direction", direction, "comma-separated direction vector")->required();
    ricci->add_option("--zeta-source", zeta_source, "generic | paper-table");
    ricci->add_flag("--vanishing-s", vanishing_s, "use the reduced vanishing-S formula");
    ricci->add_option("--emit", emit, "object | table");
    ricci->add_option("--tol", tol, "pole tolerance");

    auto* scan = app.add_subcommand("scan", "Ricci sign scan over a direction grid");
    scan->add_option("--input", input, "algebra specification file")->required();
    scan->add_option("--grid", grid, "number of sampled directions");
    scan->add_option("--zeta-source", zeta_source, "generic | paper-table");
    scan->add_option("--emit", emit, "object | table");
    scan->add_option("--tol", tol, "pole tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            finsler::VerifyZetaOptions o;
            o.metric = metric;
            o.emit = finsler::emit_from_string(emit);
            return finsler::run_verify_zeta(o, std::cout);
        }
        if (ricci->parsed()) {
            finsler::RicciOptions o;
            o.input = input;
            o.direction = finsler::parse_direction(direction);
            o.zeta_source = finsler::zeta_source_from_string(zeta_source);
            o.vanishing_s = vanishing_s;
            o.emit = finsler::emit_from_string(emit);
            o.tol = tol;
            return finsler::run_ricci(o, std::cout);
        }
        finsler::ScanOptions o;
        o.input = input;
        o.grid = grid;
        o.zeta_source = finsler::zeta_source_from_string(zeta_source);
        o.emit = finsler::emit_from_string(emit);
        o.tol = tol;
        return finsler::run_scan(o, std::cout);
    } catch (const finsler::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return finsler::kExitValidation;
    } catch (const finsler::MathDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return finsler::kExitMathDomain;
    }
}
