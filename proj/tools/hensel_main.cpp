// Command-line front end. Talks to the library exclusively through the
// C API in hensel/hensel.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hensel/hensel.h"

namespace {

struct SystemHandle {
    hensel_system* sys = nullptr;
    ~SystemHandle() { hensel_system_free(sys); }
};

struct TextHandle {
    char* text = nullptr;
    ~TextHandle() { hensel_free_text(text); }
};

int load_system(const std::string& path, SystemHandle& handle) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return HENSEL_ERR_PARSE;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    TextHandle diag;
    int status = hensel_system_parse(buf.str().c_str(), &handle.sys, &diag.text);
    if (status != HENSEL_OK) std::cerr << "error: " << (diag.text ? diag.text : "parse failed") << "\n";
    return status;
}

int report(int status, const TextHandle& out) {
    if (status == HENSEL_OK) {
        std::cout << (out.text ? out.text : "") << "\n";
    } else {
        std::cerr << "error: " << (out.text ? out.text : "unknown failure") << "\n";
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local analysis over Z_p and F_p[[t]]: Hensel lifting, scaled inversion, "
                 "implicit functions, smoothness and nearby-point sampling"};
    app.require_subcommand(1);

    std::string file, target, params, avoid;
    int count = 1, level = 1;

    auto* lift = app.add_subcommand("lift", "unique root of the system near its base point");
    lift->add_option("file", file, "system file")->required();

    auto* solve = app.add_subcommand("solve", "solve f(x) = y for y in the maximal ideal");
    solve->add_option("file", file, "system file")->required();
    solve->add_option("--y", target, "target vector (comma-separated)")->required();

    auto* invert = app.add_subcommand("invert", "scaled local inverse at a target in e^2*m^n");
    invert->add_option("file", file, "system file")->required();
    invert->add_option("--y", target, "target vector (comma-separated)")->required();

    auto* implicit_cmd = app.add_subcommand("implicit", "implicit-function value phi(u)");
    implicit_cmd->add_option("file", file, "system file")->required();
    implicit_cmd->add_option("--u", params, "parameter vector (comma-separated)")->required();

    auto* smooth = app.add_subcommand("smooth", "Jacobian rank test against the claimed dimension");
    smooth->add_option("file", file, "system file")->required();

    auto* sample = app.add_subcommand("sample", "certified points of the variety near its base point");
    sample->add_option("file", file, "system file")->required();
    sample->add_option("--m", count, "number of points")->required();
    sample->add_option("--level", level, "minimum displacement valuation")->required();
    sample->add_option("--avoid", avoid, "polynomial the points must not satisfy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : HENSEL_ERR_PARSE;
    }

    SystemHandle sys;
    int status = load_system(file, sys);
    if (status != HENSEL_OK) return status;

    TextHandle out;
    if (lift->parsed()) {
        status = hensel_lift(sys.sys, &out.text);
    } else if (solve->parsed()) {
        status = hensel_solve(sys.sys, target.c_str(), &out.text);
    } else if (invert->parsed()) {
        status = hensel_invert(sys.sys, target.c_str(), &out.text);
    } else if (implicit_cmd->parsed()) {
        status = hensel_implicit(sys.sys, params.c_str(), &out.text);
    } else if (smooth->parsed()) {
        status = hensel_smooth(sys.sys, &out.text);
    } else if (sample->parsed()) {
        status = hensel_sample(sys.sys, count, level, sample->count("--avoid") ? avoid.c_str() : nullptr,
                               &out.text);
    }
    return report(status, out);
}
