// qwalk: build, verify, evolve and search exact Grover-walk states on Z^d.
//
// All amplitudes are Gaussian rationals and every check is exact; documents
// carry rationals as strings, never as floating point.

#include "qwalk/qwalk.hpp"
#include "qwalk/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace qwalk;

constexpr int exit_ok = 0;
constexpr int exit_verify_fail = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

Json read_json(const std::string& path) {
    try {
        if (path == "-")
            return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in)
            throw DocumentError("cannot open input file '" + path + "'");
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw DocumentError("cannot open output file '" + path + "'");
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct BuildArgs {
    std::string family;
    int d = 2;
    std::string lambda = "+1";
    std::string in = "-";
    std::string out = "-";
};

int run_build(const BuildArgs& a) {
    StateDocument doc{WaveFunction(1), ShiftKind::moving, std::nullopt};
    if (a.family == "moving-min") {
        Eigenvalue lam = parse_lambda(a.lambda);
        doc = {moving_min_state(a.d, lam), ShiftKind::moving, lam};
    } else if (a.family == "flipflop-min") {
        Eigenvalue lam = parse_lambda(a.lambda);
        doc = {flipflop_min_state(a.d, lam), ShiftKind::flipflop, lam};
    } else if (a.family == "nine-point") {
        doc = {nine_point_state(), ShiftKind::moving, Eigenvalue::plus_one()};
    } else if (a.family == "convolve") {
        auto g = g_map_from_json(read_json(a.in));
        doc = {convolve_moving_d2(g), ShiftKind::moving, Eigenvalue::plus_one()};
    } else {
        throw DocumentError("unknown family '" + a.family + "'");
    }
    write_text(a.out, dump(state_to_json(doc)));
    return exit_ok;
}

struct VerifyArgs {
    std::string in = "-";
    std::string lambda; // empty: take from document
    std::string shift;  // empty: take from document
};

int run_verify(const VerifyArgs& a) {
    StateDocument doc = state_from_json(read_json(a.in));
    ShiftKind shift = a.shift.empty() ? doc.shift : parse_shift(a.shift);
    std::optional<Eigenvalue> lambda =
        a.lambda.empty() ? doc.lambda : parse_lambda(a.lambda);
    if (!lambda)
        throw DocumentError("no eigenvalue: pass --lambda or set it in the document");

    std::cout << "support-size: " << doc.psi.support_size() << "\n";
    if (doc.psi.is_zero()) {
        std::cout << "state: zero (not an admissible eigenstate)\nRESULT: FAIL\n";
        return exit_verify_fail;
    }

    bool ok = true;
    Coin coin = grover_coin(doc.psi.dim());
    WaveFunction res = eigen_residual(doc.psi, *lambda, coin, shift);
    if (res.is_zero()) {
        std::cout << "eigen-residual (shift=" << to_string(shift)
                  << ", lambda=" << to_string(*lambda) << "): PASS\n";
    } else {
        ok = false;
        std::ostringstream os;
        os << res.entries().begin()->first;
        std::cout << "eigen-residual (shift=" << to_string(shift)
                  << ", lambda=" << to_string(*lambda)
                  << "): FAIL, first nonzero at " << os.str() << "\n";
    }

    auto report = [&](const char* name, const StructureReport& r) {
        if (r.passed()) {
            std::cout << name << ": PASS\n";
        } else {
            ok = false;
            std::ostringstream os;
            os << r.violations.front().x;
            std::cout << name << ": FAIL, " << r.violations.size()
                      << " violation(s), first at " << os.str() << " axis "
                      << r.violations.front().axis + 1 << " ("
                      << r.violations.front().what << ")\n";
        }
    };
    report("gamma-relations", check_gamma_relations(doc.psi, *lambda, shift));
    try {
        report("endpoint-structure", check_support_structure(doc.psi, *lambda, shift));
    } catch (const std::invalid_argument& e) {
        ok = false;
        std::cout << "endpoint-structure: FAIL (" << e.what() << ")\n";
    }
    if (is_stationary_measure(doc.psi, coin, shift, 10)) {
        std::cout << "stationary-measure (n<=10): PASS\n";
    } else {
        ok = false;
        std::cout << "stationary-measure (n<=10): FAIL\n";
    }
    std::cout << (ok ? "RESULT: PASS\n" : "RESULT: FAIL\n");
    return ok ? exit_ok : exit_verify_fail;
}

struct EvolveArgs {
    std::string in = "-";
    std::string out = "-";
    std::string shift; // empty: take from document
    std::uint64_t n = 0;
};

int run_evolve(const EvolveArgs& a) {
    StateDocument doc = state_from_json(read_json(a.in));
    ShiftKind shift = a.shift.empty() ? doc.shift : parse_shift(a.shift);
    Coin coin = grover_coin(doc.psi.dim());
    WaveFunction out = evolve(doc.psi, coin, shift, a.n);
    Json j;
    j["n"] = a.n;
    j["state"] = state_to_json(StateDocument{out, shift, doc.lambda});
    j["measure"] = measure_to_json(to_measure(out));
    write_text(a.out, dump(j));
    return exit_ok;
}

struct SearchArgs {
    int d = 1;
    std::string lambda = "+1";
    std::string shift = "moving";
    int max_size = 1;
    int radius = 1;
    int workers = 1;
    std::uint64_t budget = 0;
    std::string out = "-";
};

int run_search(const SearchArgs& a) {
    Eigenvalue lam = parse_lambda(a.lambda);
    ShiftKind shift = parse_shift(a.shift);
    SearchResult r = min_support_search(a.d, lam, grover_coin(a.d), shift,
                                        a.max_size, a.radius, a.workers,
                                        a.budget);
    write_text(a.out, dump(search_result_to_json(r)));
    if (r.budget_exhausted) {
        std::cerr << "search: budget of " << a.budget
                  << " candidate solves exhausted after scanning "
                  << r.candidates_scanned << " candidates (sizes <= "
                  << r.sizes_exhausted << " complete)\n";
        return exit_budget;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Grover-walk states on Z^d: catalog construction, "
                 "eigenstate verification, evolution, minimal-support search"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand(
        "build", "emit a catalog state as a JSON state document");
    build->add_option("--family", build_args.family,
                      "moving-min|flipflop-min|nine-point|convolve")
        ->required();
    build->add_option("--d", build_args.d, "lattice dimension");
    build->add_option("--lambda", build_args.lambda, "eigenvalue, +1 or -1");
    build->add_option("--in", build_args.in, "g document for convolve (- = stdin)");
    build->add_option("--out", build_args.out, "output file (- = stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "check a state document against the eigen-equations");
    verify->add_option("--in", verify_args.in, "state document (- = stdin)");
    verify->add_option("--lambda", verify_args.lambda,
                       "eigenvalue override, +1 or -1");
    verify->add_option("--shift", verify_args.shift,
                       "shift override, moving|flipflop");

    EvolveArgs evolve_args;
    auto* ev = app.add_subcommand("evolve", "apply n walk steps exactly");
    ev->add_option("--in", evolve_args.in, "state document (- = stdin)");
    ev->add_option("--out", evolve_args.out, "output file (- = stdout)");
    ev->add_option("--shift", evolve_args.shift, "shift override");
    ev->add_option("--n", evolve_args.n, "number of steps")->required();

    SearchArgs search_args;
    auto* search = app.add_subcommand(
        "search", "certify minimal eigenstate support inside a window");
    search->add_option("--d", search_args.d, "lattice dimension")->required();
    search->add_option("--lambda", search_args.lambda, "eigenvalue, +1 or -1");
    search->add_option("--shift", search_args.shift, "moving|flipflop");
    search->add_option("--max-size", search_args.max_size,
                       "largest support size to scan")
        ->required();
    search->add_option("--radius", search_args.radius, "window radius")
        ->required();
    search->add_option("--workers", search_args.workers, "worker threads");
    search->add_option("--budget", search_args.budget,
                       "max candidate solves, 0 = unlimited");
    search->add_option("--out", search_args.out, "output file (- = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (build->parsed())
            return run_build(build_args);
        if (verify->parsed())
            return run_verify(verify_args);
        if (ev->parsed())
            return run_evolve(evolve_args);
        if (search->parsed())
            return run_search(search_args);
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
