#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdescent/cover_search.hpp"
#include "kdescent/descent.hpp"
#include "kdescent/element_text.hpp"
#include "kdescent/errors.hpp"
#include "kdescent/factor.hpp"
#include "kdescent/report.hpp"
#include "kdescent/residue.hpp"

namespace kdescent::cli {

namespace {

using nlohmann::json;

// Raised while validating arguments; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EisensteinRational element_arg(const std::string& text) {
    try {
        return parse_element(text);
    } catch (const ParseError& e) {
        throw UsageError("cannot parse element \"" + text + "\": " + e.what());
    }
}

mpz_class integer_arg(const std::string& text) {
    mpz_class v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw UsageError("not an integer: \"" + text + "\"");
    return v;
}

Point point_arg(const std::string& text) {
    if (text == "inf" || text == "infinity")
        return Infinity{};
    return element_arg(text);
}

void check_exponent(unsigned k, const char* flag) {
    if (k < 1 || k > VerificationReport::kMaxExponent)
        throw UsageError(std::string(flag) + " must be in [1, 8]");
}

// Both lemmas are asserted at 81; no-solution then holds for every larger
// power of 3 as well, since solutions project down.
bool expected_to_hold(const VerifyCommand& cmd) {
    return cmd.lemma == LemmaId::NoSolution ? cmd.k >= 4 : cmd.k == 4;
}

struct Emitter {
    const Options& options;
    std::ostream& out;

    void operator()(const json& certificate) const {
        const std::string text = certificate.dump(2);
        out << text << '\n';
        if (options.json_path) {
            std::ofstream file(*options.json_path);
            if (!file)
                throw std::runtime_error("cannot write " + *options.json_path);
            file << text << '\n';
        }
    }
};

int run_verify(const VerifyCommand& cmd, const Emitter& emit, std::ostream& err) {
    check_exponent(cmd.k, "--k");
    const auto report = cmd.lemma == LemmaId::NoSolution ? verify_no_solution(cmd.k, emit.options.jobs)
                                                         : verify_cube_closure(cmd.k, emit.options.jobs);
    emit(to_json(report));
    if (!report.holds && expected_to_hold(cmd)) {
        err << to_string(cmd.lemma) << " was expected to hold at k = " << cmd.k << '\n';
        return kFailed;
    }
    return kOk;
}

int run_minimal_modulus(const MinimalModulusCommand& cmd, const Emitter& emit) {
    check_exponent(cmd.max_k, "--max-k");
    const auto start = std::chrono::steady_clock::now();
    json checked = json::array();
    json minimal = nullptr;
    for (unsigned k = 1; k <= cmd.max_k; ++k) {
        const auto report = verify_no_solution(k, emit.options.jobs);
        checked.push_back({{"holds", report.holds}, {"k", k}});
        if (report.holds) {
            minimal = k;
            break;
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    emit(make_certificate({{"lemma", "no-solution"}, {"max_k", cmd.max_k}},
                          {{"checked", std::move(checked)}, {"minimal_k", std::move(minimal)}}, elapsed.count()));
    return kOk;
}

int run_classify(const ClassifyCommand& cmd, const Emitter& emit, std::ostream& err) {
    const Point point = point_arg(cmd.element);
    const auto c = classify(point);
    json result = to_json(c);
    int status = kOk;
    if (const auto* a = std::get_if<EisensteinRational>(&point)) {
        if (c.kind == DescentKind::Disconnected) {
            const auto cube = is_cube(*a);
            result["cube_root"] = format_element(*cube.root);
        } else if (c.kind == DescentKind::Descends) {
            const bool commutes = verify_galois_commute(*a, *c.witness);
            result["galois_commutes"] = commutes;
            if (!commutes) {
                err << "internal inconsistency: commutation identity failed\n";
                status = kFailed;
            }
        }
    }
    emit(make_certificate({{"element", format_point(point)}}, std::move(result), 0.0));
    return status;
}

int run_solve(const SolveCommand& cmd, const Emitter& emit, std::ostream& err) {
    const auto a = element_arg(cmd.element);
    const auto w = solve_g(a);
    json result = {{"solvable", w.has_value()}};
    int status = kOk;
    if (w) {
        result["witness"] = {{"x", w->x().get_str()}, {"y", w->y().get_str()}};
        if (eval_g(w->x(), w->y()) != a) {
            err << "internal inconsistency: g(x, y) != a\n";
            status = kFailed;
        }
    }
    emit(make_certificate({{"element", format_element(a)}}, std::move(result), 0.0));
    return status;
}

int run_factor(const FactorCommand& cmd, const Emitter& emit, std::ostream& err) {
    const auto a = element_arg(cmd.element);
    if (!a.is_integral())
        throw UsageError("factor expects an Eisenstein integer");
    if (a.is_zero())
        throw UsageError("0 has no factorization");
    const auto f = factor(a.num());
    json factors = json::array();
    for (const auto& pp : f.factors)
        factors.push_back({{"exponent", pp.exponent},
                           {"norm", pp.prime.norm().get_str()},
                           {"prime", format_element(pp.prime)}});
    const bool round_trip = f.expand() == a.num();
    emit(make_certificate({{"element", format_element(a)}},
                          {{"factors", std::move(factors)}, {"round_trip", round_trip}, {"unit", format_element(f.unit)}},
                          0.0));
    if (!round_trip) {
        err << "internal inconsistency: factorization does not reproduce the input\n";
        return kFailed;
    }
    return kOk;
}

int run_reduce(const ReduceCommand& cmd, const Emitter& emit, std::ostream& err) {
    const mpz_class x = integer_arg(cmd.x);
    const mpz_class y = integer_arg(cmd.y);
    std::pair<mpz_class, mpz_class> reduced;
    bool parts = false;
    try {
        reduced = reduce_by_pi(x, y);
        parts = check_pi_divides_parts(x, y);
    } catch (const PreconditionError&) {
        throw UsageError("pi does not divide g(" + cmd.x + ", " + cmd.y + ")");
    }
    const auto pi3 = pow(EisensteinRational(EisensteinInt::pi()), 3);
    const bool identity = eval_g(reduced.first, reduced.second) * pi3 == eval_g(x, y);
    emit(make_certificate({{"x", x.get_str()}, {"y", y.get_str()}},
                          {{"identity_holds", identity},
                           {"pi_divides_parts", parts},
                           {"x_reduced", reduced.first.get_str()},
                           {"y_reduced", reduced.second.get_str()}},
                          0.0));
    if (!identity || !parts) {
        err << "internal inconsistency in the pi-reduction\n";
        return kFailed;
    }
    return kOk;
}

int run_search(const SearchCommand& cmd, const Emitter& emit, std::ostream& err) {
    std::vector<EisensteinRational> coeffs;
    for (const auto& c : cmd.coeffs)
        coeffs.push_back(element_arg(c));
    const Polynomial f(coeffs);
    if (f.degree() < 1)
        throw UsageError("--coeffs must describe a polynomial of degree >= 1");
    if (cmd.height < 1)
        throw UsageError("--height must be at least 1");

    const auto report = search(f, cmd.height, emit.options.jobs);
    emit(to_json(report));

    const Polynomial cubic_cover({6, 0, 0, 3});
    int status = kOk;
    for (const auto& finding : report.descends) {
        if (!finding.galois_commutes) {
            err << "internal inconsistency: commutation identity failed at z0 = " << format_point(finding.z0) << '\n';
            status = kFailed;
        }
    }
    if (f.coeffs() == cubic_cover.coeffs() && !report.descends.empty()) {
        err << "t^3 = 3(z^3 + 2) produced descending points\n";
        status = kFailed;
    }
    return status;
}

int run_dump_set(const DumpSetCommand& cmd, const Emitter& emit) {
    check_exponent(cmd.k, "--k");
    const ResidueRing ring(cmd.k);
    ResidueSet set(ring);
    if (cmd.set_name == "image-g")
        set = image_of_g(ring, emit.options.jobs);
    else if (cmd.set_name == "cubes")
        set = cube_set(ring, emit.options.jobs);
    else if (cmd.set_name == "rhs")
        set = rhs_set(ring, emit.options.jobs);
    else
        throw UsageError("unknown set \"" + cmd.set_name + "\" (expected image-g, cubes or rhs)");

    if (cmd.path == "-") {
        write_csv(emit.out, set, cmd.set_name);
        return kOk;
    }
    std::ofstream file(cmd.path);
    if (!file)
        throw std::runtime_error("cannot write " + cmd.path);
    write_csv(file, set, cmd.set_name);
    emit(make_certificate({{"k", cmd.k}, {"set", cmd.set_name}}, {{"path", cmd.path}, {"size", set.size()}}, 0.0));
    return kOk;
}

} // namespace

int run(const Command& command, const Options& options, std::ostream& out, std::ostream& err) {
    const Emitter emit{options, out};
    try {
        return std::visit(
            [&](const auto& cmd) -> int {
                using T = std::decay_t<decltype(cmd)>;
                if constexpr (std::is_same_v<T, VerifyCommand>)
                    return run_verify(cmd, emit, err);
                else if constexpr (std::is_same_v<T, MinimalModulusCommand>)
                    return run_minimal_modulus(cmd, emit);
                else if constexpr (std::is_same_v<T, ClassifyCommand>)
                    return run_classify(cmd, emit, err);
                else if constexpr (std::is_same_v<T, SolveCommand>)
                    return run_solve(cmd, emit, err);
                else if constexpr (std::is_same_v<T, FactorCommand>)
                    return run_factor(cmd, emit, err);
                else if constexpr (std::is_same_v<T, ReduceCommand>)
                    return run_reduce(cmd, emit, err);
                else if constexpr (std::is_same_v<T, SearchCommand>)
                    return run_search(cmd, emit, err);
                else
                    return run_dump_set(cmd, emit);
            },
            command);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kFailed;
    }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arithmetic descent for the Kummer cover t^3 = z over Q(w)", "kdescent"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may also follow the subcommand
    Options options;
    std::string json_path;
    app.add_option("--json", json_path, "Also write the certificate to this file");
    app.add_option("--jobs", options.jobs, "Worker threads (0 = all hardware threads)")->capture_default_str();

    std::optional<Command> command;

    std::string lemma;
    unsigned k = 4;
    auto* verify = app.add_subcommand("verify", "Exhaustively check a residue-ring lemma modulo 3^k");
    verify->add_option("lemma", lemma, "cube-closure | no-solution")->required();
    verify->add_option("--k", k, "Modulus exponent (1..8)")->capture_default_str();

    unsigned max_k = 6;
    auto* minimal = app.add_subcommand("minimal-modulus", "Smallest k <= max-k for which no-solution holds");
    minimal->add_option("--max-k", max_k, "Largest exponent to try (1..8)")->capture_default_str();

    std::string element;
    auto* classify_cmd = app.add_subcommand("classify", "Classify the fiber of t^3 = z over a point");
    classify_cmd->add_option("element", element, "Element of Q(w), or inf")->required();
    auto* solve_cmd = app.add_subcommand("solve", "Find rationals x, y with g(x, y) = a");
    solve_cmd->add_option("element", element, "Element of Q(w)")->required();
    auto* factor_cmd = app.add_subcommand("factor", "Factor an Eisenstein integer");
    factor_cmd->add_option("element", element, "Element of Z[w]")->required();

    std::string x, y;
    auto* reduce_cmd = app.add_subcommand("reduce", "Remove a factor pi^3 from g(x, y)");
    reduce_cmd->add_option("--x", x, "Integer x")->required();
    reduce_cmd->add_option("--y", y, "Integer y")->required();

    std::vector<std::string> coeffs;
    unsigned long height = 50;
    auto* search_cmd = app.add_subcommand("search", "Search t^3 = f(z) for descending rational points");
    search_cmd->add_option("--coeffs", coeffs, "c0,c1,...,cn (element expressions)")->required()->delimiter(',');
    search_cmd->add_option("--height", height, "Height bound H")->capture_default_str();

    std::string set_name, path = "-";
    auto* dump_cmd = app.add_subcommand("dump-set", "Write an image set as CSV");
    dump_cmd->add_option("set", set_name, "image-g | cubes | rhs")->required();
    dump_cmd->add_option("--k", k, "Modulus exponent (1..8)")->capture_default_str();
    dump_cmd->add_option("--path", path, "Output file, - for standard output")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    if (!json_path.empty())
        options.json_path = json_path;

    if (verify->parsed()) {
        auto id = parse_lemma_id(lemma);
        if (!id) {
            err << "error: unknown lemma \"" << lemma << "\" (expected cube-closure or no-solution)\n";
            return kUsage;
        }
        command = VerifyCommand{*id, k};
    } else if (minimal->parsed()) {
        command = MinimalModulusCommand{max_k};
    } else if (classify_cmd->parsed()) {
        command = ClassifyCommand{element};
    } else if (solve_cmd->parsed()) {
        command = SolveCommand{element};
    } else if (factor_cmd->parsed()) {
        command = FactorCommand{element};
    } else if (reduce_cmd->parsed()) {
        command = ReduceCommand{x, y};
    } else if (search_cmd->parsed()) {
        command = SearchCommand{coeffs, height};
    } else {
        command = DumpSetCommand{set_name, k, path};
    }
    return run(*command, options, out, err);
}

} // namespace kdescent::cli
