// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdescent/cover_search.hpp"
#include "kdescent/descent.hpp"
#include "kdescent/factor.hpp"
#include "kdescent/lemma_verifier.hpp"
#include "kdescent/report.hpp"
#include "oracles.hpp"

#ifdef KDESCENT_HAVE_CLI
#include "cli.hpp"
#endif

using namespace kdescent;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Timed {
    json certificate;
    int status;
    double seconds;
};

// Runs a command line through the tool's front end when it is built,
// otherwise through the equivalent library calls.
Timed run_command(std::vector<std::string> args, const std::function<json()>& fallback) {
    const auto start = std::chrono::steady_clock::now();
    json certificate;
    int status = 0;
#ifdef KDESCENT_HAVE_CLI
    (void)fallback;
    args.insert(args.begin(), "kdescent");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    certificate = out.str().empty() ? json() : json::parse(out.str());
#else
    (void)args;
    certificate = fallback();
#endif
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {std::move(certificate), status, elapsed.count()};
}

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

mpq_class random_rational(long bound) {
    mpq_class q(oracle::uniform(-bound, bound), oracle::uniform(1, bound));
    q.canonicalize();
    return q;
}

Outcome no_solution_at_81() {
    const auto run = run_command({"verify", "no-solution", "--k", "4"},
                                 [] { return to_json(verify_no_solution(4, 0)); });
    const auto& r = run.certificate["result"];
    const bool ok = run.status == 0 && r["holds"] == true && r["ring_size"] == 6561 && r["counterexamples"].empty() &&
                    run.seconds < 10.0;
    return {ok, "holds=" + r["holds"].dump() + " ring_size=" + r["ring_size"].dump() +
                    " counterexamples=" + std::to_string(r["counterexamples"].size()) + " time=" + seconds(run.seconds)};
}

Outcome cube_closure_at_81() {
    const auto run = run_command({"verify", "cube-closure", "--k", "4"},
                                 [] { return to_json(verify_cube_closure(4, 0)); });
    const auto& r = run.certificate["result"];
    const bool ok = run.status == 0 && r["holds"] == true && run.seconds < 60.0;
    return {ok, "holds=" + r["holds"].dump() + " time=" + seconds(run.seconds)};
}

Outcome minimality() {
    const auto run = run_command({"minimal-modulus", "--max-k", "6"}, [] {
        const auto k = minimal_modulus(6, 0);
        return json{{"result", {{"minimal_k", k ? json(*k) : json(nullptr)}}}};
    });
    const json minimal = run.certificate["result"]["minimal_k"];
    bool ok = run.status == 0 && minimal == 4;
    std::string detail = "minimal_k=" + minimal.dump() + " (required 4)";
    for (unsigned k = 1; k <= 3; ++k) {
        const auto report = verify_no_solution(k, 0);
        const bool failing_with_witness = !report.holds && !report.counterexamples.empty();
        ok = ok && failing_with_witness;
        detail += "; k=" + std::to_string(k) + (report.holds ? " holds" : " fails with " + std::to_string(report.counterexample_count) + " solutions");
    }
    return {ok, detail};
}

Outcome cubic_cover_search() {
    const auto run = run_command({"search", "--coeffs", "6,0,0,3", "--height", "50"},
                                 [] { return to_json(search(Polynomial({6, 0, 0, 3}), 50, 0)); });
    const auto& r = run.certificate["result"];
    const std::uint64_t expected_points = oracle::count_rationals(50) + 1;
    const bool ok = run.status == 0 && r["counts"]["Descends"] == 0 && r["descends"].empty() &&
                    r["points_tested"] == expected_points && r["infinity"]["classification"] == "NoDescent" &&
                    r["infinity"]["a"] == "3" && run.seconds < 60.0;
    return {ok, "points=" + r["points_tested"].dump() + " descends=" + r["counts"]["Descends"].dump() +
                    " infinity=" + r["infinity"]["classification"].dump() + " a=" + r["infinity"]["a"].dump() +
                    " time=" + seconds(run.seconds)};
}

Outcome descent_properties() {
    int tested = 0, inverted = 0, descends = 0, commuting = 0, misclassified = 0;
    while (tested < 1000) {
        const auto x = random_rational(100), y = random_rational(100);
        if (x == 0 && y == 0)
            continue;
        ++tested;
        const auto a = eval_g(x, y);
        const auto w = solve_g(a);
        if (w && w->x() == x && w->y() == y)
            ++inverted;
        if (!is_cube(a).is_cube) {
            const auto c = classify(a);
            if (c.kind != DescentKind::Descends || !c.witness) {
                ++misclassified;
                continue;
            }
            ++descends;
            if (verify_galois_commute(a, *c.witness))
                ++commuting;
        }
    }
    const bool ok = inverted == tested && misclassified == 0 && commuting == descends;
    return {ok, "pairs=" + std::to_string(tested) + " inverted=" + std::to_string(inverted) +
                    " non-cubes=" + std::to_string(descends + misclassified) + " commuting=" + std::to_string(commuting)};
}

Outcome pi_reduction_properties() {
    const auto pi3 = pow(EisensteinRational(EisensteinInt::pi()), 3);
    int tested = 0, good = 0;
    while (tested < 500) {
        const long x = oracle::uniform(-1'000'000, 1'000'000), y = oracle::uniform(-1'000'000, 1'000'000);
        if ((x + y) % 3 != 0)
            continue;
        ++tested;
        const auto [x2, y2] = reduce_by_pi(x, y);
        const bool identity = eval_g(x2, y2) * pi3 == eval_g(x, y);
        // x + w^2 y = (x - y) - w y
        const bool parts = divides(EisensteinInt::pi(), EisensteinInt(x, y)) &&
                           divides(EisensteinInt::pi(), EisensteinInt(x - y, -y)) && check_pi_divides_parts(x, y);
        if (identity && parts)
            ++good;
    }
    return {good == tested, "pairs=" + std::to_string(tested) + " exact=" + std::to_string(good)};
}

Outcome oracle_equivalence() {
    int cube_inputs = 0, cube_agree = 0;
    while (cube_inputs < 200) {
        const long u = oracle::uniform(-6, 6), v = oracle::uniform(-6, 6), d = oracle::uniform(1, 3);
        if (u == 0 && v == 0)
            continue;
        const EisensteinRational beta(EisensteinInt(u, v), mpz_class(d));
        const bool twist = cube_inputs % 2 == 1;
        const auto a = twist ? pow(beta, 3) * EisensteinRational(EisensteinInt::omega()) : pow(beta, 3);
        ++cube_inputs;
        const bool brute = oracle::brute_force_cube_root(a.num().a(), a.num().b(), a.den(), 6, 3).has_value();
        if (is_cube(a).is_cube == brute && brute == !twist)
            ++cube_agree;
    }

    int factored = 0, round_trips = 0;
    while (factored < 500) {
        const EisensteinInt x(oracle::uniform(-500'000, 500'000), oracle::uniform(-500'000, 500'000));
        if (x.is_zero() || x.norm() > mpz_class("1000000000000"))
            continue;
        ++factored;
        if (factor(x).expand() == x)
            ++round_trips;
    }

    const bool pi_squared = EisensteinInt::pi() * EisensteinInt::pi() == EisensteinInt(-3);

    const auto naive = oracle::naive_solutions(1);
    const auto report = verify_no_solution(1);
    bool k1 = report.holds == naive.empty() && report.counterexample_count == naive.size() &&
              report.counterexamples.size() == naive.size();
    for (std::size_t i = 0; k1 && i < naive.size(); ++i) {
        const auto& [x, y, za, zb] = naive[i];
        const auto& got = report.counterexamples[i];
        k1 = got.size() == 3 && got[0].value.a == std::uint64_t(x) && got[1].value.a == std::uint64_t(y) &&
             got[2].value.a == std::uint64_t(za) && got[2].value.b == std::uint64_t(zb);
    }
    k1 = k1 && verify_cube_closure(1).holds == oracle::naive_cube_closure(1);

    const bool ok = cube_agree == cube_inputs && round_trips == factored && pi_squared && k1;
    return {ok, "is_cube " + std::to_string(cube_agree) + "/" + std::to_string(cube_inputs) + ", factor " +
                    std::to_string(round_trips) + "/" + std::to_string(factored) +
                    ", pi^2=-3 " + (pi_squared ? "yes" : "no") + ", k=1 oracle " + (k1 ? "agrees" : "differs")};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"verify no-solution --k 4", no_solution_at_81},
        {"verify cube-closure --k 4", cube_closure_at_81},
        {"minimal-modulus --max-k 6 is 4; k = 1, 2, 3 fail", minimality},
        {"search --coeffs 6,0,0,3 --height 50", cubic_cover_search},
        {"solve_g / classify / commutation on 1000 pairs", descent_properties},
        {"reduce_by_pi on 500 pi-divisible pairs", pi_reduction_properties},
        {"core oracle equivalence", oracle_equivalence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("%s [%zu] %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    outcome.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
