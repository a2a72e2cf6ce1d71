#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "kdescent/lemma_verifier.hpp"
#include "oracles.hpp"

using namespace kdescent;

namespace {

std::uint64_t value_of(const Assignment& a, const std::string& name, bool second = false) {
    for (const auto& nv : a)
        if (nv.name == name)
            return second ? nv.value.b : nv.value.a;
    throw std::logic_error("missing " + name);
}

} // namespace

TEST_CASE("no-solution agrees with the naive triple loop") {
    for (unsigned k : {1u, 2u}) {
        CAPTURE(k);
        const auto naive = oracle::naive_solutions(k);
        const auto report = verify_no_solution(k);
        CHECK(report.holds == naive.empty());
        CHECK(report.counterexample_count == naive.size());
        const std::size_t listed = std::min<std::size_t>(naive.size(), VerificationReport::kMaxListed);
        REQUIRE(report.counterexamples.size() == listed);
        for (std::size_t i = 0; i < listed; ++i) {
            const auto& [x, y, za, zb] = naive[i];
            const auto& got = report.counterexamples[i];
            CHECK(value_of(got, "x") == std::uint64_t(x));
            CHECK(value_of(got, "y") == std::uint64_t(y));
            CHECK(value_of(got, "z") == std::uint64_t(za));
            CHECK(value_of(got, "z", true) == std::uint64_t(zb));
        }
    }
}

TEST_CASE("cube-closure agrees with the naive loop") {
    for (unsigned k : {1u, 2u}) {
        CAPTURE(k);
        const auto report = verify_cube_closure(k);
        CHECK(report.holds == oracle::naive_cube_closure(k));
        CHECK(report.counterexamples.empty());
        CHECK(report.counterexample_count == 0);
    }
}

TEST_CASE("cube-closure holds at 81") {
    const auto report = verify_cube_closure(4);
    CHECK(report.holds);
    CHECK(report.ring_size == 6561);
    CHECK(report.set_sizes.at("image_g") == 1519);
    CHECK(report.set_sizes.at("cubes") == 171);
}

TEST_CASE("no-solution holds at 81") {
    const auto report = verify_no_solution(4);
    CHECK(report.holds);
    CHECK(report.ring_size == 6561);
    CHECK(report.counterexamples.empty());
    CHECK(report.set_sizes.at("image_g") == 1519);
    CHECK(report.set_sizes.at("rhs") == 21);
    CHECK(report.set_sizes.at("intersection") == 0);
}

TEST_CASE("no-solution fails below 27 and holds from 27 on") {
    // Exhaustive enumeration: the first power of 3 with no solution is 27.
    for (unsigned k : {1u, 2u}) {
        const auto report = verify_no_solution(k);
        CHECK_FALSE(report.holds);
        CHECK_FALSE(report.counterexamples.empty());
        CHECK(report.counterexample_count > 0);
    }
    CHECK(verify_no_solution(3).holds);
    CHECK(verify_no_solution(5).holds);
}

TEST_CASE("listed no-solution counterexamples are genuine") {
    for (unsigned k : {1u, 2u}) {
        const auto report = verify_no_solution(k);
        const ResidueRing ring(k);
        for (const auto& c : report.counterexamples) {
            const auto z = ResidueElement{value_of(c, "z"), value_of(c, "z", true), ring};
            CHECK(g_residue(value_of(c, "x"), value_of(c, "y"), ring) == rhs_residue(z));
        }
    }
}

TEST_CASE("k = 1 counterexample count is pinned") {
    // g(x, y) = 0 = 3(z^3 + 2) mod 3 for every z; g vanishes at 3 pairs (x, y) = (t, -t)
    const auto report = verify_no_solution(1);
    CHECK(report.counterexample_count == 27);
    CHECK(report.set_sizes.at("intersection") == 1);
}

TEST_CASE("solutions project to solutions in smaller rings") {
    const ResidueRing r2(2), r1(1);
    const auto report = verify_no_solution(2);
    for (const auto& c : report.counterexamples) {
        const auto x = value_of(c, "x") % 3, y = value_of(c, "y") % 3;
        const ResidueElement z = project(ResidueElement{value_of(c, "z"), value_of(c, "z", true), r2}, r1);
        CHECK(g_residue(x, y, r1) == rhs_residue(z));
    }
}

TEST_CASE("minimal modulus") {
    CHECK(minimal_modulus(6) == 3u);
    CHECK(minimal_modulus(4) == 3u);
    CHECK(minimal_modulus(3) == 3u);
    CHECK_FALSE(minimal_modulus(2).has_value());
    CHECK_THROWS_AS(minimal_modulus(0), std::out_of_range);
    CHECK_THROWS_AS(minimal_modulus(9), std::out_of_range);
}

TEST_CASE("resource guard") {
    CHECK_THROWS_AS(verify_no_solution(0), std::out_of_range);
    CHECK_THROWS_AS(verify_no_solution(9), std::out_of_range);
    CHECK_THROWS_AS(verify_cube_closure(9), std::out_of_range);
}

TEST_CASE("reports do not depend on the worker count") {
    for (unsigned k : {1u, 2u, 4u}) {
        const auto serial = verify_no_solution(k, 1);
        const auto closure = verify_cube_closure(k, 1);
        for (unsigned jobs : {2u, 5u, 0u}) {
            const auto parallel = verify_no_solution(k, jobs);
            CHECK(parallel.holds == serial.holds);
            CHECK(parallel.counterexample_count == serial.counterexample_count);
            CHECK(parallel.counterexamples == serial.counterexamples);
            CHECK(parallel.set_sizes == serial.set_sizes);
            const auto pc = verify_cube_closure(k, jobs);
            CHECK(pc.holds == closure.holds);
            CHECK(pc.set_sizes == closure.set_sizes);
        }
    }
}

TEST_CASE("closure engine reports failures against a deficient target") {
    // Remove one element s0 from the image; every (u, s) with u*s = s0 now fails.
    const ResidueRing ring(2);
    const std::uint64_t m = ring.modulus();
    const auto image = image_of_g(ring);
    const std::uint64_t s0 = ResidueElement{1, 0, ring}.index();
    REQUIRE(image.contains(s0));
    ResidueSet target(ring);
    for (auto i : image.indices())
        if (i != s0)
            target.insert(i);

    std::vector<detail::Labeled> cubes, members;
    ResidueSet seen_c(ring), seen_g(ring);
    for (std::uint64_t c = 0; c < ring.size(); ++c) {
        const auto z = ResidueElement::from_index(ring, c);
        const auto v = (z * z * z).index();
        if (!seen_c.contains(v)) {
            seen_c.insert(v);
            cubes.push_back({c, v});
        }
    }
    for (std::uint64_t xy = 0; xy < ring.size(); ++xy) {
        const auto v = g_residue(xy / m, xy % m, ring).index();
        if (!seen_g.contains(v)) {
            seen_g.insert(v);
            members.push_back({xy, v});
        }
    }

    std::uint64_t expected = 0;
    for (const auto& u : cubes)
        for (const auto& s : members)
            if ((ResidueElement::from_index(ring, u.value) * ResidueElement::from_index(ring, s.value)).index() == s0)
                ++expected;
    REQUIRE(expected > 0);

    for (unsigned jobs : {1u, 3u}) {
        const auto failures = detail::closure_failures(ring, cubes, members, target, jobs);
        CHECK(failures.count == expected);
        CHECK(failures.first.size() == std::min<std::uint64_t>(expected, VerificationReport::kMaxListed));
        CHECK(std::is_sorted(failures.first.begin(), failures.first.end()));
    }
}

TEST_CASE("lemma ids") {
    CHECK(parse_lemma_id("cube-closure") == LemmaId::CubeClosure);
    CHECK(parse_lemma_id("no-solution") == LemmaId::NoSolution);
    CHECK_FALSE(parse_lemma_id("other").has_value());
    CHECK(to_string(LemmaId::NoSolution) == "no-solution");
}
