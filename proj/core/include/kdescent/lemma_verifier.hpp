#pragma once

// Exhaustive checks over Z[w]/(3^k):
//
//   cube-closure:  c^3 * g(x, y) lies in {g(x', y')} for every c in Z[w]/(3^k)
//                  and x, y in Z/(3^k).
//   no-solution:   g(x, y) = 3(z^3 + 2) has no solution with x, y in Z/(3^k)
//                  and z in Z[w]/(3^k).
//
// Both are computed on precomputed image sets rather than by direct loops.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdescent/residue.hpp"

namespace kdescent {

enum class LemmaId { CubeClosure, NoSolution };

std::string_view to_string(LemmaId id);
/// Accepts "cube-closure" and "no-solution".
std::optional<LemmaId> parse_lemma_id(std::string_view text);

struct NamedResidue {
    std::string name;
    ResidueElement value;

    friend bool operator==(const NamedResidue&, const NamedResidue&) = default;
};

using Assignment = std::vector<NamedResidue>;

struct VerificationReport {
    static constexpr std::size_t kMaxListed = 100;
    static constexpr unsigned kMaxExponent = 8;

    LemmaId lemma;
    unsigned k;
    std::uint64_t ring_size;
    bool holds;
    std::uint64_t counterexample_count;  // total, listed or not
    std::vector<Assignment> counterexamples; // lexicographic, at most kMaxListed
    std::map<std::string, std::uint64_t> set_sizes;
    std::chrono::duration<double> elapsed{};
};

/// Throws std::out_of_range unless 1 <= k <= 8.
VerificationReport verify_cube_closure(unsigned k, unsigned jobs = 1);
VerificationReport verify_no_solution(unsigned k, unsigned jobs = 1);

/// Smallest k <= max_k for which the no-solution check holds.
/// Throws std::out_of_range unless 1 <= max_k <= 8.
std::optional<unsigned> minimal_modulus(unsigned max_k, unsigned jobs = 1);

namespace detail {

/// An element paired with the lexicographically first preimage that produced it.
struct Labeled {
    std::uint64_t label; // index of the preimage (c, or x*m + y)
    std::uint64_t value; // index of the element
};

struct ClosureFailures {
    std::uint64_t count = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> first; // (multiplier label, member label)
};

/// For every multiplier u and member s (each sorted by label), counts the
/// products u*s outside `target` and keeps the first kMaxListed failures in
/// (u.label, s.label) order.
ClosureFailures closure_failures(const ResidueRing& ring, const std::vector<Labeled>& multipliers,
                                 const std::vector<Labeled>& members, const ResidueSet& target,
                                 unsigned jobs);

} // namespace detail

} // namespace kdescent
