#pragma once

// Height-bounded search for descending points on t^3 = f(z).

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "kdescent/descent.hpp"

namespace kdescent {

/// max(|p|, q) for p/q in lowest terms.
mpz_class height(const mpq_class& q);

/// Every p/q in lowest terms with |p| <= H and 1 <= q <= H, each once, by
/// nondecreasing height and then (q, p). Throws std::invalid_argument for H < 1.
std::vector<mpq_class> enumerate_rationals(unsigned long max_height);

struct DescentFinding {
    Point z0;
    EisensteinRational a;
    DescentWitness witness;
    bool galois_commutes;
};

struct SearchReport {
    unsigned long max_height;
    std::vector<EisensteinRational> cover; // coefficients c0..cn
    std::uint64_t points_tested;           // rationals of height <= H, plus infinity
    std::map<DescentKind, std::uint64_t> counts;
    std::vector<DescentFinding> descends;  // in enumeration order
    DescentKind infinity_kind;
    std::optional<EisensteinRational> infinity_value;
    std::chrono::duration<double> elapsed{};
};

/// Classifies t^3 = f(z0) at every rational z0 of height <= H and at infinity.
SearchReport search(const Polynomial& f, unsigned long max_height, unsigned jobs = 1);

} // namespace kdescent
