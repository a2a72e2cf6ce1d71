#pragma once

// Independent reference implementations used only by tests. None of these
// call into the engine paths they are compared against.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Plain pair arithmetic mod m, with w^2 = -1 - w written out by hand.
struct Pair {
    std::int64_t a;
    std::int64_t b;
    auto operator<=>(const Pair&) const = default;
};

inline std::int64_t mod(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

inline Pair mul(Pair x, Pair y, std::int64_t m) {
    // (a + bw)(c + dw) = ac + bd w^2 + (ad + bc) w = (ac - bd) + (ad + bc - bd) w
    return {mod(x.a * y.a - x.b * y.b, m), mod(x.a * y.b + x.b * y.a - x.b * y.b, m)};
}

/// (x + w y)^2 (x + w^2 y) as a product of three factors.
inline Pair g_product(std::int64_t x, std::int64_t y, std::int64_t m) {
    const Pair s{mod(x, m), mod(y, m)};
    const Pair t{mod(x - y, m), mod(-y, m)}; // x + (-1 - w) y
    return mul(mul(s, s, m), t, m);
}

/// 3(z^3 + 2) via the closed form of (a + bw)^3.
inline Pair rhs_closed(std::int64_t a, std::int64_t b, std::int64_t m) {
    const std::int64_t ca = a * a * a + b * b * b - 3 * a * b * b;
    const std::int64_t cb = 3 * a * a * b - 3 * a * b * b;
    return {mod(3 * (ca + 2), m), mod(3 * cb, m)};
}

inline std::int64_t power_of_three(unsigned k) {
    std::int64_t m = 1;
    for (unsigned i = 0; i < k; ++i)
        m *= 3;
    return m;
}

/// Every (x, y, za, zb) with g(x, y) = 3(z^3 + 2) mod 3^k, by direct loops.
inline std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> naive_solutions(unsigned k) {
    const std::int64_t m = power_of_three(k);
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> out;
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y) {
            const Pair g = g_product(x, y, m);
            for (std::int64_t za = 0; za < m; ++za)
                for (std::int64_t zb = 0; zb < m; ++zb)
                    if (rhs_closed(za, zb, m) == g)
                        out.emplace_back(x, y, za, zb);
        }
    return out;
}

/// Direct loop over c, x, y: is c^3 g(x, y) always some g(x', y')?
inline bool naive_cube_closure(unsigned k) {
    const std::int64_t m = power_of_three(k);
    std::set<Pair> image;
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y)
            image.insert(g_product(x, y, m));
    for (std::int64_t ca = 0; ca < m; ++ca)
        for (std::int64_t cb = 0; cb < m; ++cb) {
            const Pair c{ca, cb};
            const Pair c3 = mul(mul(c, c, m), c, m);
            for (std::int64_t x = 0; x < m; ++x)
                for (std::int64_t y = 0; y < m; ++y) {
                    const Pair target = mul(c3, g_product(x, y, m), m);
                    bool found = false;
                    for (std::int64_t x2 = 0; x2 < m && !found; ++x2)
                        for (std::int64_t y2 = 0; y2 < m && !found; ++y2)
                            found = g_product(x2, y2, m) == target;
                    if (!found)
                        return false;
                }
        }
    return true;
}

/// Bounded search for (a, b) with a^2 - ab + b^2 = p, 0 < a <= ceil(sqrt(4p/3)).
inline std::optional<std::pair<std::int64_t, std::int64_t>> norm_form_solution(std::int64_t p) {
    std::int64_t bound = 1;
    while (3 * bound * bound < 4 * p)
        ++bound;
    for (std::int64_t a = 1; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            if (a * a - a * b + b * b == p)
                return std::make_pair(a, b);
    return std::nullopt;
}

/// Number of p/q in lowest terms with |p| <= H, 1 <= q <= H.
inline std::uint64_t count_rationals(std::int64_t h) {
    std::uint64_t n = 0;
    for (std::int64_t q = 1; q <= h; ++q)
        for (std::int64_t p = -h; p <= h; ++p)
            if (std::gcd(p < 0 ? -p : p, q) == 1 || (p == 0 && q == 1))
                ++n;
    return n;
}

/// Cube roots in Q(w) of the integral element (a, b), by scanning every
/// (u + v w)/d with |u|, |v| <= bound and 1 <= d <= den_bound. Arithmetic
/// is done on integer pairs by hand.
inline std::optional<std::tuple<mpz_class, mpz_class, mpz_class>>
brute_force_cube_root(const mpz_class& a, const mpz_class& b, const mpz_class& den, long bound, long den_bound) {
    for (long d = 1; d <= den_bound; ++d)
        for (long u = -bound; u <= bound; ++u)
            for (long v = -bound; v <= bound; ++v) {
                // (u + v w)^3 = u^3 + v^3 - 3uv^2 + (3u^2 v - 3uv^2) w
                const mpz_class U(u), V(v), D(d);
                const mpz_class ca = U * U * U + V * V * V - 3 * U * V * V;
                const mpz_class cb = 3 * U * U * V - 3 * U * V * V;
                // compare (ca + cb w)/d^3 with (a + b w)/den
                if (ca * den == a * D * D * D && cb * den == b * D * D * D)
                    return std::make_tuple(U, V, D);
            }
    return std::nullopt;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed'0003ULL);
    return engine;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

} // namespace oracle
