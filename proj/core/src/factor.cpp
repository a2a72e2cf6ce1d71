#include "kdescent/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "kdescent/errors.hpp"

namespace kdescent {

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's cycle finding; returns a nontrivial factor of composite odd n.
mpz_class pollard_brent(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto step = [&](mpz_class& v) {
            v = v * v + c;
            v %= n;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    mpz_class diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_large(const mpz_class& n, std::map<mpz_class, unsigned long>& out) {
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split_large(root, out);
        split_large(root, out);
        return;
    }
    mpz_class d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

// Strip every power of prime from value; returns the exponent.
unsigned long strip(EisensteinInt& value, const EisensteinInt& prime) {
    unsigned long e = 0;
    while (divides(prime, value)) {
        value = divide_exact(value, prime);
        ++e;
    }
    return e;
}

bool factor_less(const PrimePower& x, const PrimePower& y) {
    mpz_class nx = x.prime.norm(), ny = y.prime.norm();
    if (nx != ny)
        return nx < ny;
    return lex_less(x.prime, y.prime);
}

} // namespace

std::vector<IntegerFactor> factor_integer(const mpz_class& n) {
    if (sgn(n) == 0)
        throw UndefinedValue("factorization of 0 is undefined");
    mpz_class rest = abs(n);
    std::map<mpz_class, unsigned long> found;
    for (std::uint32_t p : small_primes()) {
        if (rest == 1)
            break;
        if (mpz_class(p) * p > rest)
            break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++found[mpz_class(p)];
        }
    }
    split_large(rest, found);
    std::vector<IntegerFactor> out;
    out.reserve(found.size());
    for (auto& [p, e] : found)
        out.push_back({p, e});
    return out;
}

std::optional<mpz_class> exact_cube_root(const mpz_class& n) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) == 0)
        return std::nullopt;
    return r;
}

std::optional<mpq_class> exact_cube_root(const mpq_class& q) {
    auto num = exact_cube_root(q.get_num());
    auto den = exact_cube_root(q.get_den());
    if (!num || !den)
        return std::nullopt;
    mpq_class r(*num, *den);
    r.canonicalize();
    return r;
}

EisensteinInt split_prime(const mpz_class& p) {
    if (p % 3 != 1 || !is_probable_prime(p))
        throw PreconditionError("split_prime requires a prime p = 1 (mod 3)");
    // t = c^((p-1)/3) is a primitive cube root of unity mod p for 2/3 of c;
    // then p = pi_p * conj(pi_p) with pi_p = gcd(p, t - w).
    const mpz_class exponent = (p - 1) / 3;
    for (unsigned long c = 2;; ++c) {
        mpz_class t;
        mpz_class base(c);
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
        if (t == 1)
            continue;
        return gcd(EisensteinInt(p), EisensteinInt(t, -1));
    }
}

EisensteinInt Factorization::expand() const {
    EisensteinInt out = unit;
    for (const auto& f : factors)
        out *= pow(f.prime, f.exponent);
    return out;
}

Factorization factor(const EisensteinInt& alpha) {
    if (alpha.is_zero())
        throw UndefinedValue("factorization of 0 is undefined");
    Factorization out;
    EisensteinInt rest = alpha;
    for (const auto& [p, e] : factor_integer(alpha.norm())) {
        if (p == 3) {
            rest = pi_valuation(rest).cofactor;
            out.factors.push_back({EisensteinInt::pi(), e});
        } else if (p % 3 == 2) {
            // inert: p^(e/2) exactly divides alpha
            unsigned long k = strip(rest, EisensteinInt(p));
            out.factors.push_back({EisensteinInt(p), k});
        } else {
            EisensteinInt first = split_prime(p);
            EisensteinInt second = canonical_associate(first.conj());
            if (unsigned long k = strip(rest, first); k > 0)
                out.factors.push_back({first, k});
            if (unsigned long k = strip(rest, second); k > 0)
                out.factors.push_back({second, k});
        }
    }
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
}

CubeTest is_cube(const EisensteinRational& a) {
    if (a.is_zero())
        return {true, EisensteinRational(0)};
    // a = num/den is a cube iff num * den^2 = a * den^3 is
    EisensteinInt integral = a.num() * EisensteinInt(a.den() * a.den());
    if (!exact_cube_root(integral.norm()))
        return {false, std::nullopt};
    Factorization f = factor(integral);
    EisensteinInt root(1);
    if (f.unit == EisensteinInt(-1))
        root = EisensteinInt(-1);
    else if (f.unit != EisensteinInt(1))
        return {false, std::nullopt};
    for (const auto& pp : f.factors) {
        if (pp.exponent % 3 != 0)
            return {false, std::nullopt};
        root *= pow(pp.prime, pp.exponent / 3);
    }
    EisensteinRational witness(root, a.den());
    if (pow(witness, 3) != a)
        throw std::logic_error("cube root witness failed verification");
    return {true, witness};
}

} // namespace kdescent
