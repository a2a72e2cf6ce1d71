#include "kdescent/residue.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

#include "kdescent/errors.hpp"
#include "kdescent/parallel.hpp"

namespace kdescent {

namespace {

// All coordinates are < m <= 3^19, so every product below is < 2^64.
struct Mod {
    std::uint64_t m;

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % m; }
    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return (x + m - y) % m; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return (x * y) % m; }

    // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
    void mul(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d,
             std::uint64_t& ra, std::uint64_t& rb) const {
        const std::uint64_t bd = mul(b, d);
        ra = sub(mul(a, c), bd);
        rb = sub(add(mul(a, d), mul(b, c)), bd);
    }
};

std::uint64_t reduce_coord(const mpz_class& v, std::uint64_t m) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
    return r.get_ui();
}

void check_same_ring(const ResidueElement& x, const ResidueElement& y) {
    if (!(x.ring == y.ring))
        throw RingMismatch();
}

template <typename ElementFn>
ResidueSet collect(const ResidueRing& ring, unsigned jobs, ElementFn&& fn) {
    std::vector<ResidueSet> partial(resolve_jobs(jobs), ResidueSet(ring));
    parallel_chunks(ring.size(), jobs, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        ResidueSet& local = partial[worker];
        for (std::uint64_t i = begin; i < end; ++i)
            local.insert(fn(i));
    });
    ResidueSet out(ring);
    for (const auto& p : partial)
        out |= p;
    return out;
}

} // namespace

ResidueRing::ResidueRing(unsigned k) : k_(k), m_(1) {
    if (k < 1 || k > kMaxExponent)
        throw std::out_of_range("residue ring exponent must be in [1, " + std::to_string(kMaxExponent) + "]");
    for (unsigned i = 0; i < k; ++i)
        m_ *= 3;
}

ResidueElement reduce(const EisensteinInt& alpha, const ResidueRing& ring) {
    return {reduce_coord(alpha.a(), ring.modulus()), reduce_coord(alpha.b(), ring.modulus()), ring};
}

ResidueElement reduce(long a, long b, const ResidueRing& ring) {
    return reduce(EisensteinInt(a, b), ring);
}

ResidueElement operator+(const ResidueElement& x, const ResidueElement& y) {
    check_same_ring(x, y);
    const Mod mod{x.ring.modulus()};
    return {mod.add(x.a, y.a), mod.add(x.b, y.b), x.ring};
}

ResidueElement operator-(const ResidueElement& x, const ResidueElement& y) {
    check_same_ring(x, y);
    const Mod mod{x.ring.modulus()};
    return {mod.sub(x.a, y.a), mod.sub(x.b, y.b), x.ring};
}

ResidueElement operator*(const ResidueElement& x, const ResidueElement& y) {
    check_same_ring(x, y);
    ResidueElement out{0, 0, x.ring};
    Mod{x.ring.modulus()}.mul(x.a, x.b, y.a, y.b, out.a, out.b);
    return out;
}

ResidueElement pow(ResidueElement base, unsigned long exponent) {
    ResidueElement result{1 % base.ring.modulus(), 0, base.ring};
    while (exponent > 0) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

ResidueSet::ResidueSet(const ResidueRing& ring) : ring_(ring), words_((ring.size() + 63) / 64, 0) {}

bool ResidueSet::contains(const ResidueElement& x) const {
    if (!(x.ring == ring_))
        throw RingMismatch();
    return contains(x.index());
}

void ResidueSet::insert(const ResidueElement& x) {
    if (!(x.ring == ring_))
        throw RingMismatch();
    insert(x.index());
}

std::uint64_t ResidueSet::size() const {
    std::uint64_t n = 0;
    for (auto w : words_)
        n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& other) {
    if (!(other.ring_ == ring_))
        throw RingMismatch();
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

ResidueSet& ResidueSet::operator&=(const ResidueSet& other) {
    if (!(other.ring_ == ring_))
        throw RingMismatch();
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

std::vector<std::uint64_t> ResidueSet::indices() const {
    std::vector<std::uint64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<ResidueElement> ResidueSet::elements() const {
    std::vector<ResidueElement> out;
    for (auto i : indices())
        out.push_back(ResidueElement::from_index(ring_, i));
    return out;
}

ResidueElement g_residue(std::uint64_t x, std::uint64_t y, const ResidueRing& ring) {
    const Mod mod{ring.modulus()};
    x %= ring.modulus();
    y %= ring.modulus();
    const std::uint64_t n = mod.add(mod.sub(mod.mul(x, x), mod.mul(x, y)), mod.mul(y, y));
    return {mod.mul(x, n), mod.mul(y, n), ring};
}

ResidueElement rhs_residue(const ResidueElement& z) {
    const Mod mod{z.ring.modulus()};
    ResidueElement c = z * z * z;
    return {mod.mul(3, mod.add(c.a, 2)), mod.mul(3, c.b), z.ring};
}

ResidueSet image_of_g(const ResidueRing& ring, unsigned jobs) {
    const std::uint64_t m = ring.modulus();
    return collect(ring, jobs, [&](std::uint64_t i) { return g_residue(i / m, i % m, ring).index(); });
}

ResidueSet cube_set(const ResidueRing& ring, unsigned jobs) {
    return collect(ring, jobs, [&](std::uint64_t i) {
        const auto z = ResidueElement::from_index(ring, i);
        return (z * z * z).index();
    });
}

ResidueSet rhs_set(const ResidueRing& ring, unsigned jobs) {
    return collect(ring, jobs, [&](std::uint64_t i) {
        return rhs_residue(ResidueElement::from_index(ring, i)).index();
    });
}

ResidueElement project(const ResidueElement& x, const ResidueRing& target) {
    if (target.k() > x.ring.k())
        throw std::invalid_argument("projection target must not be larger than the source ring");
    return {x.a % target.modulus(), x.b % target.modulus(), target};
}

void write_csv(std::ostream& os, const ResidueSet& set, std::string_view name) {
    os << "# ring=3^" << set.ring().k() << " set=" << name << '\n';
    for (const auto& e : set.elements())
        os << e.a << ',' << e.b << '\n';
}

} // namespace kdescent
