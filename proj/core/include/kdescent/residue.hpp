#pragma once

// The finite rings Z[w]/(3^k) and the image sets needed by the lemma verifier.

#include <cstdint>
#include <iosfwd>
#include <ranges>
#include <string_view>
#include <vector>

#include "kdescent/eisenstein.hpp"

namespace kdescent {

class ResidueRing {
public:
    static constexpr unsigned kMaxExponent = 19; // 3^19 * 3^19 < 2^64

    /// Throws std::out_of_range unless 1 <= k <= kMaxExponent.
    explicit ResidueRing(unsigned k);

    unsigned k() const noexcept { return k_; }
    std::uint64_t modulus() const noexcept { return m_; }
    /// Number of elements, 9^k.
    std::uint64_t size() const noexcept { return m_ * m_; }

    friend bool operator==(const ResidueRing&, const ResidueRing&) = default;

private:
    unsigned k_;
    std::uint64_t m_;
};

/// a + b*w modulo 3^k with 0 <= a, b < 3^k.
struct ResidueElement {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    ResidueRing ring{1};

    /// Position in lexicographic enumeration order, a*m + b.
    std::uint64_t index() const noexcept { return a * ring.modulus() + b; }
    static ResidueElement from_index(const ResidueRing& ring, std::uint64_t index) {
        return {index / ring.modulus(), index % ring.modulus(), ring};
    }
    EisensteinInt lift() const { return {mpz_class(a), mpz_class(b)}; }

    friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
};

ResidueElement reduce(const EisensteinInt& alpha, const ResidueRing& ring);
ResidueElement reduce(long a, long b, const ResidueRing& ring);

// Mixed-ring operands throw RingMismatch.
ResidueElement operator+(const ResidueElement& x, const ResidueElement& y);
ResidueElement operator-(const ResidueElement& x, const ResidueElement& y);
ResidueElement operator*(const ResidueElement& x, const ResidueElement& y);
ResidueElement pow(ResidueElement base, unsigned long exponent);

/// All 9^k elements, lexicographic in (a, b).
inline auto enumerate(const ResidueRing& ring) {
    return std::views::iota(std::uint64_t{0}, ring.size()) |
           std::views::transform([ring](std::uint64_t i) { return ResidueElement::from_index(ring, i); });
}

/// Dense bitset over the elements of one ring, indexed by a*m + b.
class ResidueSet {
public:
    explicit ResidueSet(const ResidueRing& ring);

    const ResidueRing& ring() const noexcept { return ring_; }

    bool contains(std::uint64_t index) const noexcept { return (words_[index >> 6] >> (index & 63)) & 1u; }
    bool contains(const ResidueElement& x) const;
    void insert(std::uint64_t index) noexcept { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
    void insert(const ResidueElement& x);

    std::uint64_t size() const;
    bool empty() const { return size() == 0; }

    ResidueSet& operator|=(const ResidueSet& other);
    ResidueSet& operator&=(const ResidueSet& other);

    /// Member indices in enumeration order.
    std::vector<std::uint64_t> indices() const;
    std::vector<ResidueElement> elements() const;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    ResidueRing ring_;
    std::vector<std::uint64_t> words_;
};

/// The descent form g(x, y) = (x + w*y)^2 (x + w^2*y) = (x + w*y) * N(x + w*y)
/// for rational-integer residues x, y.
ResidueElement g_residue(std::uint64_t x, std::uint64_t y, const ResidueRing& ring);

/// 3(z^3 + 2).
ResidueElement rhs_residue(const ResidueElement& z);

// jobs = 0 uses every hardware thread; the result never depends on jobs.
/// {g(x, y) : x, y in Z/(3^k)}
ResidueSet image_of_g(const ResidueRing& ring, unsigned jobs = 1);
/// {c^3 : c in Z[w]/(3^k)}
ResidueSet cube_set(const ResidueRing& ring, unsigned jobs = 1);
/// {3(z^3 + 2) : z in Z[w]/(3^k)}
ResidueSet rhs_set(const ResidueRing& ring, unsigned jobs = 1);

/// Images reduced into a smaller ring of the same prime power tower.
ResidueElement project(const ResidueElement& x, const ResidueRing& target);

/// Writes "# ring=3^k set=<name>" followed by one "a,b" row per member.
void write_csv(std::ostream& os, const ResidueSet& set, std::string_view name);

} // namespace kdescent
