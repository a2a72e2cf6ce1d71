#pragma once

// Exact arithmetic in the Eisenstein integers Z[w] and the field Q(w), w a
// primitive cube root of unity (w^2 = -1 - w).

#include <array>
#include <iosfwd>
#include <utility>

#include <gmpxx.h>

namespace kdescent {

/// a + b*w with arbitrary-precision integer coordinates.
class EisensteinInt {
public:
    EisensteinInt() = default;
    EisensteinInt(mpz_class a, mpz_class b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    EisensteinInt(long a, long b = 0) : a_(a), b_(b) {}
    EisensteinInt(int a, int b = 0) : a_(a), b_(b) {}

    static EisensteinInt omega() { return {0, 1}; }
    /// The prime 1 + 2w above 3; pi^2 = -3.
    static EisensteinInt pi() { return {1, 2}; }

    const mpz_class& a() const noexcept { return a_; }
    const mpz_class& b() const noexcept { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_unit() const { return norm() == 1; }

    /// Galois conjugation w -> w^2.
    EisensteinInt conj() const { return {a_ - b_, -b_}; }
    /// a^2 - ab + b^2.
    mpz_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    EisensteinInt operator-() const { return {-a_, -b_}; }
    EisensteinInt& operator+=(const EisensteinInt& rhs);
    EisensteinInt& operator-=(const EisensteinInt& rhs);
    EisensteinInt& operator*=(const EisensteinInt& rhs);

    friend EisensteinInt operator+(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs += rhs; }
    friend EisensteinInt operator-(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs -= rhs; }
    friend EisensteinInt operator*(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs *= rhs; }

    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    mpz_class a_ = 0;
    mpz_class b_ = 0;
};

/// Lexicographic order on (a, b); only used for canonical sorting.
bool lex_less(const EisensteinInt& x, const EisensteinInt& y);

EisensteinInt pow(EisensteinInt base, unsigned long exponent);

/// The six units 1, -1, w, -w, w^2, -w^2 in that order.
const std::array<EisensteinInt, 6>& units();

/// Euclidean division: alpha = q*beta + r with norm(r) < norm(beta).
/// q rounds each coordinate of alpha/beta to the nearest integer.
std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& alpha, const EisensteinInt& beta);

bool divides(const EisensteinInt& divisor, const EisensteinInt& value);

/// value / divisor; throws PreconditionError when the division is not exact.
EisensteinInt divide_exact(const EisensteinInt& value, const EisensteinInt& divisor);

/// Representative of the associate class: any associate of pi maps to pi,
/// otherwise the associate with a > 0 and lexicographically least (a, b).
EisensteinInt canonical_associate(const EisensteinInt& alpha);

/// Canonical generator of the ideal (alpha, beta).
EisensteinInt gcd(const EisensteinInt& alpha, const EisensteinInt& beta);

struct PiValuation {
    unsigned long v;
    EisensteinInt cofactor;
};

/// alpha = pi^v * cofactor with pi not dividing cofactor.
PiValuation pi_valuation(const EisensteinInt& alpha);

/// An element of Q(w), stored as num / den with den > 0 and
/// gcd(num.a, num.b, den) = 1.
class EisensteinRational {
public:
    EisensteinRational() : den_(1) {}
    EisensteinRational(EisensteinInt num) : num_(std::move(num)), den_(1) {}
    EisensteinRational(long n) : num_(n), den_(1) {}
    EisensteinRational(int n) : num_(n), den_(1) {}
    EisensteinRational(EisensteinInt num, mpz_class den);
    EisensteinRational(const mpq_class& a, const mpq_class& b = 0);

    const EisensteinInt& num() const noexcept { return num_; }
    const mpz_class& den() const noexcept { return den_; }

    mpq_class coeff_a() const;
    mpq_class coeff_b() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    bool is_rational() const { return sgn(num_.b()) == 0; }

    EisensteinRational conj() const { return {num_.conj(), den_}; }
    mpq_class norm() const;
    /// Throws DivisionByZero for zero.
    EisensteinRational inverse() const;

    EisensteinRational operator-() const { return {-num_, den_}; }
    EisensteinRational& operator+=(const EisensteinRational& rhs);
    EisensteinRational& operator-=(const EisensteinRational& rhs);
    EisensteinRational& operator*=(const EisensteinRational& rhs);
    EisensteinRational& operator/=(const EisensteinRational& rhs);

    friend EisensteinRational operator+(EisensteinRational lhs, const EisensteinRational& rhs) { return lhs += rhs; }
    friend EisensteinRational operator-(EisensteinRational lhs, const EisensteinRational& rhs) { return lhs -= rhs; }
    friend EisensteinRational operator*(EisensteinRational lhs, const EisensteinRational& rhs) { return lhs *= rhs; }
    friend EisensteinRational operator/(EisensteinRational lhs, const EisensteinRational& rhs) { return lhs /= rhs; }

    friend bool operator==(const EisensteinRational& x, const EisensteinRational& y) {
        return x.den_ == y.den_ && x.num_ == y.num_;
    }

private:
    void normalize();

    EisensteinInt num_;
    mpz_class den_;
};

inline EisensteinRational conj(const EisensteinRational& x) { return x.conj(); }
inline mpq_class norm(const EisensteinRational& x) { return x.norm(); }

EisensteinRational pow(EisensteinRational base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);
std::ostream& operator<<(std::ostream& os, const EisensteinRational& x);

} // namespace kdescent
