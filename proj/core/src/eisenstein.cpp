#include "kdescent/eisenstein.hpp"

#include <ostream>

#include "kdescent/element_text.hpp"
#include "kdescent/errors.hpp"

namespace kdescent {

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& rhs) {
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
    mpz_class bd = b_ * rhs.b_;
    mpz_class a = a_ * rhs.a_ - bd;
    mpz_class b = a_ * rhs.b_ + b_ * rhs.a_ - bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

bool lex_less(const EisensteinInt& x, const EisensteinInt& y) {
    if (x.a() != y.a())
        return x.a() < y.a();
    return x.b() < y.b();
}

EisensteinInt pow(EisensteinInt base, unsigned long exponent) {
    EisensteinInt result(1);
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

const std::array<EisensteinInt, 6>& units() {
    static const std::array<EisensteinInt, 6> table = {
        EisensteinInt(1, 0),  EisensteinInt(-1, 0), EisensteinInt(0, 1),
        EisensteinInt(0, -1), EisensteinInt(-1, -1), EisensteinInt(1, 1),
    };
    return table;
}

namespace {

// nearest integer to p / q for q > 0; ties round up
mpz_class round_div(const mpz_class& p, const mpz_class& q) {
    mpz_class r;
    mpz_class twice_p = 2 * p + q;
    mpz_class twice_q = 2 * q;
    mpz_fdiv_q(r.get_mpz_t(), twice_p.get_mpz_t(), twice_q.get_mpz_t());
    return r;
}

} // namespace

std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& alpha, const EisensteinInt& beta) {
    if (beta.is_zero())
        throw DivisionByZero();
    mpz_class n = beta.norm();
    EisensteinInt scaled = alpha * beta.conj();
    EisensteinInt q(round_div(scaled.a(), n), round_div(scaled.b(), n));
    EisensteinInt r = alpha - q * beta;
    return {std::move(q), std::move(r)};
}

bool divides(const EisensteinInt& divisor, const EisensteinInt& value) {
    if (divisor.is_zero())
        return value.is_zero();
    mpz_class n = divisor.norm();
    EisensteinInt scaled = value * divisor.conj();
    return mpz_divisible_p(scaled.a().get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(scaled.b().get_mpz_t(), n.get_mpz_t());
}

EisensteinInt divide_exact(const EisensteinInt& value, const EisensteinInt& divisor) {
    if (divisor.is_zero())
        throw DivisionByZero();
    mpz_class n = divisor.norm();
    EisensteinInt scaled = value * divisor.conj();
    if (!mpz_divisible_p(scaled.a().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(scaled.b().get_mpz_t(), n.get_mpz_t()))
        throw PreconditionError("divisor does not divide value exactly");
    mpz_class a, b;
    mpz_divexact(a.get_mpz_t(), scaled.a().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), scaled.b().get_mpz_t(), n.get_mpz_t());
    return {std::move(a), std::move(b)};
}

EisensteinInt canonical_associate(const EisensteinInt& alpha) {
    if (alpha.is_zero())
        return alpha;
    if (alpha.norm() == 3)
        return EisensteinInt::pi();
    const EisensteinInt* best = nullptr;
    EisensteinInt candidates[6];
    for (std::size_t i = 0; i < 6; ++i) {
        candidates[i] = alpha * units()[i];
        if (sgn(candidates[i].a()) > 0 && (best == nullptr || lex_less(candidates[i], *best)))
            best = &candidates[i];
    }
    return *best;
}

EisensteinInt gcd(const EisensteinInt& alpha, const EisensteinInt& beta) {
    if (alpha.is_zero() && beta.is_zero())
        throw UndefinedValue("gcd(0, 0) is undefined");
    EisensteinInt x = alpha;
    EisensteinInt y = beta;
    while (!y.is_zero()) {
        EisensteinInt r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical_associate(x);
}

PiValuation pi_valuation(const EisensteinInt& alpha) {
    if (alpha.is_zero())
        throw UndefinedValue("pi-adic valuation of 0 is undefined");
    const EisensteinInt pi_conj = EisensteinInt::pi().conj();
    PiValuation out{0, alpha};
    // pi | a + bw  <=>  3 | a + b, since w = 1 (mod pi)
    while (mpz_divisible_ui_p(mpz_class(out.cofactor.a() + out.cofactor.b()).get_mpz_t(), 3)) {
        EisensteinInt t = out.cofactor * pi_conj;
        out.cofactor = EisensteinInt(t.a() / 3, t.b() / 3);
        ++out.v;
    }
    return out;
}

EisensteinRational::EisensteinRational(EisensteinInt num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

EisensteinRational::EisensteinRational(const mpq_class& a, const mpq_class& b) {
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    num_ = EisensteinInt(a.get_num() * (den / a.get_den()), b.get_num() * (den / b.get_den()));
    den_ = std::move(den);
    normalize();
}

void EisensteinRational::normalize() {
    if (sgn(den_) == 0)
        throw DivisionByZero();
    if (sgn(den_) < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.a().get_mpz_t(), num_.b().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ = EisensteinInt(num_.a() / g, num_.b() / g);
        den_ /= g;
    }
}

mpq_class EisensteinRational::coeff_a() const {
    mpq_class q(num_.a(), den_);
    q.canonicalize();
    return q;
}

mpq_class EisensteinRational::coeff_b() const {
    mpq_class q(num_.b(), den_);
    q.canonicalize();
    return q;
}

mpq_class EisensteinRational::norm() const {
    mpq_class q(num_.norm(), den_ * den_);
    q.canonicalize();
    return q;
}

EisensteinRational EisensteinRational::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    // 1 / (num/den) = den * conj(num) / norm(num)
    return {num_.conj() * EisensteinInt(den_), num_.norm()};
}

EisensteinRational& EisensteinRational::operator+=(const EisensteinRational& rhs) {
    num_ = num_ * EisensteinInt(rhs.den_) + rhs.num_ * EisensteinInt(den_);
    den_ *= rhs.den_;
    normalize();
    return *this;
}

EisensteinRational& EisensteinRational::operator-=(const EisensteinRational& rhs) {
    return *this += -rhs;
}

EisensteinRational& EisensteinRational::operator*=(const EisensteinRational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

EisensteinRational& EisensteinRational::operator/=(const EisensteinRational& rhs) {
    return *this *= rhs.inverse();
}

EisensteinRational pow(EisensteinRational base, unsigned long exponent) {
    return {pow(base.num(), exponent), [&] {
                mpz_class d;
                mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
                return d;
            }()};
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
    return os << format_element(EisensteinRational(x));
}

std::ostream& operator<<(std::ostream& os, const EisensteinRational& x) {
    return os << format_element(x);
}

} // namespace kdescent
