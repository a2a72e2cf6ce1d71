#pragma once

// Descent of specializations of the Kummer cover t^3 = z over Q(w) to Q.
//
// A point a of the base descends exactly when a = g(x, y) for rationals x, y
// and a is not a cube, where
//
//     g(x, y) = (x + w*y)^2 (x + w^2*y) = (x + w*y) * N(x + w*y).
//
// Points that are cubes have disconnected fibers; 0 and infinity are
// branch points and have no classification.

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "kdescent/eisenstein.hpp"

namespace kdescent {

struct Infinity {
    friend bool operator==(Infinity, Infinity) { return true; }
};

/// A point of P^1 over Q(w).
using Point = std::variant<EisensteinRational, Infinity>;

/// Rationals (x, y) with g(x, y) equal to the value it was built for.
class DescentWitness {
public:
    /// Throws PreconditionError if g(x, y) != value.
    static DescentWitness for_value(mpq_class x, mpq_class y, const EisensteinRational& value);

    const mpq_class& x() const noexcept { return x_; }
    const mpq_class& y() const noexcept { return y_; }
    /// x + w*y
    EisensteinRational alpha() const { return {x_, y_}; }

    friend bool operator==(const DescentWitness&, const DescentWitness&) = default;

private:
    DescentWitness(mpq_class x, mpq_class y) : x_(std::move(x)), y_(std::move(y)) {}

    mpq_class x_;
    mpq_class y_;
};

enum class DescentKind { Descends, Disconnected, NoDescent, Undefined };

std::string_view to_string(DescentKind kind);

struct DescentClassification {
    DescentKind kind;
    std::optional<DescentWitness> witness; // set iff kind == Descends
};

EisensteinRational eval_g(const mpq_class& x, const mpq_class& y);

/// The unique (x, y) with g(x, y) = a, or nothing. N(a) must be r^3 for a
/// rational r, and then x + w*y = a / r. Returns (0, 0) for a = 0.
std::optional<DescentWitness> solve_g(const EisensteinRational& a);

DescentClassification classify(const EisensteinRational& a);
DescentClassification classify(const Point& point);

/// a^2 == conj(a) * (x + w*y)^3, the cube of (cbrt(a)^2 / (x + w*y)) being
/// conj(a). Throws PreconditionError when a = 0 or g(x, y) != a.
bool verify_galois_commute(const EisensteinRational& a, const DescentWitness& w);

/// (x', y') with x' + w*y' = -(x + w*y)/pi, so g(x', y') * pi^3 = g(x, y).
/// Throws PreconditionError when pi does not divide g(x, y).
std::pair<mpz_class, mpz_class> reduce_by_pi(const mpz_class& x, const mpz_class& y);

/// pi | g(x, y) implies pi divides both x + w*y and x + w^2*y.
/// Throws PreconditionError when pi does not divide g(x, y).
bool check_pi_divides_parts(const mpz_class& x, const mpz_class& y);

/// f(z) = c0 + c1 z + ... + cn z^n over Q(w).
class Polynomial {
public:
    explicit Polynomial(std::vector<EisensteinRational> coeffs);

    const std::vector<EisensteinRational>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const EisensteinRational& leading() const { return coeffs_.back(); }

    EisensteinRational operator()(const EisensteinRational& z) const;

private:
    std::vector<EisensteinRational> coeffs_; // trailing zeros trimmed
};

/// The value a with fiber t^3 = a above z0, or nothing at a branch point
/// without a model (infinity for non-cubic f).
std::optional<EisensteinRational> specialization_value(const Polynomial& f, const Point& z0);

/// Classifies the fiber of t^3 = f(z) above z0. At infinity the homogenized
/// cubic model t^3 = c3 z^3 + ... + c0 w^3 gives a = c3; other degrees are Undefined.
/// Throws PreconditionError when deg f < 1.
DescentClassification specialize(const Polynomial& f, const Point& z0);

} // namespace kdescent
