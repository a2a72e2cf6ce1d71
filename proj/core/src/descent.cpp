#include "kdescent/descent.hpp"

#include "kdescent/errors.hpp"
#include "kdescent/factor.hpp"

namespace kdescent {

DescentWitness DescentWitness::for_value(mpq_class x, mpq_class y, const EisensteinRational& value) {
    if (eval_g(x, y) != value)
        throw PreconditionError("witness does not satisfy g(x, y) = a");
    return {std::move(x), std::move(y)};
}

std::string_view to_string(DescentKind kind) {
    switch (kind) {
    case DescentKind::Descends:
        return "Descends";
    case DescentKind::Disconnected:
        return "Disconnected";
    case DescentKind::NoDescent:
        return "NoDescent";
    case DescentKind::Undefined:
        return "Undefined";
    }
    return "?";
}

EisensteinRational eval_g(const mpq_class& x, const mpq_class& y) {
    EisensteinRational alpha(x, y);
    return alpha * EisensteinRational(alpha.norm());
}

std::optional<DescentWitness> solve_g(const EisensteinRational& a) {
    if (a.is_zero())
        return DescentWitness::for_value(0, 0, a);
    auto r = exact_cube_root(a.norm());
    if (!r)
        return std::nullopt;
    EisensteinRational alpha = a / EisensteinRational(*r);
    if (alpha.norm() != *r)
        return std::nullopt;
    return DescentWitness::for_value(alpha.coeff_a(), alpha.coeff_b(), a);
}

DescentClassification classify(const EisensteinRational& a) {
    if (a.is_zero())
        return {DescentKind::Undefined, std::nullopt};
    if (is_cube(a).is_cube)
        return {DescentKind::Disconnected, std::nullopt};
    if (auto w = solve_g(a))
        return {DescentKind::Descends, std::move(w)};
    return {DescentKind::NoDescent, std::nullopt};
}

DescentClassification classify(const Point& point) {
    if (std::holds_alternative<Infinity>(point))
        return {DescentKind::Undefined, std::nullopt};
    return classify(std::get<EisensteinRational>(point));
}

bool verify_galois_commute(const EisensteinRational& a, const DescentWitness& w) {
    if (a.is_zero())
        throw PreconditionError("the commutation check needs a != 0");
    if (eval_g(w.x(), w.y()) != a)
        throw PreconditionError("invalid witness: g(x, y) != a");
    return a * a == a.conj() * pow(w.alpha(), 3);
}

namespace {

const EisensteinInt& pi() {
    static const EisensteinInt value = EisensteinInt::pi();
    return value;
}

void require_pi_divides_g(const mpz_class& x, const mpz_class& y) {
    const EisensteinInt alpha(x, y);
    const EisensteinInt g = alpha * alpha * alpha.conj();
    if (!divides(pi(), g))
        throw PreconditionError("pi does not divide g(x, y)");
}

} // namespace

std::pair<mpz_class, mpz_class> reduce_by_pi(const mpz_class& x, const mpz_class& y) {
    require_pi_divides_g(x, y);
    const EisensteinInt reduced = -divide_exact(EisensteinInt(x, y), pi());
    return {reduced.a(), reduced.b()};
}

bool check_pi_divides_parts(const mpz_class& x, const mpz_class& y) {
    require_pi_divides_g(x, y);
    const EisensteinInt alpha(x, y);
    return divides(pi(), alpha) && divides(pi(), alpha.conj());
}

Polynomial::Polynomial(std::vector<EisensteinRational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

EisensteinRational Polynomial::operator()(const EisensteinRational& z) const {
    EisensteinRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

std::optional<EisensteinRational> specialization_value(const Polynomial& f, const Point& z0) {
    if (f.degree() < 1)
        throw PreconditionError("the cover polynomial must have degree >= 1");
    if (const auto* z = std::get_if<EisensteinRational>(&z0))
        return f(*z);
    if (f.degree() == 3)
        return f.leading();
    return std::nullopt;
}

DescentClassification specialize(const Polynomial& f, const Point& z0) {
    if (auto a = specialization_value(f, z0))
        return classify(*a);
    return {DescentKind::Undefined, std::nullopt};
}

} // namespace kdescent
