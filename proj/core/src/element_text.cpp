#include "kdescent/element_text.hpp"

#include <cctype>
#include <optional>

#include "kdescent/errors.hpp"

namespace kdescent {

namespace {

class ElementParser {
public:
    explicit ElementParser(std::string_view text) : text_(text) {}

    EisensteinRational parse() {
        skip_space();
        if (at_end())
            throw ParseError("empty element", pos_);
        mpq_class a = 0, b = 0;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            advance();
        }
        term(sign, a, b);
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-')
                throw ParseError(std::string("unexpected '") + c + "'", pos_);
            advance();
            term(c == '-' ? -1 : 1, a, b);
        }
        return {a, b};
    }

private:
    void term(int sign, mpq_class& a, mpq_class& b) {
        if (at_end())
            throw ParseError("expected a term", pos_);
        std::optional<mpq_class> coeff;
        if (std::isdigit(static_cast<unsigned char>(peek())))
            coeff = rational();
        if (!at_end() && peek() == '*') {
            if (!coeff)
                throw ParseError("'*' must follow a coefficient", pos_);
            advance();
            if (at_end() || peek() != 'w')
                throw ParseError("expected 'w' after '*'", pos_);
        }
        if (!at_end() && peek() == 'w') {
            advance();
            b += sign * coeff.value_or(mpq_class(1));
        } else if (coeff) {
            a += sign * *coeff;
        } else {
            throw ParseError("expected a number or 'w'", pos_);
        }
    }

    mpq_class rational() {
        mpz_class num = integer();
        if (at_end() || peek() != '/')
            return mpq_class(num);
        advance();
        std::size_t den_pos = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a denominator", pos_);
        mpz_class den = integer();
        if (sgn(den) == 0)
            throw ParseError("zero denominator", den_pos);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    mpz_class integer() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_]);
            ++pos_;
        }
        skip_space();
        return mpz_class(digits, 10);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() {
        ++pos_;
        skip_space();
    }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void append_rational(std::string& out, const mpq_class& q) {
    out += q.get_num().get_str();
    if (q.get_den() != 1) {
        out += '/';
        out += q.get_den().get_str();
    }
}

} // namespace

EisensteinRational parse_element(std::string_view text) {
    return ElementParser(text).parse();
}

std::string format_element(const EisensteinRational& x) {
    const mpq_class a = x.coeff_a();
    const mpq_class b = x.coeff_b();
    std::string out;
    if (sgn(a) != 0)
        append_rational(out, a);
    if (sgn(b) != 0) {
        if (sgn(b) > 0 && !out.empty())
            out += '+';
        if (b == 1) {
            out += 'w';
        } else if (b == -1) {
            out += "-w";
        } else {
            append_rational(out, b);
            out += "*w";
        }
    }
    return out.empty() ? std::string("0") : out;
}

} // namespace kdescent
