#include "hhkit/poly.hpp"

#include <cctype>
#include <sstream>

namespace hhkit {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& s) {
    Poly r(s.field());
    if (!s.is_zero()) r.c_ = {s};
    return r;
}

Poly Poly::monomial(Field f, int deg, const Scalar& coeff) {
    Poly r(f);
    if (coeff.is_zero()) return r;
    r.c_.assign(deg + 1, Scalar::zero(f));
    r.c_[deg] = coeff;
    return r;
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(f_);
    return c_[i];
}

Scalar Poly::lead() const {
    if (is_zero()) fail("BadParameters", "leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(f_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r(f_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

Poly Poly::operator*(const Scalar& s) const {
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& b) const {
    if (b.is_zero()) fail("ZeroDivisor", "polynomial division by zero");
    Poly q(f_), r = *this;
    Scalar linv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Scalar c = r.lead() * linv;
        Poly t = Poly::monomial(f_, k, c);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

Poly Poly::derivative() const {
    Poly r(f_);
    if (degree() < 1) return r;
    r.c_.assign(c_.size() - 1, Scalar::zero(f_));
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Scalar(f_, static_cast<long>(i));
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) fail("BadParameters", "cannot normalize zero polynomial");
    return *this * lead().inverse();
}

Poly gcd_monic(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) fail("BothZero", "gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Scalar c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        if (i == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << "X";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip();
        return s[i++];
    }
};

mpz_class parse_int(Cursor& c) {
    c.skip();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) digits += c.s[c.i++];
    if (digits.empty()) fail("InputError", "expected integer at position " + std::to_string(c.i) + " in polynomial");
    return mpz_class(digits);
}

// term := [coefficient '*'] 'X' ['^' int] | coefficient
// coefficient := int ['/' int]
Poly parse_term(Field f, Cursor& c) {
    Scalar coeff = Scalar::one(f);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        mpz_class num = parse_int(c);
        mpz_class den = 1;
        if (c.peek() == '/') {
            c.take();
            den = parse_int(c);
            if (den == 0) fail("InputError", "zero denominator in polynomial coefficient");
        }
        coeff = Scalar(f, mpq_class(num, den));
        have_coeff = true;
    }
    if (c.peek() == '*') {
        if (!have_coeff) fail("InputError", "unexpected '*' in polynomial");
        c.take();
    }
    if (c.peek() == 'X' || c.peek() == 'x') {
        c.take();
        int deg = 1;
        if (c.peek() == '^') {
            c.take();
            deg = static_cast<int>(parse_int(c).get_si());
            if (deg < 0) fail("InputError", "negative exponent in polynomial");
        }
        return Poly::monomial(f, deg, coeff);
    }
    if (!have_coeff) fail("InputError", "expected term at position " + std::to_string(c.i) + " in polynomial");
    return Poly::constant(coeff);
}

}  // namespace

Poly Poly::parse(Field f, const std::string& text) {
    Cursor c{text};
    Poly result(f);
    bool negate = false;
    if (c.peek() == '-') {
        c.take();
        negate = true;
    } else if (c.peek() == '+') {
        c.take();
    }
    while (true) {
        Poly t = parse_term(f, c);
        result = negate ? result - t : result + t;
        if (c.done()) break;
        char op = c.take();
        if (op == '+')
            negate = false;
        else if (op == '-')
            negate = true;
        else
            fail("InputError", std::string("unexpected character '") + op + "' in polynomial");
    }
    return result;
}

}  // namespace hhkit
