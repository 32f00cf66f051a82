#include "hhkit/scalar.hpp"

namespace hhkit {

void fail(const std::string& code, const std::string& what) { throw Error(code, what); }

static bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::Fp(unsigned p) {
    if (!is_prime(p)) fail("BadParameters", "field characteristic must be prime, got " + std::to_string(p));
    return Field{FieldKind::Prime, p};
}

std::string Field::name() const {
    return kind == FieldKind::Rational ? "Q" : "F" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
    if (s == "Q" || s == "q") return Q();
    if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
        try {
            unsigned long p = std::stoul(s.substr(1));
            return Fp(static_cast<unsigned>(p));
        } catch (const std::logic_error&) {
        }
    }
    fail("BadParameters", "cannot parse field '" + s + "' (expected Q or F<p>)");
}

Scalar::Scalar(Field f, long n) : f_(f), v_(n) { reduce(); }

Scalar::Scalar(Field f, const mpq_class& v) : f_(f), v_(v) {
    if (f_.kind == FieldKind::Prime && v_.get_den() != 1) {
        // reduce a rational literal mod p: numerator * denominator^{-1}
        Scalar num(f, mpq_class(v.get_num()));
        Scalar den(f, mpq_class(v.get_den()));
        *this = num / den;
        return;
    }
    reduce();
}

void Scalar::reduce() {
    if (f_.kind != FieldKind::Prime) return;
    mpq_ptr q = v_.get_mpq_t();
    mpz_fdiv_r_ui(mpq_numref(q), mpq_numref(q), f_.p);
    if (mpz_cmp_ui(mpq_denref(q), 1) != 0) mpz_set_ui(mpq_denref(q), 1);
}

static void check_same(const Field& a, const Field& b) {
    if (a != b) fail("BadParameters", "mixed fields " + a.name() + " and " + b.name());
}

Scalar Scalar::operator-() const {
    Scalar r(f_);
    r.v_ = -v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(f_, o.f_);
    Scalar r(f_);
    r.v_ = v_ + o.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(f_, o.f_);
    Scalar r(f_);
    r.v_ = v_ - o.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(f_, o.f_);
    Scalar r(f_);
    r.v_ = v_ * o.v_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(f_, o.f_);
    v_ += o.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(f_, o.f_);
    v_ -= o.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(f_, o.f_);
    v_ *= o.v_;
    reduce();
    return *this;
}

void Scalar::addmul(const Scalar& a, const Scalar& b) {
    check_same(a.f_, b.f_);
    check_same(f_, a.f_);
    v_ += a.v_ * b.v_;
    reduce();
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
    check_same(a.f_, b.f_);
    check_same(f_, a.f_);
    v_ -= a.v_ * b.v_;
    reduce();
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail("ZeroDivisor", "division by zero in " + f_.name());
    Scalar r(f_);
    if (f_.kind == FieldKind::Rational) {
        r.v_ = 1 / v_;
        return r;
    }
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(f_.p).get_mpz_t()))
        fail("ZeroDivisor", "no inverse mod " + std::to_string(f_.p));
    r.v_ = mpq_class(inv);
    r.reduce();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(f_, o.f_);
    return *this * o.inverse();
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace hhkit
