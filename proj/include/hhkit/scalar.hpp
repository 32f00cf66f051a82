#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhkit {

// Every computation in the library runs over an exact coefficient field:
// the rationals, or a prime field F_p.  No floating point anywhere.
enum class FieldKind { Rational, Prime };

struct Field {
    FieldKind kind = FieldKind::Rational;
    unsigned p = 0;

    static Field Q() { return Field{FieldKind::Rational, 0}; }
    static Field Fp(unsigned p);

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    unsigned characteristic() const { return kind == FieldKind::Prime ? p : 0; }
    std::string name() const;
    // Accepts "Q" or "F<p>".
    static Field parse(const std::string& s);
};

class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

[[noreturn]] void fail(const std::string& code, const std::string& what);

// An element of a fixed field.  Rationals are arbitrary-precision; prime
// field elements are kept reduced to [0, p).
class Scalar {
  public:
    Scalar() : f_(Field::Q()) {}
    explicit Scalar(Field f) : f_(f) {}
    Scalar(Field f, long n);
    Scalar(Field f, const mpq_class& v);

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    Field field() const { return f_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    void addmul(const Scalar& a, const Scalar& b);  // *this += a*b
    void submul(const Scalar& a, const Scalar& b);  // *this -= a*b
    Scalar inverse() const;
    bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void reduce();
    Field f_;
    mpq_class v_;
};

}  // namespace hhkit
