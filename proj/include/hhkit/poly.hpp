#pragma once

#include <utility>
#include <vector>

#include "hhkit/scalar.hpp"

namespace hhkit {

// Univariate polynomial in X over a fixed field, dense coefficients,
// coefficient of X^i at index i, no trailing zeros.
class Poly {
  public:
    explicit Poly(Field f) : f_(f) {}
    Poly(Field f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }
    static Poly zero(Field f) { return Poly(f); }
    static Poly constant(const Scalar& s);
    static Poly monomial(Field f, int deg, const Scalar& coeff);
    static Poly X(Field f) { return monomial(f, 1, Scalar::one(f)); }

    Field field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(int i) const;
    Scalar lead() const;
    bool is_monic() const { return !is_zero() && lead().is_one(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& s) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Quotient and remainder with deg r < deg b; b must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& b) const;
    Poly derivative() const;
    Poly monic() const;

    std::string str() const;
    // Parses sums of terms like "3*X^2", "-X", "1/2*X^4", "7".
    static Poly parse(Field f, const std::string& text);

  private:
    void trim();
    Field f_;
    std::vector<Scalar> c_;
};

// Monic gcd via the Euclidean algorithm; rejects gcd(0, 0).
Poly gcd_monic(const Poly& a, const Poly& b);

}  // namespace hhkit
