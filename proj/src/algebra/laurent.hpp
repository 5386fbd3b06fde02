#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qar {

enum class ErrorKind { DivisionByZero, InvalidArgument, Unsupported, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

namespace alg {

using Rat = mpq_class;

/// Laurent polynomial in q with exact rational coefficients.
///
/// Stored as a coefficient vector with an offset: c_[i] is the coefficient
/// of q^(low_+i). Both ends of the vector are kept nonzero (zero means an
/// empty vector), so equality is plain member comparison.
class Laurent {
public:
    Laurent() = default;
    Laurent(long n) { *this = Laurent(Rat(n)); }
    explicit Laurent(const Rat& r) {
        if (r != 0) {
            low_ = 0;
            c_.assign(1, r);
        }
    }

    static Laurent monomial(const Rat& coeff, int exp);
    /// q^exp
    static Laurent q(int exp = 1) { return monomial(1, exp); }
    /// (-q)^exp = (-1)^exp q^exp
    static Laurent neg_q_pow(int exp) { return monomial((exp % 2 == 0) ? 1 : -1, exp); }
    /// quantum integer [m] = (q^m - q^-m)/(q - q^-1)
    static Laurent qint(int m);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }
    bool is_monomial() const { return c_.size() == 1; }

    int low() const;
    int high() const;
    Rat coeff(int exp) const;
    const Rat& leading() const;
    const Rat& trailing() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent& a, const Laurent& b) = default;

    /// multiply by q^d
    Laurent shifted(int d) const;
    void scale(const Rat& r);
    /// substitute q -> qv (qv must be nonzero when negative exponents occur)
    Rat eval(const Rat& qv) const;
    /// substitute q -> 1/q
    Laurent inverted_q() const;

    std::string str(const std::string& var = "q") const;

private:
    void trim();
    friend Laurent exact_div(const Laurent& a, const Laurent& b);
    friend Laurent gcd(const Laurent& a, const Laurent& b);

    int low_ = 0;
    std::vector<Rat> c_;
};

/// gcd normalized to an ordinary primitive integer polynomial with positive
/// leading coefficient (lowest exponent 0); gcd(0,0) = 0.
Laurent gcd(const Laurent& a, const Laurent& b);

/// exact division; throws Error(Internal) if the division leaves a remainder
/// and Error(DivisionByZero) if b = 0.
Laurent exact_div(const Laurent& a, const Laurent& b);

}  // namespace alg
}  // namespace qar
