#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace pdgm {

/// Exact rational scalar backed by GMP. Every coordinate, height, threshold
/// and distance in this library is a Rational; no floating point enters any
/// computation. Values are kept canonical (reduced, positive denominator).
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) {  // NOLINT(google-explicit-constructor): numeric literals
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}  // NOLINT
    Rational(long num, long den);

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    /// Accepts "p/q", decimal ("-2.75", ".5"), or integer literals.
    static std::optional<Rational> parse(std::string_view text);

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }

    /// Exact division by two; landscapes live on midpoints and half-persistences.
    Rational half() const {
        Rational r;
        mpq_div_2exp(r.v_, v_, 1);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    int sign() const { return mpq_sgn(v_); }
    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    /// Canonical "p/q" (or just "p" for integers).
    std::string str() const;
    /// Decimal expansion with `digits` fractional digits, rounded half away
    /// from zero. Presentation only.
    std::string decimal(int digits) const;
    /// Nearest double; used only for SVG rendering.
    double to_double() const { return mpq_get_d(v_); }

private:
    mpq_t v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace pdgm
