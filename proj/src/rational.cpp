#include "pdgm/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pdgm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Parses an optionally signed run of digits into z. Returns false on junk.
bool parse_integer(std::string_view s, mpz_t z) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return false;
    mpz_set_str(z, std::string(s).c_str(), 10);
    if (neg) mpz_neg(z, z);
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (mpq_sgn(o.v_) == 0) throw std::invalid_argument("Rational: division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    Rational r;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
        mpz_t n, d;
        mpz_init(n);
        mpz_init(d);
        const bool ok = parse_integer(num, n) && all_digits(den) &&
                        (mpz_set_str(d, std::string(den).c_str(), 10), mpz_sgn(d) > 0);
        if (ok) {
            mpq_set_num(r.v_, n);
            mpq_set_den(r.v_, d);
            mpq_canonicalize(r.v_);
        }
        mpz_clear(n);
        mpz_clear(d);
        if (!ok) return std::nullopt;
        return r;
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
        bool neg = false;
        if (!ip.empty() && (ip.front() == '+' || ip.front() == '-')) {
            neg = ip.front() == '-';
            ip.remove_prefix(1);
        }
        if (fp.find('.') != std::string_view::npos) return std::nullopt;
        if (ip.empty() && fp.empty()) return std::nullopt;
        if (!ip.empty() && !all_digits(ip)) return std::nullopt;
        if (!fp.empty() && !all_digits(fp)) return std::nullopt;

        mpz_t n;
        mpz_init(n);
        std::string digits = std::string(ip) + std::string(fp);
        mpz_set_str(n, digits.empty() ? "0" : digits.c_str(), 10);
        if (neg) mpz_neg(n, n);
        mpz_t d;
        mpz_init(d);
        mpz_ui_pow_ui(d, 10, fp.size());
        mpq_set_num(r.v_, n);
        mpq_set_den(r.v_, d);
        mpq_canonicalize(r.v_);
        mpz_clear(n);
        mpz_clear(d);
        return r;
    }

    mpz_t n;
    mpz_init(n);
    const bool ok = parse_integer(text, n);
    if (ok) mpq_set_num(r.v_, n);
    mpz_clear(n);
    if (!ok) return std::nullopt;
    return r;
}

std::string Rational::str() const {
    char* raw = mpq_get_str(nullptr, 10, v_);
    std::string s(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_t num, den, scaled, q, rem;
    mpz_inits(num, den, scaled, q, rem, nullptr);
    mpz_set(num, mpq_numref(v_));
    mpz_set(den, mpq_denref(v_));
    const bool neg = mpz_sgn(num) < 0;
    mpz_abs(num, num);

    mpz_ui_pow_ui(scaled, 10, static_cast<unsigned long>(digits));
    mpz_mul(scaled, scaled, num);
    mpz_fdiv_qr(q, rem, scaled, den);
    // round half away from zero on the (digits+1)-th digit
    mpz_mul_2exp(rem, rem, 1);
    if (mpz_cmp(rem, den) >= 0) mpz_add_ui(q, q, 1);

    std::string body;
    {
        char* raw = mpz_get_str(nullptr, 10, q);
        body = raw;
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(raw, body.size() + 1);
    }
    mpz_clears(num, den, scaled, q, rem, nullptr);

    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out;
    if (neg && body.find_first_not_of('0') != std::string::npos) out += '-';
    if (digits == 0) {
        out += body;
    } else {
        out += body.substr(0, body.size() - digits);
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace pdgm
