#include "fuzz/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fuzz {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(unsigned long digits) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    return p;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.erase(s.begin());
    }
    if (s.empty()) throw std::invalid_argument("sign without digits in rational literal");

    auto slash = s.find('/');
    Rational q;
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction '" + text + "'");
        mpz_class d(den, 10);  // base 10: a leading zero must not mean octal
        if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        q = Rational(mpz_class(num, 10), d);
    } else {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            if (!all_digits(s)) throw std::invalid_argument("malformed number '" + text + "'");
            q = Rational(mpz_class(s, 10));
        } else {
            const std::string whole = s.substr(0, dot);
            const std::string frac = s.substr(dot + 1);
            if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
                (!frac.empty() && !all_digits(frac)))
                throw std::invalid_argument("malformed decimal '" + text + "'");
            mpz_class scaled(whole.empty() ? std::string("0") : whole, 10);
            scaled *= pow10(frac.size());
            if (!frac.empty()) scaled += mpz_class(frac, 10);
            q = Rational(scaled, pow10(frac.size()));
        }
    }
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string format_rational(const Rational& value) {
    const mpz_class& num = value.get_num();
    const mpz_class& den = value.get_den();
    if (den == 1) return num.get_str();

    // Strip factors of 2 and 5; if nothing is left the value has a finite
    // decimal expansion.
    mpz_class rest = den;
    unsigned long twos = 0, fives = 0;
    while (mpz_even_p(rest.get_mpz_t())) {
        rest /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.get_str() + "/" + den.get_str();

    const unsigned long digits = std::max(twos, fives);
    mpz_class scaled = abs(num) * pow10(digits) / den;
    std::string body = scaled.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    if (sgn(value) < 0) body.insert(0, "-");
    return body;
}

Rational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational round_to_digits(const Rational& value, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    const mpz_class scale = pow10(static_cast<unsigned long>(digits));
    Rational shifted = abs(value) * Rational(scale);
    // round half away from zero
    mpz_class twice_num = shifted.get_num() * 2 + shifted.get_den();
    mpz_class twice_den = shifted.get_den() * 2;
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
    if (sgn(value) < 0) rounded = -rounded;
    Rational out(rounded, scale);
    out.canonicalize();
    return out;
}

Rational rational_from_double(double x, int digits) {
    return round_to_digits(Rational(x), digits);
}

}  // namespace fuzz
