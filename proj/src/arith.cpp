#include "torgit/arith.hpp"

#include "torgit/errors.hpp"

#include <cctype>

namespace torgit {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    if (start == text.size()) throw InputError("empty integer literal");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InputError("malformed integer literal '" + std::string(text) + "'");
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw InputError("dot product of vectors with different lengths");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw InputError("dot product of vectors with different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

IntVector primitive(const RatVector& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, x.get_den());
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_num() * (den / x.get_den()));
    return primitive(out);
}

IntVector primitive(const IntVector& v) {
    Integer g = gcd_of(v);
    if (g == 0) return v;
    IntVector out = v;
    for (auto& x : out) x /= g;
    return out;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

int sign(const Integer& v) { return sgn(v); }
int sign(const Rational& v) { return sgn(v); }

Integer floor_sqrt(const Rational& q) {
    if (q < 0) throw InternalError("floor_sqrt of a negative rational");
    Integer fl = q.get_num() / q.get_den();
    Integer r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    return r;
}

std::string to_string(const IntVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

}  // namespace torgit
