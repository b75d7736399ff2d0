#include "filtrep/field.hpp"

#include <sstream>

namespace filtrep {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p > 65536 || !is_prime_u32(p))
        throw validation_error("field modulus must be a prime <= 2^16, got " +
                               std::to_string(p));
    return FieldSpec(Kind::prime, p);
}

namespace {

// residue of x in [0, p)
long long mod_reduce(const Integer& x, long long p) {
    Integer r = x % p;
    if (r < 0) r += p;
    return static_cast<long long>(r);
}

long long mod_inv(long long a, long long p) {
    // extended Euclid; a nonzero mod p
    long long t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw domain_error("not invertible mod p");
    if (t < 0) t += p;
    return t;
}

}  // namespace

Rational FieldSpec::normalize(const Rational& x) const {
    if (kind_ == Kind::rationals) return x;  // cpp_rational keeps lowest terms
    const long long p = p_;
    long long num = mod_reduce(numerator(x), p);
    long long den = mod_reduce(denominator(x), p);
    if (den == 0) throw domain_error("denominator vanishes mod " + std::to_string(p_));
    if (den != 1) num = (num * mod_inv(den, p)) % p;
    return Rational(num);
}

Rational FieldSpec::add(const Rational& a, const Rational& b) const {
    return normalize(a + b);
}
Rational FieldSpec::sub(const Rational& a, const Rational& b) const {
    return normalize(a - b);
}
Rational FieldSpec::mul(const Rational& a, const Rational& b) const {
    return normalize(a * b);
}
Rational FieldSpec::neg(const Rational& a) const { return normalize(-a); }

Rational FieldSpec::inv(const Rational& a) const {
    if (a == 0) throw domain_error("division by zero");
    if (kind_ == Kind::rationals) return Rational(1) / a;
    long long num = mod_reduce(numerator(a), p_);
    if (num == 0) throw domain_error("division by zero");
    return Rational(mod_inv(num, p_));
}

Rational FieldSpec::div(const Rational& a, const Rational& b) const {
    return mul(a, inv(b));
}

Rational FieldSpec::from_int(long long v) const { return normalize(Rational(v)); }

std::string FieldSpec::to_string(const Rational& x) const {
    std::ostringstream os;
    if (kind_ == Kind::rationals) {
        os << numerator(x);
        if (denominator(x) != 1) os << "/" << denominator(x);
    } else {
        os << numerator(normalize(x)) << " mod " << p_;
    }
    return os.str();
}

std::optional<Rational> FieldSpec::parse(const std::string& s) const {
    std::string body = s;
    auto mod_pos = s.find(" mod ");
    if (mod_pos != std::string::npos) {
        if (kind_ != Kind::prime) return std::nullopt;
        std::string mod_part = s.substr(mod_pos + 5);
        try {
            if (std::stoul(mod_part) != p_) return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
        body = s.substr(0, mod_pos);
    }
    // body is "int" or "int/int"
    auto slash = body.find('/');
    try {
        Integer num(slash == std::string::npos ? body : body.substr(0, slash));
        Integer den = 1;
        if (slash != std::string::npos) den = Integer(body.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return normalize(Rational(num, den));
    } catch (...) {
        return std::nullopt;
    }
}

std::string FieldSpec::name() const {
    if (kind_ == Kind::rationals) return "q";
    return "fp:" + std::to_string(p_);
}

}  // namespace filtrep
