#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "filtrep/errors.hpp"

namespace filtrep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field of a computation: the rationals, or a prime field F_p
/// with p <= 2^16. Scalars are stored as Rational in both cases; over F_p a
/// normalized scalar is an integer residue in [0, p).
class FieldSpec {
public:
    enum class Kind { rationals, prime };

    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
    static FieldSpec prime(std::uint32_t p);

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }
    std::uint32_t p() const { return p_; }

    bool operator==(const FieldSpec&) const = default;

    Rational normalize(const Rational& x) const;
    Rational add(const Rational& a, const Rational& b) const;
    Rational sub(const Rational& a, const Rational& b) const;
    Rational mul(const Rational& a, const Rational& b) const;
    Rational div(const Rational& a, const Rational& b) const;
    Rational neg(const Rational& a) const;
    Rational inv(const Rational& a) const;
    Rational from_int(long long v) const;

    /// "3/7" over Q, "2 mod 5" over F_5.
    std::string to_string(const Rational& x) const;
    /// Accepts "3", "-3/7", "2 mod 5" (modulus must match the field).
    std::optional<Rational> parse(const std::string& s) const;

    std::string name() const;  // "q" or "fp:5"

private:
    FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace filtrep
