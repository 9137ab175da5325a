#pragma once

#include "s2cobar/core/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace s2cobar {

using Integer = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

/// Parity helpers for Koszul signs. Degrees may be negative.
constexpr bool odd(long long n) { return (n % 2) != 0; }
constexpr int sign_of(long long parity) { return odd(parity) ? -1 : 1; }

/// Coefficient ring selector. Values are carried as exact rationals and
/// brought to canonical form by `reduce`.
class Ring {
public:
    enum class Kind { Integers, Rationals, IntegersMod };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    static Ring rationals() { return Ring(Kind::Rationals, 0); }
    static Ring mod(std::int64_t m)
    {
        if (m < 2)
            throw RingError("modulus must be at least 2");
        return Ring(Kind::IntegersMod, m);
    }

    /// Accepts "z", "q", "zmod:m" and the shorthands "z2", "z3", ...
    static Ring parse(std::string_view text)
    {
        if (text == "z" || text == "Z")
            return integers();
        if (text == "q" || text == "Q")
            return rationals();
        std::string_view digits;
        if (text.starts_with("zmod:"))
            digits = text.substr(5);
        else if (text.size() > 1 && (text[0] == 'z' || text[0] == 'Z'))
            digits = text.substr(1);
        else
            throw RingError("unknown ring '" + std::string(text) + "'");
        try {
            std::size_t used = 0;
            long long m = std::stoll(std::string(digits), &used);
            if (used != digits.size())
                throw RingError("bad modulus in '" + std::string(text) + "'");
            return mod(m);
        }
        catch (const std::logic_error&) {
            throw RingError("bad modulus in '" + std::string(text) + "'");
        }
    }

    Kind kind() const { return kind_; }
    std::int64_t modulus() const { return modulus_; }
    bool is_field() const
    {
        if (kind_ == Kind::Rationals)
            return true;
        if (kind_ == Kind::Integers)
            return false;
        for (std::int64_t p = 2; p * p <= modulus_; ++p)
            if (modulus_ % p == 0)
                return false;
        return true;
    }
    bool has_half() const { return kind_ == Kind::Rationals || (kind_ == Kind::IntegersMod && modulus_ % 2 == 1); }

    std::string name() const
    {
        switch (kind_) {
        case Kind::Integers: return "z";
        case Kind::Rationals: return "q";
        case Kind::IntegersMod: return "zmod:" + std::to_string(modulus_);
        }
        return "?";
    }

    /// Canonical representative: integers stay integral, Z/m lands in [0, m).
    Scalar reduce(const Scalar& value) const
    {
        switch (kind_) {
        case Kind::Rationals:
            return value;
        case Kind::Integers:
            if (denominator(value) != 1)
                throw RingError("non-integral coefficient over Z");
            return value;
        case Kind::IntegersMod: {
            Integer m = modulus_;
            Integer num = numerator(value) % m;
            if (num < 0)
                num += m;
            Integer den = denominator(value) % m;
            if (den != 1)
                num = (num * invert_mod(den, m)) % m;
            return Scalar(num);
        }
        }
        return value;
    }

    Scalar inverse(const Scalar& value) const
    {
        Scalar v = reduce(value);
        if (v == 0)
            throw RingError("division by zero");
        switch (kind_) {
        case Kind::Rationals:
            return 1 / v;
        case Kind::Integers:
            if (v == 1 || v == -1)
                return v;
            throw RingError("non-unit over Z");
        case Kind::IntegersMod:
            return Scalar(invert_mod(numerator(v), Integer(modulus_)));
        }
        return v;
    }

    bool operator==(const Ring& other) const = default;

private:
    Ring(Kind kind, std::int64_t m) : kind_(kind), modulus_(m) {}

    static Integer invert_mod(Integer a, const Integer& m)
    {
        a %= m;
        if (a < 0)
            a += m;
        Integer r0 = m, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            Integer q = r0 / r1;
            Integer t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        if (r0 != 1)
            throw RingError("coefficient not invertible modulo " + m.str());
        s0 %= m;
        if (s0 < 0)
            s0 += m;
        return s0;
    }

    Kind kind_;
    std::int64_t modulus_;
};

inline std::string to_string(const Scalar& value)
{
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace s2cobar
