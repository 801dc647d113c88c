#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "snmat/errors.hpp"

namespace snmat {

// Exponent in N ∪ {∞}; addition saturates at ∞.
class Exponent {
public:
    Exponent() = default;  // 0
    static Exponent finite(std::uint64_t v)
    {
        Exponent e;
        e.value_ = v;
        return e;
    }
    static Exponent infinity()
    {
        Exponent e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && value_ == 0; }
    std::uint64_t value() const;  // finite only

    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent max(const Exponent& a, const Exponent& b);
    friend Exponent min(const Exponent& a, const Exponent& b);
    friend bool operator<=(const Exponent& a, const Exponent& b);
    friend bool operator==(const Exponent&, const Exponent&) = default;

    std::string to_string() const;

private:
    bool infinite_ = false;
    std::uint64_t value_ = 0;
};

// Supernatural (Steinitz) number: formal product of p^α over a finite set of
// primes, α ∈ {1, 2, ...} ∪ {∞}. The empty product is 1.
class Supernatural {
public:
    Supernatural() = default;  // 1

    static Supernatural from_natural(std::uint64_t n);      // n >= 1
    static Supernatural infinite_power(std::uint64_t n);    // n^∞, n >= 1
    static Supernatural parse(const std::string& text);     // "2^inf*3^2*5", "1"
    static Supernatural of(std::uint64_t p, Exponent e);    // single prime power

    std::string to_string() const;  // primes ascending, ^inf for ∞, ^1 omitted
    const std::map<std::uint64_t, Exponent>& exponents() const { return exps_; }
    Exponent exponent_of(std::uint64_t p) const;
    bool is_one() const { return exps_.empty(); }
    bool is_locally_finite() const;
    Supernatural primary_component(std::uint64_t p) const;  // p must be prime
    bool tensor_absorbs(std::uint64_t n) const;             // n^∞ divides this

    friend Supernatural mul(const Supernatural& a, const Supernatural& b);
    friend Supernatural lcm(const Supernatural& a, const Supernatural& b);
    friend Supernatural gcd(const Supernatural& a, const Supernatural& b);
    friend bool divides(const Supernatural& a, const Supernatural& b);
    friend bool operator==(const Supernatural&, const Supernatural&) = default;

private:
    std::map<std::uint64_t, Exponent> exps_;  // prime -> nonzero exponent

    void set(std::uint64_t p, Exponent e);
};

}  // namespace snmat
