#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "snmat/errors.hpp"

namespace snmat {

// The scalar field F: the rationals, or a prime field F_p.
class Field {
public:
    Field() = default;  // rationals

    static Field rationals() { return Field{}; }
    static Field prime(std::int64_t p);
    static Field parse(const std::string& text);  // "q" | "fp:<p>"

    bool is_rationals() const { return p_ == 0; }
    std::int64_t characteristic() const { return p_; }  // 0 for Q
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::int64_t p_ = 0;
};

// An exact element of its field. Canonical form throughout: reduced
// fraction over Q, residue in [0, p) over F_p. Equality is exact.
class Scalar {
public:
    Scalar() = default;  // zero of Q

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of(const Field& f, long long n);
    // "3", "-2", "3/4" (interpreted in f; division by an invertible denominator)
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws division_by_zero on 0

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

private:
    Field field_;
    mpq_class rat_;         // rationals only
    std::int64_t res_ = 0;  // prime fields only, in [0, p)

    explicit Scalar(const Field& f) : field_(f) {}
    static void check_same(const Scalar& a, const Scalar& b);
};

}  // namespace snmat
