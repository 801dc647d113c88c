#include "snmat/field.hpp"

#include <cstdlib>

namespace snmat {

const char* errc_name(errc kind) noexcept
{
    switch (kind) {
    case errc::domain: return "domain";
    case errc::parse: return "parse";
    case errc::chain_mismatch: return "chain_mismatch";
    case errc::radix_mismatch: return "radix_mismatch";
    case errc::depth_exceeded: return "depth_exceeded";
    case errc::division_by_zero: return "division_by_zero";
    case errc::field_mismatch: return "field_mismatch";
    case errc::kind_mismatch: return "kind_mismatch";
    case errc::unbalanced: return "unbalanced";
    }
    return "unknown";
}

namespace {

bool is_prime_u64(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p)
{
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; a in [1, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod_reduce(t, p);
}

}  // namespace

Field Field::prime(std::int64_t p)
{
    if (!is_prime_u64(p))
        fail(errc::domain, "not a prime: " + std::to_string(p));
    if (p >= (std::int64_t{1} << 31))
        fail(errc::domain, "prime too large: " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

Field Field::parse(const std::string& text)
{
    if (text == "q" || text == "Q")
        return rationals();
    if (text.rfind("fp:", 0) == 0) {
        try {
            std::size_t pos = 0;
            long long p = std::stoll(text.substr(3), &pos);
            if (pos == text.size() - 3)
                return prime(p);
        } catch (const std::logic_error&) {
        }
    }
    fail(errc::parse, "bad field literal: \"" + text + "\" (want q or fp:<p>)");
}

std::string Field::to_string() const
{
    return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f)
{
    return Scalar(f);
}

Scalar Scalar::one(const Field& f)
{
    return of(f, 1);
}

Scalar Scalar::of(const Field& f, long long n)
{
    Scalar s(f);
    if (f.is_rationals())
        s.rat_ = mpq_class(static_cast<long>(n));
    else
        s.res_ = mod_reduce(n, f.characteristic());
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text)
{
    auto slash = text.find('/');
    std::string num_text = text.substr(0, slash);
    std::string den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto parse_int = [&](const std::string& part) -> long long {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(part, &pos);
            if (pos == part.size() && !part.empty())
                return v;
        } catch (const std::logic_error&) {
        }
        fail(errc::parse, "bad scalar literal: \"" + text + "\"");
    };
    long long num = parse_int(num_text);
    long long den = parse_int(den_text);
    if (den == 0)
        fail(errc::division_by_zero, "zero denominator in \"" + text + "\"");
    return of(f, num) / of(f, den);
}

bool Scalar::is_zero() const
{
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const
{
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

std::string Scalar::to_string() const
{
    return field_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

Scalar Scalar::operator-() const
{
    Scalar s(field_);
    if (field_.is_rationals())
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
    return s;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        fail(errc::division_by_zero, "inverse of zero");
    Scalar s(field_);
    if (field_.is_rationals())
        s.rat_ = 1 / rat_;
    else
        s.res_ = mod_inverse(res_, field_.characteristic());
    return s;
}

void Scalar::check_same(const Scalar& a, const Scalar& b)
{
    if (!(a.field_ == b.field_))
        fail(errc::field_mismatch,
             "scalars from different fields: " + a.field_.to_string() + " vs " + b.field_.to_string());
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rationals())
        s.rat_ = a.rat_ + b.rat_;
    else
        s.res_ = (a.res_ + b.res_) % a.field_.characteristic();
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rationals())
        s.rat_ = a.rat_ * b.rat_;
    else
        s.res_ = (a.res_ * b.res_) % a.field_.characteristic();
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    return a.field_.is_rationals() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

}  // namespace snmat
