#include "snmat/supernatural.hpp"

#include <algorithm>
#include <sstream>

namespace snmat {

namespace {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

}  // namespace

std::uint64_t Exponent::value() const
{
    if (infinite_)
        fail(errc::domain, "infinite exponent has no finite value");
    return value_;
}

Exponent operator+(const Exponent& a, const Exponent& b)
{
    if (a.infinite_ || b.infinite_)
        return Exponent::infinity();
    return Exponent::finite(a.value_ + b.value_);
}

Exponent max(const Exponent& a, const Exponent& b)
{
    return (a <= b) ? b : a;
}

Exponent min(const Exponent& a, const Exponent& b)
{
    return (a <= b) ? a : b;
}

bool operator<=(const Exponent& a, const Exponent& b)
{
    if (b.infinite_)
        return true;
    if (a.infinite_)
        return false;
    return a.value_ <= b.value_;
}

std::string Exponent::to_string() const
{
    return infinite_ ? "inf" : std::to_string(value_);
}

void Supernatural::set(std::uint64_t p, Exponent e)
{
    if (e.is_zero())
        exps_.erase(p);
    else
        exps_[p] = e;
}

Supernatural Supernatural::from_natural(std::uint64_t n)
{
    if (n == 0)
        fail(errc::domain, "0 is not a supernatural number");
    Supernatural s;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        std::uint64_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0)
            s.exps_[d] = Exponent::finite(e);
    }
    if (n > 1)
        s.exps_[n] = Exponent::finite(1);
    return s;
}

Supernatural Supernatural::infinite_power(std::uint64_t n)
{
    Supernatural s = from_natural(n);
    for (auto& [p, e] : s.exps_)
        e = Exponent::infinity();
    return s;
}

Supernatural Supernatural::of(std::uint64_t p, Exponent e)
{
    if (!is_prime(p))
        fail(errc::domain, "not a prime: " + std::to_string(p));
    Supernatural s;
    s.set(p, e);
    return s;
}

Supernatural Supernatural::parse(const std::string& text)
{
    if (text == "1")
        return Supernatural{};
    Supernatural s;
    std::uint64_t last_prime = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t star = text.find('*', pos);
        std::string part = text.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? text.size() : star + 1;

        auto caret = part.find('^');
        std::string p_text = part.substr(0, caret);
        std::string e_text = caret == std::string::npos ? "1" : part.substr(caret + 1);
        std::uint64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoull(p_text, &used);
            if (used != p_text.size() || p_text.empty())
                fail(errc::parse, "");
        } catch (const std::exception&) {
            fail(errc::parse, "bad supernatural literal: \"" + text + "\"");
        }
        if (!is_prime(p))
            fail(errc::parse, "non-prime base " + std::to_string(p) + " in \"" + text + "\"");
        if (p <= last_prime)
            fail(errc::parse, "primes must be strictly ascending in \"" + text + "\"");
        last_prime = p;

        Exponent e;
        if (e_text == "inf") {
            e = Exponent::infinity();
        } else {
            try {
                std::size_t used = 0;
                std::uint64_t v = std::stoull(e_text, &used);
                if (used != e_text.size() || v == 0)
                    fail(errc::parse, "");
                e = Exponent::finite(v);
            } catch (const std::exception&) {
                fail(errc::parse, "bad exponent in \"" + text + "\"");
            }
        }
        s.exps_[p] = e;
    }
    return s;
}

std::string Supernatural::to_string() const
{
    if (exps_.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, e] : exps_) {
        if (!first)
            out << '*';
        first = false;
        out << p;
        if (e.is_infinite())
            out << "^inf";
        else if (e.value() != 1)
            out << '^' << e.value();
    }
    return out.str();
}

Exponent Supernatural::exponent_of(std::uint64_t p) const
{
    auto it = exps_.find(p);
    return it == exps_.end() ? Exponent{} : it->second;
}

bool Supernatural::is_locally_finite() const
{
    return std::ranges::none_of(exps_, [](const auto& kv) { return kv.second.is_infinite(); });
}

Supernatural Supernatural::primary_component(std::uint64_t p) const
{
    if (!is_prime(p))
        fail(errc::domain, "not a prime: " + std::to_string(p));
    Supernatural s;
    s.set(p, exponent_of(p));
    return s;
}

bool Supernatural::tensor_absorbs(std::uint64_t n) const
{
    return divides(infinite_power(n), *this);
}

Supernatural mul(const Supernatural& a, const Supernatural& b)
{
    Supernatural s = a;
    for (const auto& [p, e] : b.exps_)
        s.set(p, s.exponent_of(p) + e);
    return s;
}

Supernatural lcm(const Supernatural& a, const Supernatural& b)
{
    Supernatural s = a;
    for (const auto& [p, e] : b.exps_)
        s.set(p, max(s.exponent_of(p), e));
    return s;
}

Supernatural gcd(const Supernatural& a, const Supernatural& b)
{
    Supernatural s;
    for (const auto& [p, e] : a.exps_)
        s.set(p, min(e, b.exponent_of(p)));
    return s;
}

bool divides(const Supernatural& a, const Supernatural& b)
{
    return std::ranges::all_of(a.exps_, [&](const auto& kv) {
        return kv.second <= b.exponent_of(kv.first);
    });
}

}  // namespace snmat
