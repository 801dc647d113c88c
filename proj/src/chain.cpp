#include "snmat/chain.hpp"

#include <limits>
#include <sstream>

namespace snmat {

Chain::Chain(std::vector<std::uint64_t> radices, RepeatPolicy policy)
    : radices_(std::move(radices)), policy_(policy)
{
    if (radices_.empty())
        fail(errc::domain, "chain needs at least one radix");
    for (std::uint64_t m : radices_)
        if (m < 2)
            fail(errc::domain, "chain radix must be >= 2, got " + std::to_string(m));
}

Chain Chain::homogeneous(std::uint64_t m)
{
    return Chain({m}, RepeatPolicy::repeat_last);
}

Chain Chain::parse(const std::string& text)
{
    std::string radix_part = text;
    RepeatPolicy policy = RepeatPolicy::none;
    if (auto plus = text.find('+'); plus != std::string::npos) {
        std::string suffix = text.substr(plus + 1);
        radix_part = text.substr(0, plus);
        if (suffix == "repeat")
            policy = RepeatPolicy::repeat_last;
        else if (suffix == "repeat-pattern")
            policy = RepeatPolicy::repeat_pattern;
        else
            fail(errc::parse, "bad chain suffix \"+" + suffix + "\"");
    }
    std::vector<std::uint64_t> radices;
    std::istringstream in(radix_part);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            radices.push_back(std::stoull(item, &used));
            if (used != item.size() || item.empty())
                fail(errc::parse, "");
        } catch (const std::exception&) {
            fail(errc::parse, "bad chain literal: \"" + text + "\"");
        }
    }
    try {
        return Chain(std::move(radices), policy);
    } catch (const error& e) {
        fail(errc::parse, std::string(e.what()) + " in \"" + text + "\"");
    }
}

std::string Chain::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        if (i)
            out << ',';
        out << radices_[i];
    }
    if (policy_ == RepeatPolicy::repeat_last)
        out << "+repeat";
    else if (policy_ == RepeatPolicy::repeat_pattern)
        out << "+repeat-pattern";
    return out.str();
}

std::uint64_t Chain::radix(std::size_t t) const
{
    if (t == 0)
        fail(errc::domain, "radix index is 1-based");
    if (t <= radices_.size())
        return radices_[t - 1];
    switch (policy_) {
    case RepeatPolicy::repeat_last: return radices_.back();
    case RepeatPolicy::repeat_pattern: return radices_[(t - 1) % radices_.size()];
    case RepeatPolicy::none: break;
    }
    fail(errc::depth_exceeded,
         "chain " + to_string() + " has depth " + std::to_string(radices_.size()) +
             ", level " + std::to_string(t) + " requested");
}

std::uint64_t Chain::level_size(std::size_t t) const
{
    std::uint64_t n = 1;
    for (std::size_t i = 1; i <= t; ++i) {
        std::uint64_t m = radix(i);
        if (n > std::numeric_limits<std::uint64_t>::max() / m)
            fail(errc::depth_exceeded, "level size overflow at level " + std::to_string(t));
        n *= m;
    }
    return n;
}

bool Chain::homogeneous() const
{
    for (std::uint64_t m : radices_)
        if (m != radices_.front())
            return false;
    return true;
}

Supernatural Chain::degree() const
{
    if (unbounded()) {
        std::uint64_t pattern = 1;
        if (policy_ == RepeatPolicy::repeat_last) {
            pattern = radices_.back();
        } else {
            for (std::uint64_t m : radices_)
                pattern = pattern * m;  // radices are small; fine at desk scale
        }
        Supernatural finite_part = Supernatural::from_natural(level_size(stored_depth()));
        return lcm(finite_part, Supernatural::infinite_power(pattern));
    }
    return Supernatural::from_natural(level_size(stored_depth()));
}

Word Word::parse(const std::string& text)
{
    if (text == "_")
        return Word{};
    std::vector<std::uint32_t> msd_first;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, '.')) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(item, &used);
            if (used != item.size() || item.empty() || v > std::numeric_limits<std::uint32_t>::max())
                fail(errc::parse, "");
            msd_first.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            fail(errc::parse, "bad word literal: \"" + text + "\"");
        }
    }
    if (msd_first.empty())
        fail(errc::parse, "bad word literal: \"" + text + "\"");
    return Word(std::vector<std::uint32_t>(msd_first.rbegin(), msd_first.rend()));
}

std::string Word::to_string() const
{
    if (digits_.empty())
        return "_";
    std::ostringstream out;
    for (std::size_t i = digits_.size(); i-- > 0;) {
        out << digits_[i];
        if (i)
            out << '.';
    }
    return out.str();
}

void validate(const Word& w, const Chain& chain)
{
    for (std::size_t i = 0; i < w.length(); ++i) {
        std::uint64_t m = chain.radix(i + 1);
        if (w.digit(i) >= m)
            fail(errc::radix_mismatch,
                 "digit " + std::to_string(w.digit(i)) + " at position " + std::to_string(i) +
                     " exceeds radix " + std::to_string(m));
    }
}

std::uint64_t decode(const Word& w, const Chain& chain)
{
    validate(w, chain);
    std::uint64_t k = 0;
    for (std::size_t i = w.length(); i-- > 0;)
        k = k * chain.radix(i + 1) + w.digit(i);
    return k;
}

Word encode(std::uint64_t k, std::size_t length, const Chain& chain)
{
    if (k >= chain.level_size(length))
        fail(errc::domain, std::to_string(k) + " is not an index at level " + std::to_string(length));
    std::vector<std::uint32_t> digits(length);
    for (std::size_t i = 0; i < length; ++i) {
        std::uint64_t m = chain.radix(i + 1);
        digits[i] = static_cast<std::uint32_t>(k % m);
        k /= m;
    }
    return Word(std::move(digits));
}

std::optional<Word> split_tail(const Word& u_tail, const Word& w)
{
    if (u_tail.length() > w.length())
        return std::nullopt;
    for (std::size_t i = 0; i < u_tail.length(); ++i)
        if (w.digit(i) != u_tail.digit(i))
            return std::nullopt;
    return Word(std::vector<std::uint32_t>(w.digits().begin() + static_cast<std::ptrdiff_t>(u_tail.length()),
                                           w.digits().end()));
}

Word concat_above(const Word& v, const Word& u, const Chain& chain)
{
    std::vector<std::uint32_t> digits = u.digits();
    digits.reserve(u.length() + v.length());
    for (std::size_t j = 0; j < v.length(); ++j) {
        std::size_t pos = u.length() + j;
        std::uint64_t m = chain.radix(pos + 1);
        if (v.digit(j) >= m)
            fail(errc::radix_mismatch,
                 "digit " + std::to_string(v.digit(j)) + " does not fit radix " + std::to_string(m) +
                     " at position " + std::to_string(pos));
        digits.push_back(v.digit(j));
    }
    return Word(std::move(digits));
}

}  // namespace snmat
