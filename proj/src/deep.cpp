#include "snmat/deep.hpp"

#include <algorithm>
#include <optional>

namespace snmat {

namespace {

void check_compatible(const Chain& a, const Chain& b)
{
    if (!(a == b))
        fail(errc::chain_mismatch, "elements live on different chains");
}

void check_balance(const Chain& chain, const Word& u, const Word& v)
{
    if (u.length() != v.length() && !chain.homogeneous())
        fail(errc::unbalanced, "unbalanced generator d[" + u.to_string() + "," + v.to_string() +
                                   "] needs a homogeneous chain");
}

Word strip_high_zeros(Word w)
{
    std::vector<std::uint32_t> digits = w.digits();
    while (!digits.empty() && digits.back() == 0)
        digits.pop_back();
    return Word(std::move(digits));
}

// ε_{u,v} applied to the basis sequence ⋯000π: Some(result word) or None.
std::optional<Word> apply_eps(const Chain& chain, const Word& u, const Word& v, const Word& pi)
{
    std::size_t have = pi.length();
    for (std::size_t i = 0; i < v.length(); ++i) {
        std::uint32_t pi_digit = i < have ? pi.digit(i) : 0;  // left padding
        if (pi_digit != v.digit(i))
            return std::nullopt;
    }
    std::vector<std::uint32_t> rest(pi.digits().begin() + static_cast<std::ptrdiff_t>(std::min(v.length(), have)),
                                    pi.digits().end());
    return strip_high_zeros(concat_above(Word(std::move(rest)), u, chain));
}

}  // namespace

DeepElement::DeepElement(Chain chain, Field field) : chain_(std::move(chain)), field_(field) {}

DeepElement DeepElement::zero(const Chain& chain, const Field& field)
{
    return DeepElement(chain, field);
}

DeepElement DeepElement::identity(const Chain& chain, const Field& field)
{
    return unit(chain, field, Word{}, Word{});
}

DeepElement DeepElement::unit(const Chain& chain, const Field& field, const Word& u, const Word& v)
{
    check_balance(chain, u, v);
    validate(u, chain);
    validate(v, chain);
    DeepElement x(chain, field);
    x.terms_[{u, v}] = Scalar::one(field);
    return x;
}

bool DeepElement::balanced() const
{
    return std::ranges::all_of(
        terms_, [](const auto& kv) { return kv.first.first.length() == kv.first.second.length(); });
}

void DeepElement::add_term(const Word& u, const Word& v, const Scalar& c)
{
    auto [it, inserted] = terms_.try_emplace({u, v}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

DeepElement DeepElement::scaled(const Scalar& c) const
{
    DeepElement out(chain_, field_);
    if (c.is_zero())
        return out;
    for (const auto& [uv, s] : terms_)
        out.terms_[uv] = s * c;
    return out;
}

DeepElement DeepElement::operator-() const
{
    return scaled(-Scalar::one(field_));
}

DeepElement operator+(const DeepElement& x, const DeepElement& y)
{
    check_compatible(x.chain_, y.chain_);
    DeepElement out = x;
    for (const auto& [uv, s] : y.terms_)
        out.add_term(uv.first, uv.second, s);
    return out;
}

DeepElement operator-(const DeepElement& x, const DeepElement& y)
{
    return x + (-y);
}

DeepElement operator*(const DeepElement& x, const DeepElement& y)
{
    check_compatible(x.chain_, y.chain_);
    DeepElement out(x.chain_, x.field_);
    for (const auto& [uv1, s1] : x.terms_)
        for (const auto& [uv2, s2] : y.terms_) {
            const auto& [u, u_prime] = uv1;
            const auto& [w, w_prime] = uv2;
            if (auto v = split_tail(u_prime, w))
                out.add_term(concat_above(*v, u, x.chain_), w_prime, s1 * s2);
            else if (auto v2 = split_tail(w, u_prime))
                out.add_term(u, concat_above(*v2, w_prime, x.chain_), s1 * s2);
        }
    return out;
}

DeepElement pow(const DeepElement& x, std::uint64_t e)
{
    DeepElement acc = DeepElement::identity(x.chain(), x.field());
    DeepElement base = x;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

TailVector::TailVector(Chain chain, Field field) : chain_(std::move(chain)), field_(field) {}

TailVector TailVector::basis(const Chain& chain, const Field& field, const Word& w)
{
    validate(w, chain);
    TailVector v(chain, field);
    v.terms_[strip_high_zeros(w)] = Scalar::one(field);
    return v;
}

void TailVector::add_term(Word w, const Scalar& c)
{
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

TailVector operator+(const TailVector& v, const TailVector& w)
{
    check_compatible(v.chain_, w.chain_);
    TailVector out = v;
    for (const auto& [word, s] : w.terms_)
        out.add_term(word, s);
    return out;
}

TailVector frankenstein_act(const DeepElement& x, const TailVector& pi)
{
    check_compatible(x.chain(), pi.chain());
    TailVector out(pi.chain(), pi.field());
    for (const auto& [uv, s] : x.terms())
        for (const auto& [word, c] : pi.terms())
            if (auto result = apply_eps(pi.chain(), uv.first, uv.second, word))
                out.add_term(*result, s * c);
    return out;
}

TailVector act_tail(const CoreElement& x, const TailVector& pi)
{
    check_compatible(x.chain(), pi.chain());
    TailVector out(pi.chain(), pi.field());
    std::size_t level = x.level();
    for (const auto& [rc, s] : x.entries()) {
        Word u = encode(rc.first, level, x.chain());
        Word v = encode(rc.second, level, x.chain());
        for (const auto& [word, c] : pi.terms())
            if (auto result = apply_eps(pi.chain(), u, v, word))
                out.add_term(*result, s * c);
    }
    return out;
}

LeavittElement to_leavitt(const DeepElement& x)
{
    LeavittElement out(x.chain(), x.field());
    for (const auto& [uv, s] : x.terms())
        out = out + LeavittElement::term(x.chain(), x.field(), uv.first, uv.second, s);
    return out;
}

CoreElement balanced_to_core(const DeepElement& x)
{
    CoreElement out = CoreElement::zero(x.chain(), x.field());
    for (const auto& [uv, s] : x.terms()) {
        if (uv.first.length() != uv.second.length())
            fail(errc::unbalanced, "d[" + uv.first.to_string() + "," + uv.second.to_string() +
                                       "] is not balanced");
        out = out + CoreElement::unit(x.chain(), x.field(), uv.first, uv.second).scaled(s);
    }
    return out;
}

}  // namespace snmat
