#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snmat/errors.hpp"
#include "snmat/supernatural.hpp"

namespace snmat {

enum class RepeatPolicy { none, repeat_last, repeat_pattern };

// Divisor chain 1 = n_0 | n_1 | n_2 | ... presented by its radices
// m_t = n_t / n_{t-1} >= 2. A repeat policy extends the chain past the
// stored prefix; without one, deeper levels are errors.
class Chain {
public:
    explicit Chain(std::vector<std::uint64_t> radices, RepeatPolicy policy = RepeatPolicy::none);

    static Chain homogeneous(std::uint64_t m);               // radix m at every level
    static Chain parse(const std::string& text);             // "2,3,4", "2,3+repeat", "2,3+repeat-pattern"
    std::string to_string() const;

    std::size_t stored_depth() const { return radices_.size(); }
    RepeatPolicy policy() const { return policy_; }
    bool unbounded() const { return policy_ != RepeatPolicy::none; }
    bool has_level(std::size_t t) const { return t <= radices_.size() || unbounded(); }
    std::uint64_t radix(std::size_t t) const;       // m_t, t >= 1
    std::uint64_t level_size(std::size_t t) const;  // n_t
    bool homogeneous() const;                       // one radix at every reachable level
    Supernatural degree() const;                    // lcm of the n_t

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<std::uint64_t> radices_;
    RepeatPolicy policy_ = RepeatPolicy::none;
};

// Positional mixed-radix word: digit i sits at position i and must satisfy
// 0 <= k_i < m_{i+1} on whatever chain it is used with. Leading (high)
// zeros are significant; the length is part of the value.
class Word {
public:
    Word() = default;  // empty word
    explicit Word(std::vector<std::uint32_t> digits) : digits_(std::move(digits)) {}

    static Word parse(const std::string& text);  // "1.2.1" most-significant-first, "_" empty
    std::string to_string() const;

    bool empty() const { return digits_.empty(); }
    std::size_t length() const { return digits_.size(); }
    std::uint32_t digit(std::size_t i) const { return digits_[i]; }
    const std::vector<std::uint32_t>& digits() const { return digits_; }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<std::uint32_t> digits_;  // k_0 (lowest position) first
};

void validate(const Word& w, const Chain& chain);

// k = sum k_i * n_i.
std::uint64_t decode(const Word& w, const Chain& chain);
Word encode(std::uint64_t k, std::size_t length, const Chain& chain);

// Some(v) iff w = v·u_tail, i.e. u_tail occupies the low positions of w and
// v the remaining high ones. v's digits are returned re-based at position 0.
std::optional<Word> split_tail(const Word& u_tail, const Word& w);

// The word vu: u at positions 0..|u|-1, v above it. Checks v's digits
// against the radices of their new positions.
Word concat_above(const Word& v, const Word& u, const Chain& chain);

}  // namespace snmat
