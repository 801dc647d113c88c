#pragma once

// Shared generators for the property tests. Everything is seeded explicitly
// so failures reproduce.

#include <random>

#include "snmat/core.hpp"
#include "snmat/deep.hpp"
#include "snmat/leavitt.hpp"

namespace snmat::testing {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng, bool allow_zero = true)
{
    std::uniform_int_distribution<long long> num(allow_zero ? -6 : 1, 6);
    long long n = num(rng);
    if (!allow_zero && n == 0)
        n = 1;
    if (f.is_rationals()) {
        std::uniform_int_distribution<long long> den(1, 6);
        return Scalar::of(f, n) / Scalar::of(f, den(rng));
    }
    return Scalar::of(f, n);
}

inline Word random_word(const Chain& chain, std::size_t length, std::mt19937_64& rng)
{
    std::vector<std::uint32_t> digits(length);
    for (std::size_t i = 0; i < length; ++i)
        digits[i] = static_cast<std::uint32_t>(
            std::uniform_int_distribution<std::uint64_t>(0, chain.radix(i + 1) - 1)(rng));
    return Word(std::move(digits));
}

inline CoreElement random_core(const Chain& chain, const Field& field, std::size_t max_level,
                               std::mt19937_64& rng)
{
    std::size_t level = std::uniform_int_distribution<std::size_t>(0, max_level)(rng);
    std::uint64_t n = chain.level_size(level);
    Block b;
    b.level = level;
    std::uniform_int_distribution<std::uint64_t> coord(0, n - 1);
    std::uniform_int_distribution<int> count(0, static_cast<int>(std::min<std::uint64_t>(n * 2, 8)));
    int k = count(rng);
    for (int i = 0; i < k; ++i)
        b.entries[{coord(rng), coord(rng)}] = random_scalar(field, rng);
    return CoreElement::from_block(chain, field, std::move(b));
}

inline ModuleVector random_vector(const Chain& chain, const Field& field, std::size_t max_level,
                                  std::mt19937_64& rng, bool nonzero = false)
{
    for (;;) {
        std::size_t level = std::uniform_int_distribution<std::size_t>(0, max_level)(rng);
        std::uint64_t n = chain.level_size(level);
        std::map<std::uint64_t, Scalar> entries;
        std::uniform_int_distribution<std::uint64_t> coord(0, n - 1);
        int k = std::uniform_int_distribution<int>(nonzero ? 1 : 0, 4)(rng);
        for (int i = 0; i < k; ++i)
            entries[coord(rng)] = random_scalar(field, rng, !nonzero);
        ModuleVector v = ModuleVector::from_entries(chain, field, level, std::move(entries));
        if (!nonzero || !v.is_zero())
            return v;
    }
}

inline DeepElement random_deep(const Chain& chain, const Field& field, std::size_t max_len,
                               std::mt19937_64& rng, bool balanced_only = false)
{
    DeepElement x = DeepElement::zero(chain, field);
    int terms = std::uniform_int_distribution<int>(1, 4)(rng);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    for (int i = 0; i < terms; ++i) {
        std::size_t lu = len(rng);
        std::size_t lv = balanced_only || !chain.homogeneous() ? lu : len(rng);
        DeepElement term = DeepElement::unit(chain, field, random_word(chain, lu, rng),
                                             random_word(chain, lv, rng));
        x = x + term.scaled(random_scalar(field, rng, false));
    }
    return x;
}

inline LeavittElement random_leavitt(const Chain& chain, const Field& field, std::size_t max_len,
                                     std::mt19937_64& rng, bool balanced_only = false)
{
    LeavittElement x = LeavittElement::zero(chain, field);
    int terms = std::uniform_int_distribution<int>(1, 4)(rng);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    for (int i = 0; i < terms; ++i) {
        std::size_t lu = len(rng);
        std::size_t lv = balanced_only ? lu : len(rng);
        x = x + LeavittElement::term(chain, field, random_word(chain, lu, rng),
                                     random_word(chain, lv, rng), random_scalar(field, rng, false));
    }
    return x;
}

}  // namespace snmat::testing
