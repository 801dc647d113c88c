#pragma once

#include <vector>

#include "snmat/core.hpp"

namespace snmat {

// Witnesses a, b, c with b^n = 0 and a b^k + b^{n-k} c = 1, identifying an
// n-by-n matrix ring. Elements live at level 1 of the chain [n].
struct AarTriple {
    std::size_t n = 0;
    std::size_t k = 0;
    CoreElement a, b, c;
};

AarTriple aar_witnesses(const Field& field, std::size_t n, std::size_t k);
bool aar_check(const CoreElement& a, const CoreElement& b, const CoreElement& c, std::size_t n,
               std::size_t k);

// An m-th root of the lifted n-shift: the element b' at level 2 of the chain
// [n, m] with b'^m equal to the lift of the shift b̃ and nilpotency index nm.
// Validated by exact exponentiation before being returned.
CoreElement matrix_root(const Field& field, std::size_t n, std::size_t m);

// Presentation witnesses along a whole chain: b_t^{m_t} = b_{t-1} with
// b_0 = 0, and a b_1 + b_1^{m_1 - 1} c = 1.
struct RootChain {
    Chain chain;
    CoreElement a, c;
    std::vector<CoreElement> b;  // b[t-1] is b_t at level t
};

RootChain chain_witnesses(const Chain& chain, const Field& field);

}  // namespace snmat
