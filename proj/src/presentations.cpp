#include "snmat/presentations.hpp"

namespace snmat {

namespace {

CoreElement shift(const Chain& chain, const Field& field, std::size_t n)
{
    Block b;
    b.level = 1;
    for (std::uint64_t i = 0; i + 1 < n; ++i)
        b.entries[{i + 1, i}] = Scalar::one(field);
    return CoreElement::from_block(chain, field, std::move(b));
}

// The single-chain ordering underlying b_t: b_t maps e_{order[i]} to
// e_{order[i+1]} and kills the last. Interleaving the previous ordering
// with the new radix keeps b_t^{m_t} equal to the block-diagonal lift of
// b_{t-1}: stepping m_t times moves one step in each diagonal copy.
std::vector<std::uint64_t> interleave(const std::vector<std::uint64_t>& prev, std::uint64_t m)
{
    std::uint64_t n = prev.size();
    std::vector<std::uint64_t> order(n * m);
    for (std::uint64_t q = 0; q < n; ++q)
        for (std::uint64_t s = 0; s < m; ++s)
            order[q * m + s] = (m - 1 - s) * n + prev[q];
    return order;
}

CoreElement chain_nilpotent(const Chain& chain, const Field& field, std::size_t level,
                            const std::vector<std::uint64_t>& order)
{
    Block b;
    b.level = level;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        b.entries[{order[i + 1], order[i]}] = Scalar::one(field);
    return CoreElement::from_block(chain, field, std::move(b));
}

}  // namespace

AarTriple aar_witnesses(const Field& field, std::size_t n, std::size_t k)
{
    if (n < 2 || k < 1 || k > n - 1)
        fail(errc::domain, "need n >= 2 and 1 <= k <= n-1, got n=" + std::to_string(n) +
                               ", k=" + std::to_string(k));
    Chain chain({n});
    Block a, c;
    a.level = c.level = 1;
    for (std::uint64_t i = 0; i < n - k; ++i)
        a.entries[{i, k + i}] = Scalar::one(field);
    for (std::uint64_t i = 0; i < k; ++i)
        c.entries[{i, n - k + i}] = Scalar::one(field);
    AarTriple t{n, k, CoreElement::from_block(chain, field, std::move(a)), shift(chain, field, n),
                CoreElement::from_block(chain, field, std::move(c))};
    return t;
}

bool aar_check(const CoreElement& a, const CoreElement& b, const CoreElement& c, std::size_t n,
               std::size_t k)
{
    if (n < 2 || k < 1 || k > n - 1)
        fail(errc::domain, "need n >= 2 and 1 <= k <= n-1");
    CoreElement one = CoreElement::identity(a.chain(), a.field());
    return pow(b, n).is_zero() && a * pow(b, k) + pow(b, n - k) * c == one;
}

CoreElement matrix_root(const Field& field, std::size_t n, std::size_t m)
{
    if (n < 2 || m < 1)
        fail(errc::domain, "need n >= 2 and m >= 1");
    Chain chain = m == 1 ? Chain({n}) : Chain({n, m});
    if (m == 1)
        return shift(chain, field, n);

    std::vector<std::uint64_t> base(n);
    for (std::uint64_t q = 0; q < n; ++q)
        base[q] = q;
    CoreElement root = chain_nilpotent(chain, field, 2, interleave(base, m));

    CoreElement lifted_shift =
        CoreElement::from_block(chain, field, shift(chain, field, n).lift(2));
    bool ok = pow(root, m) == lifted_shift && !pow(root, n * m - 1).is_zero() &&
              pow(root, n * m).is_zero();
    if (!ok)
        fail(errc::domain, "matrix_root validation failed for n=" + std::to_string(n) +
                               ", m=" + std::to_string(m));
    return root;
}

RootChain chain_witnesses(const Chain& chain, const Field& field)
{
    std::size_t depth = chain.stored_depth();
    std::uint64_t m1 = chain.radix(1);

    AarTriple start = aar_witnesses(field, m1, 1);
    RootChain rc{chain, CoreElement::zero(chain, field), CoreElement::zero(chain, field), {}};
    // Rebase the level-1 witnesses from the chain [m1] onto the given chain.
    Block a_b, c_b;
    a_b.level = c_b.level = 1;
    a_b.entries = start.a.lift(1).entries;
    c_b.entries = start.c.lift(1).entries;
    rc.a = CoreElement::from_block(chain, field, std::move(a_b));
    rc.c = CoreElement::from_block(chain, field, std::move(c_b));

    std::vector<std::uint64_t> order(m1);
    for (std::uint64_t q = 0; q < m1; ++q)
        order[q] = q;
    rc.b.push_back(chain_nilpotent(chain, field, 1, order));
    for (std::size_t t = 2; t <= depth; ++t) {
        order = interleave(order, chain.radix(t));
        rc.b.push_back(chain_nilpotent(chain, field, t, order));
    }

    CoreElement one = CoreElement::identity(chain, field);
    if (!(rc.a * rc.b[0] + pow(rc.b[0], m1 - 1) * rc.c == one))
        fail(errc::domain, "presentation relation a b_1 + b_1^{m_1-1} c = 1 failed");
    for (std::size_t t = 2; t <= depth; ++t)
        if (!(pow(rc.b[t - 1], chain.radix(t)) == rc.b[t - 2]))
            fail(errc::domain, "root relation b_t^{m_t} = b_{t-1} failed at t=" + std::to_string(t));
    return rc;
}

}  // namespace snmat
