#include "snmat/json_io.hpp"

namespace snmat {

namespace {

json entries_to_json(const EntryMap& entries)
{
    json out = json::array();
    for (const auto& [rc, s] : entries)
        out.push_back({rc.first, rc.second, s.to_string()});
    return out;
}

EntryMap entries_from_json(const json& j, const Field& field)
{
    EntryMap out;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 3)
            fail(errc::parse, "entry must be [row, col, scalar]");
        out[{item[0].get<std::uint64_t>(), item[1].get<std::uint64_t>()}] =
            Scalar::parse(field, item[2].get<std::string>());
    }
    return out;
}

}  // namespace

json to_json(const CoreElement& x)
{
    return {{"chain", x.chain().to_string()},
            {"field", x.field().to_string()},
            {"level", x.level()},
            {"entries", entries_to_json(x.entries())}};
}

json to_json(const ModuleVector& v)
{
    json entries = json::array();
    for (const auto& [i, s] : v.entries())
        entries.push_back({i, s.to_string()});
    return {{"chain", v.chain().to_string()},
            {"field", v.field().to_string()},
            {"level", v.level()},
            {"entries", entries}};
}

json to_json(const LeavittElement& x)
{
    json components = json::array();
    for (const auto& [d, block] : x.components())
        components.push_back({{"degree", d},
                              {"row_level", block.row_level()},
                              {"col_level", block.col_level()},
                              {"entries", entries_to_json(block.entries())}});
    return {{"chain", x.chain().to_string()},
            {"field", x.field().to_string()},
            {"components", components}};
}

json to_json(const DeepElement& x)
{
    json terms = json::array();
    for (const auto& [uv, s] : x.terms())
        terms.push_back({uv.first.to_string(), uv.second.to_string(), s.to_string()});
    return {{"chain", x.chain().to_string()}, {"field", x.field().to_string()}, {"terms", terms}};
}

json to_json(const MixedElement& x)
{
    return {{"chain", x.chain().to_string()},
            {"field", x.field().to_string()},
            {"finite", entries_to_json(x.finite_part())},
            {"recurrent",
             {{"level", x.recurrent_part().level()},
              {"entries", entries_to_json(x.recurrent_part().entries())}}}};
}

json to_json(const TailVector& v)
{
    json terms = json::array();
    for (const auto& [w, s] : v.terms())
        terms.push_back({w.to_string(), s.to_string()});
    return {{"chain", v.chain().to_string()}, {"field", v.field().to_string()}, {"terms", terms}};
}

json to_json(const DenseMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const TensorVector& x)
{
    return {{"field", x.field().to_string()},
            {"p", x.p()},
            {"l", x.ell()},
            {"level", x.level()},
            {"array", to_json(x.array())}};
}

json to_json(const AarTriple& t)
{
    return {{"n", t.n}, {"k", t.k}, {"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)}};
}

json to_json(const RootChain& rc)
{
    json roots = json::array();
    for (const auto& b : rc.b)
        roots.push_back(to_json(b));
    return {{"chain", rc.chain.to_string()}, {"a", to_json(rc.a)}, {"c", to_json(rc.c)}, {"b", roots}};
}

CoreElement core_from_json(const json& j)
{
    Field field = Field::parse(j.at("field").get<std::string>());
    Chain chain = Chain::parse(j.at("chain").get<std::string>());
    Block block;
    block.level = j.at("level").get<std::size_t>();
    block.entries = entries_from_json(j.at("entries"), field);
    return CoreElement::from_block(chain, field, std::move(block));
}

TensorVector tensor_from_json(const json& j)
{
    Field field = Field::parse(j.at("field").get<std::string>());
    std::size_t p = j.at("p").get<std::size_t>();
    std::size_t ell = j.at("l").get<std::size_t>();
    std::size_t level = j.contains("level") ? j.at("level").get<std::size_t>() : 0;
    const json& array = j.at("array");
    if (!array.is_array() || array.empty())
        fail(errc::parse, "tensor array must be a nonempty array of rows");
    DenseMatrix m(field, array.size(), ell);
    for (std::size_t i = 0; i < array.size(); ++i) {
        if (!array[i].is_array() || array[i].size() != ell)
            fail(errc::parse, "tensor row " + std::to_string(i) + " must have " +
                                  std::to_string(ell) + " columns");
        for (std::size_t k = 0; k < ell; ++k)
            m.at(i, k) = Scalar::parse(field, array[i][k].get<std::string>());
    }
    return TensorVector(field, p, ell, level, std::move(m));
}

}  // namespace snmat
