// Command-line frontend: evaluates expressions in the supported algebras and
// exposes the witness constructions, gradings and module diagnostics as
// subcommands. Output is JSON (schema 1); --pretty switches element dumps to
// an aligned text rendering.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "snmat/gradings.hpp"
#include "snmat/json_io.hpp"

using namespace snmat;

namespace {

struct CommonOpts {
    std::string field_text = "q";
    std::string chain_text;
    std::uint64_t m = 0;
    std::string algebra_text = "core";
    bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_algebra = true)
{
    cmd->add_option("--field", opts.field_text, "scalar field: q or fp:<p>");
    cmd->add_option("--chain", opts.chain_text, "divisor chain, e.g. 2,3,4 or 2,3+repeat");
    cmd->add_option("--m", opts.m, "shorthand for the homogeneous chain m,m,m,...");
    if (with_algebra)
        cmd->add_option("--algebra", opts.algebra_text, "core | leavitt | deep | mixed");
    cmd->add_flag("--pretty", opts.pretty, "aligned text output instead of JSON");
}

SessionConfig make_config(const CommonOpts& opts)
{
    SessionConfig config{Field::parse(opts.field_text), algebra_kind_parse(opts.algebra_text),
                         Chain({2})};
    if (opts.m != 0)
        config.chain = Chain::homogeneous(opts.m);
    else if (!opts.chain_text.empty())
        config.chain = Chain::parse(opts.chain_text);
    else
        fail(errc::domain, "need --chain or --m");
    return config;
}

std::string read_input(const std::string& arg)
{
    if (arg != "-")
        return arg;
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    std::string text = buffer.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
    return text;
}

void emit(const json& payload)
{
    json out = payload;
    out["schema"] = 1;
    std::cout << out.dump() << '\n';
}

std::string pretty_grid(const std::vector<std::vector<std::string>>& cells)
{
    std::vector<std::size_t> widths;
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (widths.size() <= j)
                widths.resize(j + 1, 0);
            widths[j] = std::max(widths[j], row[j].size());
        }
    std::ostringstream out;
    for (const auto& row : cells) {
        out << "[ ";
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << std::string(widths[j] - row[j].size(), ' ') << row[j];
            out << (j + 1 < row.size() ? " " : "");
        }
        out << " ]\n";
    }
    return out.str();
}

std::string pretty_matrix(const DenseMatrix& m)
{
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            cells[i][j] = m.at(i, j).is_zero() ? "." : m.at(i, j).to_string();
    return pretty_grid(cells);
}

std::string pretty_block(const Chain& chain, std::size_t row_level, std::size_t col_level,
                         const EntryMap& entries, const Field& field)
{
    std::uint64_t rows = chain.level_size(row_level);
    std::uint64_t cols = chain.level_size(col_level);
    DenseMatrix m(field, rows, cols);
    for (const auto& [rc, s] : entries)
        m.at(rc.first, rc.second) = s;
    return pretty_matrix(m);
}

void print_value(const Value& value, bool pretty)
{
    if (!pretty) {
        std::visit([](const auto& x) { emit({{"element", to_json(x)}}); }, value);
        return;
    }
    if (const auto* x = std::get_if<CoreElement>(&value)) {
        std::cout << "level " << x->level() << " block of " << x->chain().to_string() << " over "
                  << x->field().to_string() << "\n"
                  << pretty_block(x->chain(), x->level(), x->level(), x->entries(), x->field());
    } else if (const auto* x = std::get_if<LeavittElement>(&value)) {
        if (x->is_zero())
            std::cout << "0\n";
        for (const auto& [d, block] : x->components()) {
            std::cout << "degree " << d << ": " << x->chain().level_size(block.row_level()) << "x"
                      << x->chain().level_size(block.col_level()) << " block\n"
                      << pretty_block(x->chain(), block.row_level(), block.col_level(),
                                      block.entries(), x->field());
        }
    } else if (const auto* x = std::get_if<DeepElement>(&value)) {
        if (x->is_zero())
            std::cout << "0\n";
        bool first = true;
        for (const auto& [uv, s] : x->terms()) {
            std::cout << (first ? "" : " + ");
            if (!s.is_one())
                std::cout << s.to_string() << "*";
            std::cout << "d[" << uv.first.to_string() << "," << uv.second.to_string() << "]";
            first = false;
        }
        if (!x->is_zero())
            std::cout << "\n";
    } else if (const auto* x = std::get_if<MixedElement>(&value)) {
        std::cout << "finite part (" << x->finite_part().size() << " entries):\n";
        std::uint64_t bound = 0;
        for (const auto& [rc, s] : x->finite_part())
            bound = std::max({bound, rc.first + 1, rc.second + 1});
        bound = std::max<std::uint64_t>(bound, 1);
        DenseMatrix fin(x->field(), bound, bound);
        for (const auto& [rc, s] : x->finite_part())
            fin.at(rc.first, rc.second) = s;
        std::cout << pretty_matrix(fin) << "recurrent part:\n"
                  << pretty_block(x->chain(), x->recurrent_part().level(), x->recurrent_part().level(),
                                  x->recurrent_part().entries(), x->field());
    }
}

// Splits on commas that are not inside parentheses.
std::vector<std::string> split_top_level(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == sep && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

GroupElement parse_group_element(const AbelianGroup& group, const std::string& text)
{
    std::vector<long long> coords;
    std::string inner = text;
    if (!inner.empty() && inner.front() == '(') {
        if (inner.back() != ')')
            fail(errc::parse, "unbalanced parentheses in group element \"" + text + "\"");
        inner = inner.substr(1, inner.size() - 2);
    }
    for (const std::string& part : split_top_level(inner, ',')) {
        try {
            std::size_t used = 0;
            coords.push_back(std::stoll(part, &used));
            if (used != part.size() || part.empty())
                fail(errc::parse, "");
        } catch (const std::exception&) {
            fail(errc::parse, "bad group element \"" + text + "\"");
        }
    }
    return group.element(std::move(coords));
}

// "0:1,2;1:0,1" — per-level lists of group elements, levels in order.
std::vector<std::vector<GroupElement>> parse_h(const AbelianGroup& group, const std::string& text)
{
    std::vector<std::vector<GroupElement>> h;
    for (const std::string& level_part : split_top_level(text, ';')) {
        auto colon = level_part.find(':');
        if (colon == std::string::npos)
            fail(errc::parse, "grading level needs the form t:...; got \"" + level_part + "\"");
        std::size_t level = std::stoull(level_part.substr(0, colon));
        if (level != h.size())
            fail(errc::parse, "grading levels must appear in order 0,1,...");
        std::vector<GroupElement> row;
        for (const std::string& elem : split_top_level(level_part.substr(colon + 1), ','))
            row.push_back(parse_group_element(group, elem));
        h.push_back(std::move(row));
    }
    return h;
}

std::vector<std::vector<Scalar>> parse_alphas(const Field& field, const std::string& text)
{
    std::vector<std::vector<Scalar>> out;
    for (const std::string& level_part : split_top_level(text, ';')) {
        std::vector<Scalar> alpha;
        for (const std::string& item : split_top_level(level_part, ','))
            alpha.push_back(Scalar::parse(field, item));
        out.push_back(std::move(alpha));
    }
    return out;
}

json json_from_text_or_file(const std::string& arg)
{
    std::string text = read_input(arg);
    if (!text.empty() && text[0] != '{' && text[0] != '[') {
        std::ifstream in(text);
        if (!in)
            fail(errc::domain, "cannot open file \"" + text + "\"");
        return json::parse(in);
    }
    return json::parse(text);
}

int run(int argc, char** argv)
{
    CLI::App app{"exact computer algebra for supernatural matrices, Leavitt algebras and deep matrices"};
    app.require_subcommand(1);

    // eval
    CommonOpts eval_opts;
    std::string eval_expr;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression to canonical form");
    add_common(eval_cmd, eval_opts);
    eval_cmd->add_option("expr", eval_expr, "expression, or - for stdin")->required();

    // canon
    bool canon_pretty = false;
    std::string canon_input;
    auto* canon_cmd = app.add_subcommand("canon", "canonicalize a core element dump (JSON)");
    canon_cmd->add_flag("--pretty", canon_pretty, "aligned text output");
    canon_cmd->add_option("input", canon_input, "JSON text, file name, or - for stdin")->required();

    // realize
    CommonOpts realize_opts;
    std::string realize_expr;
    std::size_t realize_blocks = 1;
    auto* realize_cmd = app.add_subcommand("realize", "dense window of a recurrent core element");
    add_common(realize_cmd, realize_opts, false);
    realize_cmd->add_option("--blocks", realize_blocks, "number of diagonal copies")->required();
    realize_cmd->add_option("expr", realize_expr, "core expression")->required();

    // act
    CommonOpts act_opts;
    std::string act_expr, act_word;
    auto* act_cmd = app.add_subcommand("act", "apply an element to a basis word");
    add_common(act_cmd, act_opts);
    act_cmd->add_option("--word", act_word, "basis word (core: module vector; deep: tail sequence)")
        ->required();
    act_cmd->add_option("expr", act_expr, "expression")->required();

    // aar
    CommonOpts aar_opts;
    std::size_t aar_n = 0, aar_k = 0;
    auto* aar_cmd = app.add_subcommand("aar", "matrix-recognition witnesses a, b, c");
    aar_cmd->add_option("--field", aar_opts.field_text, "scalar field");
    aar_cmd->add_flag("--pretty", aar_opts.pretty, "aligned text output");
    aar_cmd->add_option("--n", aar_n, "matrix size")->required();
    aar_cmd->add_option("--k", aar_k, "relation parameter, 1 <= k <= n-1")->required();

    // aar-root
    CommonOpts root_opts;
    std::size_t root_n = 0, root_m = 0;
    auto* root_cmd = app.add_subcommand("aar-root", "m-th root of the lifted n-shift");
    root_cmd->add_option("--field", root_opts.field_text, "scalar field");
    root_cmd->add_flag("--pretty", root_opts.pretty, "aligned text output");
    root_cmd->add_option("--n", root_n, "shift size")->required();
    root_cmd->add_option("--m", root_m, "root order")->required();

    // chain-witness
    CommonOpts witness_opts;
    auto* witness_cmd = app.add_subcommand("chain-witness", "presentation witnesses along a chain");
    witness_cmd->add_option("--field", witness_opts.field_text, "scalar field");
    witness_cmd->add_option("--chain", witness_opts.chain_text, "divisor chain")->required();
    witness_cmd->add_flag("--pretty", witness_opts.pretty, "aligned text output");

    // grade
    CommonOpts grade_opts;
    std::string grade_group = "Z", grade_h, grade_expr, grade_assign;
    auto* grade_cmd = app.add_subcommand("grade", "degree or homogeneous decomposition");
    add_common(grade_cmd, grade_opts);
    grade_cmd->add_option("--group", grade_group, "abelian group, e.g. Z, Z^2, Z/3, Z^2xZ/2");
    grade_cmd->add_option("--h", grade_h, "elementary grading data t:g,g,...;t:...");
    grade_cmd->add_option("--letters", grade_assign, "letter degrees g_0,...,g_{m-1} (leavitt)");
    grade_cmd->add_option("expr", grade_expr, "expression")->required();

    // rank
    std::string rank_input;
    auto* rank_cmd = app.add_subcommand("rank", "tensor rank of a W (x) F^l vector");
    rank_cmd->add_option("input", rank_input, "tensor JSON, file name, or - for stdin")->required();

    // ann
    std::string ann_input;
    auto* ann_cmd = app.add_subcommand("ann", "annihilator codimension of a tensor vector");
    ann_cmd->add_option("input", ann_input, "tensor JSON, file name, or - for stdin")->required();

    // iso
    CommonOpts iso_opts;
    std::string iso_spec1, iso_spec2;
    std::size_t iso_from = 1;
    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test for locally simple module specs");
    iso_cmd->add_option("--field", iso_opts.field_text, "scalar field");
    iso_cmd->add_option("--chain", iso_opts.chain_text, "divisor chain")->required();
    iso_cmd->add_option("--spec1", iso_spec1, "alphas per level: a,b;c,d;...")->required();
    iso_cmd->add_option("--spec2", iso_spec2, "alphas per level")->required();
    iso_cmd->add_option("--from", iso_from, "first level to compare (default 1)");

    // band-lift
    std::string band_input;
    auto* band_cmd = app.add_subcommand("band-lift", "apply id (x) phi to a tensor vector");
    band_cmd->add_option("input", band_input, "tensor JSON, file name, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
    }

    if (eval_cmd->parsed()) {
        SessionConfig config = make_config(eval_opts);
        Value value = evaluate(*parse_expr(read_input(eval_expr)), config);
        print_value(value, eval_opts.pretty);
    } else if (canon_cmd->parsed()) {
        CoreElement x = core_from_json(json_from_text_or_file(canon_input));
        if (canon_pretty)
            print_value(Value{x}, true);
        else
            emit({{"element", to_json(x)}});
    } else if (realize_cmd->parsed()) {
        realize_opts.algebra_text = "core";
        SessionConfig config = make_config(realize_opts);
        Value value = evaluate(*parse_expr(read_input(realize_expr)), config);
        DenseMatrix m = realize(std::get<CoreElement>(value), realize_blocks);
        if (realize_opts.pretty)
            std::cout << pretty_matrix(m);
        else
            emit({{"matrix", to_json(m)}});
    } else if (act_cmd->parsed()) {
        SessionConfig config = make_config(act_opts);
        Word w = Word::parse(act_word);
        Value value = evaluate(*parse_expr(read_input(act_expr)), config);
        if (config.algebra == AlgebraKind::core) {
            ModuleVector result =
                act(std::get<CoreElement>(value), ModuleVector::basis(config.chain, config.field, w));
            emit({{"vector", to_json(result)}});
        } else if (config.algebra == AlgebraKind::deep) {
            TailVector result = frankenstein_act(std::get<DeepElement>(value),
                                                 TailVector::basis(config.chain, config.field, w));
            emit({{"vector", to_json(result)}});
        } else {
            fail(errc::kind_mismatch, "act supports the core and deep algebras");
        }
    } else if (aar_cmd->parsed()) {
        AarTriple t = aar_witnesses(Field::parse(aar_opts.field_text), aar_n, aar_k);
        bool check = aar_check(t.a, t.b, t.c, t.n, t.k);
        if (aar_opts.pretty) {
            std::cout << "a:\n" << pretty_block(t.a.chain(), 1, 1, t.a.lift(1).entries, t.a.field())
                      << "b:\n" << pretty_block(t.b.chain(), 1, 1, t.b.lift(1).entries, t.b.field())
                      << "c:\n" << pretty_block(t.c.chain(), 1, 1, t.c.lift(1).entries, t.c.field())
                      << "check: " << (check ? "ok" : "FAILED") << "\n";
        } else {
            json payload = to_json(t);
            payload["check"] = check;
            emit(payload);
        }
    } else if (root_cmd->parsed()) {
        CoreElement b = matrix_root(Field::parse(root_opts.field_text), root_n, root_m);
        if (root_opts.pretty)
            std::cout << pretty_block(b.chain(), b.level(), b.level(), b.entries(), b.field());
        else
            emit({{"n", root_n}, {"m", root_m}, {"b_prime", to_json(b)}});
    } else if (witness_cmd->parsed()) {
        RootChain rc =
            chain_witnesses(Chain::parse(witness_opts.chain_text), Field::parse(witness_opts.field_text));
        if (witness_opts.pretty) {
            std::cout << "a:\n" << pretty_block(rc.chain, 1, 1, rc.a.lift(1).entries, rc.a.field());
            std::cout << "c:\n" << pretty_block(rc.chain, 1, 1, rc.c.lift(1).entries, rc.c.field());
            for (std::size_t t = 0; t < rc.b.size(); ++t)
                std::cout << "b_" << t + 1 << ":\n"
                          << pretty_block(rc.chain, t + 1, t + 1, rc.b[t].lift(t + 1).entries,
                                          rc.b[t].field());
        } else {
            emit(to_json(rc));
        }
    } else if (grade_cmd->parsed()) {
        SessionConfig config = make_config(grade_opts);
        AbelianGroup group = AbelianGroup::parse(grade_group);
        Value value = evaluate(*parse_expr(read_input(grade_expr)), config);
        if (config.algebra == AlgebraKind::core) {
            if (grade_h.empty())
                fail(errc::domain, "grade over the core algebra needs --h");
            ElementaryGrading grading(config.chain, group, parse_h(group, grade_h));
            const auto& x = std::get<CoreElement>(value);
            json components = json::array();
            for (const auto& [g, part] : decompose(x, grading))
                components.push_back({{"degree", group.to_string(g)}, {"element", to_json(part)}});
            auto degree = homogeneous_degree(x, grading);
            emit({{"homogeneous", degree.has_value()},
                  {"degree", degree ? json(group.to_string(*degree)) : json{}},
                  {"components", components}});
        } else if (config.algebra == AlgebraKind::leavitt) {
            if (grade_assign.empty())
                fail(errc::domain, "grade over the leavitt algebra needs --letters");
            std::vector<GroupElement> assignment;
            for (const std::string& part : split_top_level(grade_assign, ','))
                assignment.push_back(parse_group_element(group, part));
            if (assignment.size() != config.chain.radix(1))
                fail(errc::domain, "need one letter degree per generator");
            const auto& x = std::get<LeavittElement>(value);
            auto degree = leavitt_homogeneous_degree(x, group, assignment);
            emit({{"homogeneous", degree.has_value()},
                  {"degree", degree ? group.to_string(*degree) : json{}}});
        } else {
            fail(errc::kind_mismatch, "grade supports the core and leavitt algebras");
        }
    } else if (rank_cmd->parsed()) {
        emit({{"rank", tensor_rank(tensor_from_json(json_from_text_or_file(rank_input)))}});
    } else if (ann_cmd->parsed()) {
        auto [raw, normalized] = ann_codim(tensor_from_json(json_from_text_or_file(ann_input)));
        emit({{"raw", raw}, {"normalized", normalized}});
    } else if (iso_cmd->parsed()) {
        Field field = Field::parse(iso_opts.field_text);
        Chain chain = Chain::parse(iso_opts.chain_text);
        LocallySimpleSpec s1(chain, field, parse_alphas(field, iso_spec1));
        LocallySimpleSpec s2(chain, field, parse_alphas(field, iso_spec2));
        emit({{"isomorphic", ls_isomorphic(s1, s2, iso_from)}});
    } else if (band_cmd->parsed()) {
        TensorVector lifted = lift_step(tensor_from_json(json_from_text_or_file(band_input)));
        emit({{"tensor", to_json(lifted)}});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const error& e) {
        json out{{"schema", 1}, {"error", errc_name(e.kind())}, {"message", e.what()}};
        std::cout << out.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        json out{{"schema", 1}, {"error", "internal"}, {"message", e.what()}};
        std::cout << out.dump() << '\n';
        return 1;
    }
}
