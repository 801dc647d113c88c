#include "snmat/expr.hpp"

#include <cctype>
#include <sstream>

namespace snmat {

namespace {

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what)
{
    // Positions are reported 1-based.
    fail(errc::parse, "syntax error at column " + std::to_string(pos + 1) + ": " + what);
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run()
    {
        ExprPtr e = expression();
        skip_space();
        if (pos_ != text_.size())
            syntax_error(pos_, "unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c))
            syntax_error(pos_, std::string("expected '") + c + "' " + what);
    }

    std::uint64_t integer()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            syntax_error(start, "expected a number");
        return std::stoull(text_.substr(start, pos_ - start));
    }

    Word word()
    {
        skip_space();
        if (accept('_'))
            return Word{};
        std::size_t start = pos_;
        std::vector<std::uint32_t> msd_first;
        msd_first.push_back(static_cast<std::uint32_t>(integer()));
        while (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            msd_first.push_back(static_cast<std::uint32_t>(integer()));
        }
        (void)start;
        return Word(std::vector<std::uint32_t>(msd_first.rbegin(), msd_first.rend()));
    }

    ExprPtr bracket_pair(Expr::Kind kind)
    {
        ++pos_;  // generator letter
        expect('[', "after generator");
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        if (kind == Expr::Kind::finite_unit) {
            e->index = integer();
            expect(',', "between indices");
            e->index2 = integer();
        } else {
            e->u = word();
            expect(',', "between words");
            e->v = word();
        }
        expect(']', "to close generator");
        return e;
    }

    ExprPtr atom()
    {
        skip_space();
        if (pos_ >= text_.size())
            syntax_error(pos_, "expected an operand");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expression();
            expect(')', "to close parenthesis");
            return e;
        }
        if (c == 'e')
            return bracket_pair(Expr::Kind::unit);
        if (c == 'd')
            return bracket_pair(Expr::Kind::deep_unit);
        if (c == 'f')
            return bracket_pair(Expr::Kind::finite_unit);
        if (c == 'x' || c == 'y') {
            ++pos_;
            auto e = std::make_shared<Expr>();
            e->kind = c == 'x' ? Expr::Kind::gen_x : Expr::Kind::gen_y;
            e->index = integer();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::scalar;
            std::uint64_t num = integer();
            std::ostringstream text;
            text << num;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                text << '/' << integer();
            }
            e->scalar_text = text.str();
            return e;
        }
        syntax_error(pos_, std::string("unexpected character '") + c + "'");
    }

    ExprPtr factor()
    {
        if (accept('-')) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::neg;
            e->lhs = factor();
            return e;
        }
        ExprPtr base = atom();
        while (accept('^')) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::pow;
            e->lhs = base;
            e->exponent = integer();
            base = e;
        }
        return base;
    }

    ExprPtr term()
    {
        ExprPtr e = factor();
        while (accept('*')) {
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::mul;
            node->lhs = e;
            node->rhs = factor();
            e = node;
        }
        return e;
    }

    ExprPtr expression()
    {
        ExprPtr e = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            auto node = std::make_shared<Expr>();
            node->kind = c == '+' ? Expr::Kind::add : Expr::Kind::sub;
            node->lhs = e;
            node->rhs = term();
            e = node;
        }
        return e;
    }
};

int precedence(Expr::Kind kind)
{
    switch (kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul: return 2;
    case Expr::Kind::neg: return 3;
    case Expr::Kind::pow: return 4;
    default: return 5;
    }
}

void print_into(const Expr& e, std::ostream& out, int parent_prec)
{
    int prec = precedence(e.kind);
    bool parens = prec < parent_prec;
    if (parens)
        out << '(';
    switch (e.kind) {
    case Expr::Kind::scalar: out << e.scalar_text; break;
    case Expr::Kind::unit: out << "e[" << e.u.to_string() << ',' << e.v.to_string() << ']'; break;
    case Expr::Kind::deep_unit: out << "d[" << e.u.to_string() << ',' << e.v.to_string() << ']'; break;
    case Expr::Kind::finite_unit: out << "f[" << e.index << ',' << e.index2 << ']'; break;
    case Expr::Kind::gen_x: out << 'x' << e.index; break;
    case Expr::Kind::gen_y: out << 'y' << e.index; break;
    case Expr::Kind::add:
        print_into(*e.lhs, out, 1);
        out << " + ";
        print_into(*e.rhs, out, 2);
        break;
    case Expr::Kind::sub:
        print_into(*e.lhs, out, 1);
        out << " - ";
        print_into(*e.rhs, out, 2);
        break;
    case Expr::Kind::mul:
        print_into(*e.lhs, out, 2);
        out << '*';
        print_into(*e.rhs, out, 3);
        break;
    case Expr::Kind::neg:
        out << '-';
        print_into(*e.lhs, out, 3);
        break;
    case Expr::Kind::pow:
        print_into(*e.lhs, out, 5);
        out << '^' << e.exponent;
        break;
    }
    if (parens)
        out << ')';
}

}  // namespace

ExprPtr parse_expr(const std::string& text)
{
    return Parser(text).run();
}

std::string print_expr(const Expr& e)
{
    std::ostringstream out;
    print_into(e, out, 0);
    return out.str();
}

AlgebraKind algebra_kind_parse(const std::string& text)
{
    if (text == "core")
        return AlgebraKind::core;
    if (text == "leavitt")
        return AlgebraKind::leavitt;
    if (text == "deep")
        return AlgebraKind::deep;
    if (text == "mixed")
        return AlgebraKind::mixed;
    fail(errc::parse, "unknown algebra \"" + text + "\"");
}

const char* algebra_kind_name(AlgebraKind kind)
{
    switch (kind) {
    case AlgebraKind::core: return "core";
    case AlgebraKind::leavitt: return "leavitt";
    case AlgebraKind::deep: return "deep";
    case AlgebraKind::mixed: return "mixed";
    }
    return "unknown";
}

namespace {

Value value_identity(const SessionConfig& config)
{
    switch (config.algebra) {
    case AlgebraKind::core: return CoreElement::identity(config.chain, config.field);
    case AlgebraKind::leavitt: return LeavittElement::identity(config.chain, config.field);
    case AlgebraKind::deep: return DeepElement::identity(config.chain, config.field);
    case AlgebraKind::mixed: return MixedElement::identity(config.chain, config.field);
    }
    fail(errc::domain, "unreachable");
}

Value value_scaled(const Value& a, const Scalar& c)
{
    return std::visit(
        [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MixedElement>) {
                EntryMap finite;
                for (const auto& [rc, s] : x.finite_part())
                    finite[rc] = s * c;
                return MixedElement(std::move(finite), x.recurrent_part().scaled(c));
            } else {
                return x.scaled(c);
            }
        },
        a);
}

Value value_add(const Value& a, const Value& b)
{
    return std::visit(
        [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            return x + std::get<T>(b);
        },
        a);
}

Value value_mul(const Value& a, const Value& b)
{
    return std::visit(
        [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            return x * std::get<T>(b);
        },
        a);
}

Value eval_node(const Expr& e, const SessionConfig& config)
{
    switch (e.kind) {
    case Expr::Kind::scalar:
        return value_scaled(value_identity(config), Scalar::parse(config.field, e.scalar_text));
    case Expr::Kind::unit:
        if (config.algebra == AlgebraKind::core)
            return CoreElement::unit(config.chain, config.field, e.u, e.v);
        if (config.algebra == AlgebraKind::mixed)
            return MixedElement({}, CoreElement::unit(config.chain, config.field, e.u, e.v));
        fail(errc::kind_mismatch, "e[...] generators need the core or mixed algebra");
    case Expr::Kind::deep_unit:
        if (config.algebra == AlgebraKind::deep)
            return DeepElement::unit(config.chain, config.field, e.u, e.v);
        fail(errc::kind_mismatch, "d[...] generators need the deep algebra");
    case Expr::Kind::finite_unit: {
        if (config.algebra != AlgebraKind::mixed)
            fail(errc::kind_mismatch, "f[...] generators need the mixed algebra");
        EntryMap finite;
        finite[{e.index, e.index2}] = Scalar::one(config.field);
        return MixedElement(std::move(finite), CoreElement::zero(config.chain, config.field));
    }
    case Expr::Kind::gen_x:
        if (config.algebra == AlgebraKind::leavitt)
            return LeavittElement::gen_x(config.chain, config.field, e.index);
        fail(errc::kind_mismatch, "x generators need the leavitt algebra");
    case Expr::Kind::gen_y:
        if (config.algebra == AlgebraKind::leavitt)
            return LeavittElement::gen_y(config.chain, config.field, e.index);
        fail(errc::kind_mismatch, "y generators need the leavitt algebra");
    case Expr::Kind::add: return value_add(eval_node(*e.lhs, config), eval_node(*e.rhs, config));
    case Expr::Kind::sub:
        return value_add(eval_node(*e.lhs, config),
                         value_scaled(eval_node(*e.rhs, config), -Scalar::one(config.field)));
    case Expr::Kind::mul: return value_mul(eval_node(*e.lhs, config), eval_node(*e.rhs, config));
    case Expr::Kind::neg:
        return value_scaled(eval_node(*e.lhs, config), -Scalar::one(config.field));
    case Expr::Kind::pow: {
        Value base = eval_node(*e.lhs, config);
        Value acc = value_identity(config);
        for (std::uint64_t i = 0; i < e.exponent; ++i)
            acc = value_mul(acc, base);
        return acc;
    }
    }
    fail(errc::domain, "unreachable");
}

}  // namespace

Value evaluate(const Expr& e, const SessionConfig& config)
{
    return eval_node(e, config);
}

}  // namespace snmat
