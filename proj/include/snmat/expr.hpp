#pragma once

#include <memory>
#include <string>
#include <variant>

#include "snmat/core.hpp"
#include "snmat/deep.hpp"
#include "snmat/leavitt.hpp"

namespace snmat {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Abstract syntax over scalars, generators, +, -, *, integer powers and
// parentheses. Words follow the chain module's literal syntax; "_" is the
// empty word.
struct Expr {
    enum class Kind {
        scalar,       // "3", "-2" (under neg), "3/4"
        unit,         // e[u,v]
        gen_x,        // x<i>
        gen_y,        // y<i>
        deep_unit,    // d[u,v]
        finite_unit,  // f[i,j], finite matrix unit of the mixed algebra
        add,
        sub,
        mul,
        neg,
        pow,
    };

    Kind kind;
    std::string scalar_text;
    Word u, v;
    std::uint64_t index = 0;   // gen_x/gen_y index, finite_unit row
    std::uint64_t index2 = 0;  // finite_unit column
    std::uint64_t exponent = 0;
    ExprPtr lhs, rhs;
};

ExprPtr parse_expr(const std::string& text);  // throws errc::parse with a column number
std::string print_expr(const Expr& e);

enum class AlgebraKind { core, leavitt, deep, mixed };

AlgebraKind algebra_kind_parse(const std::string& text);
const char* algebra_kind_name(AlgebraKind kind);

struct SessionConfig {
    Field field;
    AlgebraKind algebra = AlgebraKind::core;
    Chain chain;
};

using Value = std::variant<CoreElement, LeavittElement, DeepElement, MixedElement>;

Value evaluate(const Expr& e, const SessionConfig& config);

}  // namespace snmat
