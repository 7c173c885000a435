#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "motivic/motivic_class.hpp"

namespace motivic {

/// Parse failure, carrying the byte offset of the offending position and
/// a description of what was expected there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + expected),
          offset_(offset), expected_(expected) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// Abstract syntax tree for class expressions.
///
/// Grammar (whitespace insensitive, '+'/'-'/'*'/'/' left-associative,
/// '^' binds tightest):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' signed-int)?
///   atom   := 'L' | unsigned-int | NAME '(' unsigned-int ')'
///           | NAME | '(' expr ')' | '-' atom
/// NAME is one of BO, BSO, SO, GL, SL, BGL, BSL, Gm, Ga; the bare form
/// without an argument is valid exactly for Gm and Ga, which take none.
struct Expr {
    using Ptr = std::unique_ptr<Expr>;

    struct IntLit {
        Int value;
    };
    struct Lefschetz {};
    struct Builtin {
        std::string name;
        Int arg;
        bool has_arg = false;
    };
    struct Neg {
        Ptr operand;
    };
    struct BinOp {
        char op; // '+', '-', '*', '/'
        Ptr lhs;
        Ptr rhs;
    };
    struct Pow {
        Ptr base;
        Int exponent;
    };

    std::variant<IntLit, Lefschetz, Builtin, Neg, BinOp, Pow> node;
};

/// Parse an expression; throws ParseError on any input outside the grammar.
Expr::Ptr parse(std::string_view text);

/// Bottom-up evaluation to a canonical class. '/' and negative powers go
/// through the exact inverse and may throw NotAUnitError; builtin calls may
/// throw UnsupportedSpecError or std::invalid_argument.
MotivicClass eval_expr(const Expr& e);

} // namespace motivic
