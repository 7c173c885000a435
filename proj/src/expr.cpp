#include "motivic/expr.hpp"

#include <cctype>

#include "motivic/group_classes.hpp"

namespace motivic {

namespace {

bool is_cli_builtin(std::string_view name) {
    return name == "BO" || name == "BSO" || name == "SO" || name == "GL" || name == "SL" ||
           name == "BGL" || name == "BSL" || name == "Gm" || name == "Ga";
}

bool takes_argument(std::string_view name) {
    return name != "Gm" && name != "Ga";
}

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    [[noreturn]] void fail(std::size_t at, const std::string& expected) const {
        throw ParseError(at, expected);
    }

    Int read_digits(const char* what) {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(pos, what);
        std::size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        return int_from_decimal(s.substr(start, pos - start));
    }

    Expr::Ptr parse_expr() {
        Expr::Ptr lhs = parse_term();
        while (true) {
            skip_ws();
            if (eof() || (peek() != '+' && peek() != '-')) return lhs;
            char op = peek();
            ++pos;
            Expr::Ptr rhs = parse_term();
            auto e = std::make_unique<Expr>();
            e->node = Expr::BinOp{op, std::move(lhs), std::move(rhs)};
            lhs = std::move(e);
        }
    }

    Expr::Ptr parse_term() {
        Expr::Ptr lhs = parse_factor();
        while (true) {
            skip_ws();
            if (eof() || (peek() != '*' && peek() != '/')) return lhs;
            char op = peek();
            ++pos;
            Expr::Ptr rhs = parse_factor();
            auto e = std::make_unique<Expr>();
            e->node = Expr::BinOp{op, std::move(lhs), std::move(rhs)};
            lhs = std::move(e);
        }
    }

    Expr::Ptr parse_factor() {
        Expr::Ptr base = parse_atom();
        skip_ws();
        if (eof() || peek() != '^') return base;
        ++pos;
        skip_ws();
        bool negative = false;
        if (!eof() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos;
        }
        Int exp = read_digits("expected an integer exponent after '^'");
        if (negative) exp = -exp;
        auto e = std::make_unique<Expr>();
        e->node = Expr::Pow{std::move(base), std::move(exp)};
        return e;
    }

    Expr::Ptr parse_atom() {
        skip_ws();
        if (eof()) fail(pos, "expected 'L', an integer, a builtin name, '(' or '-'");
        char c = peek();

        if (c == '(') {
            ++pos;
            Expr::Ptr inner = parse_expr();
            skip_ws();
            if (eof() || peek() != ')') fail(pos, "expected ')'");
            ++pos;
            return inner;
        }
        if (c == '-') {
            ++pos;
            Expr::Ptr inner = parse_atom();
            auto e = std::make_unique<Expr>();
            e->node = Expr::Neg{std::move(inner)};
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = std::make_unique<Expr>();
            e->node = Expr::IntLit{read_digits("expected an integer")};
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos;
            std::string name(s.substr(start, pos - start));

            if (name == "L") {
                auto e = std::make_unique<Expr>();
                e->node = Expr::Lefschetz{};
                return e;
            }
            if (!is_cli_builtin(name)) fail(start, "unknown name '" + name + "'");

            skip_ws();
            if (!takes_argument(name)) {
                if (!eof() && peek() == '(') fail(pos, "'" + name + "' takes no argument");
                auto e = std::make_unique<Expr>();
                e->node = Expr::Builtin{std::move(name), 0, false};
                return e;
            }
            if (eof() || peek() != '(') fail(pos, "expected '(' after '" + name + "'");
            ++pos;
            Int arg = read_digits("expected a non-negative integer");
            skip_ws();
            if (eof() || peek() != ')') fail(pos, "expected ')'");
            ++pos;
            auto e = std::make_unique<Expr>();
            e->node = Expr::Builtin{std::move(name), std::move(arg), true};
            return e;
        }
        fail(pos, std::string("unexpected character '") + c + "'");
    }
};

// Guards against degenerate inputs that would only exhaust memory.
constexpr long long kMaxGroupParameter = 1'000'000;
constexpr long long kMaxExponentMagnitude = 1'000'000;

long long narrow(const Int& v, long long bound, const char* what) {
    if (v > bound || v < -bound)
        throw std::invalid_argument(std::string(what) + " out of supported range");
    return v.convert_to<long long>();
}

} // namespace

Expr::Ptr parse(std::string_view text) {
    Parser p{text};
    Expr::Ptr e = p.parse_expr();
    p.skip_ws();
    if (!p.eof()) p.fail(p.pos, "expected end of input");
    return e;
}

MotivicClass eval_expr(const Expr& e) {
    return std::visit(
        [](const auto& node) -> MotivicClass {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::IntLit>) {
                return MotivicClass::from_int(node.value);
            } else if constexpr (std::is_same_v<T, Expr::Lefschetz>) {
                return MotivicClass::lefschetz();
            } else if constexpr (std::is_same_v<T, Expr::Builtin>) {
                GroupSpec spec{*group_kind_from_name(node.name), 0};
                if (node.has_arg) spec.n = narrow(node.arg, kMaxGroupParameter, "group parameter");
                return class_of(spec);
            } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                return -eval_expr(*node.operand);
            } else if constexpr (std::is_same_v<T, Expr::BinOp>) {
                MotivicClass lhs = eval_expr(*node.lhs);
                MotivicClass rhs = eval_expr(*node.rhs);
                switch (node.op) {
                case '+': return lhs + rhs;
                case '-': return lhs - rhs;
                case '*': return lhs * rhs;
                case '/': return lhs / rhs;
                }
                throw std::logic_error("eval_expr: unknown operator");
            } else {
                static_assert(std::is_same_v<T, Expr::Pow>);
                return eval_expr(*node.base).pow(narrow(node.exponent, kMaxExponentMagnitude, "exponent"));
            }
        },
        e.node);
}

} // namespace motivic
