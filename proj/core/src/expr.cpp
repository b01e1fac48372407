#include "mgc/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>
#include <vector>

#include "mgc/errors.hpp"

namespace mgc {

namespace {

enum class Op : std::uint8_t { Add, Sub, Mul, Div, Pow, Neg };

enum class Fn : std::uint8_t { Sin, Cos, Sinh, Cosh, Tan, Tanh, Exp, Log, Sqrt, Abs };

struct FnEntry {
    const char* name;
    Fn fn;
};

constexpr FnEntry kFunctions[] = {
    {"sin", Fn::Sin},   {"cos", Fn::Cos},   {"sinh", Fn::Sinh}, {"cosh", Fn::Cosh},
    {"tan", Fn::Tan},   {"tanh", Fn::Tanh}, {"exp", Fn::Exp},   {"log", Fn::Log},
    {"sqrt", Fn::Sqrt}, {"abs", Fn::Abs},
};

const char* fn_name(Fn f) {
    for (const auto& e : kFunctions)
        if (e.fn == f) return e.name;
    return "?";
}

} // namespace

class Expr::Node {
public:
    enum class Kind : std::uint8_t { Number, Var, Unary, Binary, Call };

    Kind kind;
    double number = 0.0;              // Number
    Op op = Op::Add;                  // Unary (Neg) / Binary
    Fn fn = Fn::Sin;                  // Call
    std::shared_ptr<const Node> lhs;  // Unary child, Binary lhs, Call arg
    std::shared_ptr<const Node> rhs;  // Binary rhs

    static std::shared_ptr<const Node> make_number(double v) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Number;
        n->number = v;
        return n;
    }
    static std::shared_ptr<const Node> make_var() {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Var;
        return n;
    }
    static std::shared_ptr<const Node> make_unary(std::shared_ptr<const Node> c) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Unary;
        n->op = Op::Neg;
        n->lhs = std::move(c);
        return n;
    }
    static std::shared_ptr<const Node> make_binary(Op op, std::shared_ptr<const Node> a,
                                                   std::shared_ptr<const Node> b) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Binary;
        n->op = op;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }
    static std::shared_ptr<const Node> make_call(Fn f, std::shared_ptr<const Node> a) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Call;
        n->fn = f;
        n->lhs = std::move(a);
        return n;
    }

    bool depends_on_var() const {
        switch (kind) {
            case Kind::Number: return false;
            case Kind::Var:    return true;
            case Kind::Unary:
            case Kind::Call:   return lhs->depends_on_var();
            case Kind::Binary: return lhs->depends_on_var() || rhs->depends_on_var();
        }
        return false;
    }

    Jet eval(double u, int order) const;
    void print(std::string& out, std::string_view var, int parent_prec, bool rhs_of_parent) const;
};

namespace {

[[noreturn]] void fail_eval(const Expr::Node& node, const std::string& what) {
    std::string text;
    node.print(text, "u", 0, false);
    throw Error(ErrorCode::DomainError, what + " in \"" + text + "\"");
}

} // namespace

Jet Expr::Node::eval(double u, int order) const {
    switch (kind) {
        case Kind::Number:
            return Jet::constant(number, order);
        case Kind::Var:
            return Jet::variable(u, order);
        case Kind::Unary:
            return -lhs->eval(u, order);
        case Kind::Binary: {
            Jet a = lhs->eval(u, order);
            switch (op) {
                case Op::Add: return a + rhs->eval(u, order);
                case Op::Sub: return a - rhs->eval(u, order);
                case Op::Mul: return a * rhs->eval(u, order);
                case Op::Div: {
                    Jet b = rhs->eval(u, order);
                    if (b.value() == 0.0) fail_eval(*this, "division by zero");
                    return a / b;
                }
                case Op::Pow: {
                    // Exponent is constant by construction (parser folds it).
                    double p = rhs->eval(u, 0).value();
                    try {
                        return pow(a, p);
                    } catch (const Error& e) {
                        fail_eval(*this, e.detail());
                    }
                }
                default: break;
            }
            break;
        }
        case Kind::Call: {
            Jet a = lhs->eval(u, order);
            try {
                switch (fn) {
                    case Fn::Sin:  return sin(a);
                    case Fn::Cos:  return cos(a);
                    case Fn::Sinh: return sinh(a);
                    case Fn::Cosh: return cosh(a);
                    case Fn::Tan:  return tan(a);
                    case Fn::Tanh: return tanh(a);
                    case Fn::Exp:  return exp(a);
                    case Fn::Log:  return log(a);
                    case Fn::Sqrt: return sqrt(a);
                    case Fn::Abs:  return abs(a);
                }
            } catch (const Error& e) {
                if (e.code() == ErrorCode::DomainError) fail_eval(*this, e.detail());
                throw;
            }
            break;
        }
    }
    throw Error(ErrorCode::InvalidInput, "corrupt expression tree");
}

namespace {

// Precedence levels for the printer: additive 1, multiplicative 2,
// unary minus 3, power 4.
int prec_of(Op op) {
    switch (op) {
        case Op::Add:
        case Op::Sub: return 1;
        case Op::Mul:
        case Op::Div: return 2;
        case Op::Neg: return 3;
        case Op::Pow: return 4;
    }
    return 0;
}

void print_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

} // namespace

void Expr::Node::print(std::string& out, std::string_view var, int parent_prec, bool rhs_of_parent) const {
    switch (kind) {
        case Kind::Number:
            if (number < 0.0) {
                // Negative literals print through a parenthesized form only
                // when required; the parser re-reads them via unary minus.
                bool parens = parent_prec > 1;
                if (parens) out += '(';
                print_number(out, number);
                if (parens) out += ')';
            } else {
                print_number(out, number);
            }
            return;
        case Kind::Var:
            out += var;
            return;
        case Kind::Unary: {
            bool parens = parent_prec > 3 || (parent_prec == 3 && rhs_of_parent);
            if (parens) out += '(';
            out += '-';
            lhs->print(out, var, 3, true);
            if (parens) out += ')';
            return;
        }
        case Kind::Binary: {
            int p = prec_of(op);
            bool parens = p < parent_prec || (p == parent_prec && rhs_of_parent && op != Op::Pow);
            // Right-associative power: parenthesize a left child that is
            // itself a power or anything weaker.
            if (parens) out += '(';
            char sym = op == Op::Add ? '+' : op == Op::Sub ? '-'
                     : op == Op::Mul ? '*' : op == Op::Div ? '/' : '^';
            if (op == Op::Pow) {
                lhs->print(out, var, p + 1, false);
                out += sym;
                rhs->print(out, var, p, true);
            } else {
                lhs->print(out, var, p, false);
                out += sym;
                rhs->print(out, var, p + 1, true);
            }
            if (parens) out += ')';
            return;
        }
        case Kind::Call:
            out += fn_name(fn);
            out += '(';
            lhs->print(out, var, 0, false);
            out += ')';
            return;
    }
}

Jet Expr::eval_jet(double u, int order) const {
    if (!root_) throw Error(ErrorCode::InvalidInput, "empty expression");
    if (order < 0 || order > Jet::kMaxOrder)
        throw Error(ErrorCode::InvalidInput, "jet order must be in [0,5]");
    Jet j = root_->eval(u, order);
    if (!j.all_finite()) {
        std::string text;
        root_->print(text, param_, 0, false);
        throw Error(ErrorCode::DomainError, "non-finite value in \"" + text + "\"");
    }
    return j;
}

double Expr::eval(double u) const {
    return eval_jet(u, 0).value();
}

std::string Expr::str() const {
    std::string out;
    if (root_) root_->print(out, param_, 0, false);
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(std::string_view text, std::string_view param) : text_(text), param_(param) {}

    std::shared_ptr<const Expr::Node> run() {
        if (text_.empty())
            throw Error(ErrorCode::SyntaxError, "empty expression");
        auto node = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return node;
    }

private:
    using NodePtr = std::shared_ptr<const Expr::Node>;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::SyntaxError,
                    what + " at byte " + std::to_string(pos_) + " of \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    NodePtr parse_expr() {
        NodePtr node = parse_term();
        for (;;) {
            if (accept('+')) node = Expr::Node::make_binary(Op::Add, node, parse_term());
            else if (accept('-')) node = Expr::Node::make_binary(Op::Sub, node, parse_term());
            else return node;
        }
    }

    NodePtr parse_term() {
        NodePtr node = parse_factor();
        for (;;) {
            if (accept('*')) node = Expr::Node::make_binary(Op::Mul, node, parse_factor());
            else if (accept('/')) node = Expr::Node::make_binary(Op::Div, node, parse_factor());
            else return node;
        }
    }

    NodePtr parse_factor() {
        if (accept('-')) return Expr::Node::make_unary(parse_factor());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (!accept('^')) return base;
        NodePtr exponent = parse_factor();
        if (exponent->depends_on_var()) {
            // Rewrite a^b as exp(b*log(a)) so jet rules stay closed-form.
            return Expr::Node::make_call(
                Fn::Exp, Expr::Node::make_binary(Op::Mul, exponent,
                                                 Expr::Node::make_call(Fn::Log, base)));
        }
        // Fold the constant exponent to a literal.
        double p = exponent->eval(0.0, 0).value();
        return Expr::Node::make_binary(Op::Pow, base, Expr::Node::make_number(p));
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail("unexpected character");
    }

    NodePtr parse_number() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            size_t mark = pos_++;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                pos_ = mark; // bare 'e' after a number belongs to the next token
            }
        }
        // No implicit multiplication: reject "2u" outright.
        if (pos_ < text_.size() &&
            (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            fail("implicit multiplication is not allowed");
        double v = std::strtod(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr);
        return Expr::Node::make_number(v);
    }

    NodePtr parse_ident() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);

        if (name == param_) return Expr::Node::make_var();
        if (name == "pi") return Expr::Node::make_number(std::numbers::pi);
        if (name == "e") return Expr::Node::make_number(std::numbers::e);

        for (const auto& entry : kFunctions) {
            if (name == entry.name) {
                expect('(');
                NodePtr arg = parse_expr();
                expect(')');
                return Expr::Node::make_call(entry.fn, arg);
            }
        }
        throw Error(ErrorCode::UnknownIdentifier,
                    "unknown identifier \"" + std::string(name) + "\" at byte " +
                        std::to_string(start) + " (parameter is \"" + std::string(param_) + "\")");
    }

    std::string_view text_;
    std::string_view param_;
    size_t pos_ = 0;
};

} // namespace

Expr parse(std::string_view text, std::string_view param) {
    Parser p(text, param);
    Expr e;
    e.root_ = p.run();
    e.param_ = std::string(param);
    return e;
}

} // namespace mgc
