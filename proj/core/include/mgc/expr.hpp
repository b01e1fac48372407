#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "mgc/jet.hpp"

namespace mgc {

/// A parsed closed-form expression in one parameter. Trees are immutable
/// after parse and cheap to share; evaluation is pure.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | power
///   power  := atom ("^" factor)?
///   atom   := number | ident | ident "(" expr ")" | "(" expr ")"
///
/// `^` binds tighter than unary minus and is right-associative. A `^` with
/// a constant exponent is folded to a power node; a non-constant exponent
/// is rewritten to exp(b*log(a)) at parse time. There is no implicit
/// multiplication: "2u" is a syntax error.
class Expr {
public:
    class Node;

    Expr() = default;

    /// Value and derivatives up to `order` (<= 5) at the point u.
    Jet eval_jet(double u, int order = Jet::kMaxOrder) const;
    /// Plain evaluation (order-0 jet).
    double eval(double u) const;

    /// Canonical text form; parsing it back yields an identical tree.
    std::string str() const;

    bool valid() const { return root_ != nullptr; }

    /// Name of the parameter variable this expression was parsed with.
    const std::string& param_name() const { return param_; }

private:
    friend Expr parse(std::string_view, std::string_view);
    std::shared_ptr<const Node> root_;
    std::string param_ = "u";
};

/// Parse an expression whose parameter variable is named `param`
/// ("u" or "s" in curve definitions). Throws Error{SyntaxError} with the
/// byte offset of the failure, or Error{UnknownIdentifier}.
Expr parse(std::string_view text, std::string_view param = "u");

} // namespace mgc
