#pragma once

// Structure-function expressions over boolean component variables.
//
// Grammar (whitespace insensitive):
//     expr   := term ('|' term)*
//     term   := factor ('*' factor)*
//     factor := 'x' digits | '(' expr ')'
//
// '*' is boolean product, '|' is coproduct x|y = 1-(1-x)(1-y); '*' binds
// tighter. Juxtaposition ("x1 x2") is not product — the '*' is required.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bp/errors.hpp"
#include "bp/structure.hpp"

namespace bp {

namespace detail {

struct FormulaNode {
    enum Kind { Var, And, Or } kind;
    int var = 0;   // 1-based component index (Var)
    int lhs = -1;  // node indices (And/Or)
    int rhs = -1;
};

class FormulaParser {
public:
    FormulaParser(std::string_view text, int n) : text_(text), n_(n) {}

    // Returns the root node index.
    int parse() {
        int root = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected input after expression", pos_);
        return root;
    }

    const std::vector<FormulaNode>& nodes() const { return nodes_; }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int parse_expr() {
        int lhs = parse_term();
        while (eat('|')) {
            int rhs = parse_term();
            nodes_.push_back({FormulaNode::Or, 0, lhs, rhs});
            lhs = static_cast<int>(nodes_.size()) - 1;
        }
        return lhs;
    }

    int parse_term() {
        int lhs = parse_factor();
        while (eat('*')) {
            int rhs = parse_factor();
            nodes_.push_back({FormulaNode::And, 0, lhs, rhs});
            lhs = static_cast<int>(nodes_.size()) - 1;
        }
        return lhs;
    }

    int parse_factor() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("expected variable or '('", pos_);
        if (text_[pos_] == '(') {
            ++pos_;
            int inner = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (text_[pos_] == 'x' || text_[pos_] == 'X') {
            const std::size_t var_pos = pos_;
            ++pos_;
            std::size_t start = pos_;
            int idx = 0;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                idx = idx * 10 + (text_[pos_] - '0');
                if (idx > kMaxComponents + 1) break;  // avoid overflow on absurd input
                ++pos_;
            }
            if (pos_ == start) throw ParseError("expected component index after 'x'", pos_);
            if (idx < 1 || idx > n_)
                throw UnknownVariable("variable x" + std::to_string(idx) +
                                          " outside x1..x" + std::to_string(n_),
                                      var_pos);
            nodes_.push_back({FormulaNode::Var, idx, -1, -1});
            return static_cast<int>(nodes_.size()) - 1;
        }
        throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
    std::vector<FormulaNode> nodes_;
};

inline int eval_formula(const std::vector<FormulaNode>& nodes, int root, Mask a) {
    const FormulaNode& nd = nodes[root];
    switch (nd.kind) {
        case FormulaNode::Var:
            return contains(a, nd.var) ? 1 : 0;
        case FormulaNode::And:
            return eval_formula(nodes, nd.lhs, a) & eval_formula(nodes, nd.rhs, a);
        case FormulaNode::Or:
            return eval_formula(nodes, nd.lhs, a) | eval_formula(nodes, nd.rhs, a);
    }
    return 0;
}

}  // namespace detail

// Evaluates the expression on all 2^n points and validates the result as a
// semicoherent structure function.
inline StructureFunction parse_formula(std::string_view text, int n) {
    require_component_count(n);
    detail::FormulaParser parser(text, n);
    const int root = parser.parse();
    const std::size_t entries = std::size_t{1} << n;
    std::vector<std::uint8_t> table(entries);
    for (Mask a = 0; a < entries; ++a)
        table[a] = static_cast<std::uint8_t>(detail::eval_formula(parser.nodes(), root, a));
    return StructureFunction::from_truth_table(n, std::move(table));
}

inline const char* kBridgeFormula = "x1*x4 | x2*x5 | x1*x3*x5 | x2*x3*x4";

}  // namespace bp
