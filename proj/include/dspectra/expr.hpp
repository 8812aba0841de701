#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dspectra/graph.hpp"
#include "dspectra/transforms.hpp"

namespace dspectra {

struct GraphExpr;
using ExprPtr = std::shared_ptr<const GraphExpr>;

// AST of the little construction language:
//   C4 K5 E3 comp(e) line(e) union(e,...) cycles(n,...)
//   msub(e; h1=<empty|complete|line|compline>; h2=<empty|complete|same|comp>)
//   djoin(msubExpr, e, e)
struct GraphExpr {
    enum class Kind { Cycle, Complete, Empty, Complement, Line, Union, Cycles, MergedSub, DoubleJoin };

    Kind kind = Kind::Cycle;
    int size = 0;                  // Cycle / Complete / Empty
    std::vector<int> parts;        // Cycles
    std::vector<ExprPtr> children; // the rest
    H1Kind h1 = H1Kind::Empty;     // MergedSub
    H2Kind h2 = H2Kind::Empty;     // MergedSub

    static ExprPtr cycle(int n);
    static ExprPtr complete(int n);
    static ExprPtr empty(int n);
    static ExprPtr complement_of(ExprPtr e);
    static ExprPtr line_of(ExprPtr e);
    static ExprPtr union_of(std::vector<ExprPtr> es);
    static ExprPtr cycles_of(std::vector<int> parts);
    static ExprPtr merged_sub(ExprPtr base, H1Kind h1, H2Kind h2);
    static ExprPtr double_join_of(ExprPtr msub, ExprPtr g1, ExprPtr g2);
};

bool expr_equal(const GraphExpr& lhs, const GraphExpr& rhs);

// Whitespace-insensitive recursive-descent parse; ParseError carries the
// offset of the failure and what was expected there.
ExprPtr parse_expr(std::string_view text);

// Canonical text form; parse_expr(pretty_print(e)) reproduces e.
std::string pretty_print(const GraphExpr& e);

struct Evaluated {
    Graph graph;
    std::optional<BlockedGraph> blocked; // set when the expression is a double join
};

Evaluated evaluate(const GraphExpr& e);

} // namespace dspectra
