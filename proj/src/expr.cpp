#include "dspectra/expr.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace dspectra {

namespace {

ExprPtr make_node(GraphExpr node) {
    return std::make_shared<const GraphExpr>(std::move(node));
}

} // namespace

ExprPtr GraphExpr::cycle(int n) {
    GraphExpr e;
    e.kind = Kind::Cycle;
    e.size = n;
    return make_node(std::move(e));
}

ExprPtr GraphExpr::complete(int n) {
    GraphExpr e;
    e.kind = Kind::Complete;
    e.size = n;
    return make_node(std::move(e));
}

ExprPtr GraphExpr::empty(int n) {
    GraphExpr e;
    e.kind = Kind::Empty;
    e.size = n;
    return make_node(std::move(e));
}

ExprPtr GraphExpr::complement_of(ExprPtr child) {
    GraphExpr e;
    e.kind = Kind::Complement;
    e.children.push_back(std::move(child));
    return make_node(std::move(e));
}

ExprPtr GraphExpr::line_of(ExprPtr child) {
    GraphExpr e;
    e.kind = Kind::Line;
    e.children.push_back(std::move(child));
    return make_node(std::move(e));
}

ExprPtr GraphExpr::union_of(std::vector<ExprPtr> es) {
    GraphExpr e;
    e.kind = Kind::Union;
    e.children = std::move(es);
    return make_node(std::move(e));
}

ExprPtr GraphExpr::cycles_of(std::vector<int> parts) {
    GraphExpr e;
    e.kind = Kind::Cycles;
    e.parts = std::move(parts);
    return make_node(std::move(e));
}

ExprPtr GraphExpr::merged_sub(ExprPtr base, H1Kind h1, H2Kind h2) {
    GraphExpr e;
    e.kind = Kind::MergedSub;
    e.children.push_back(std::move(base));
    e.h1 = h1;
    e.h2 = h2;
    return make_node(std::move(e));
}

ExprPtr GraphExpr::double_join_of(ExprPtr msub, ExprPtr g1, ExprPtr g2) {
    GraphExpr e;
    e.kind = Kind::DoubleJoin;
    e.children.push_back(std::move(msub));
    e.children.push_back(std::move(g1));
    e.children.push_back(std::move(g2));
    return make_node(std::move(e));
}

bool expr_equal(const GraphExpr& lhs, const GraphExpr& rhs) {
    if (lhs.kind != rhs.kind || lhs.size != rhs.size || lhs.parts != rhs.parts ||
        lhs.h1 != rhs.h1 || lhs.h2 != rhs.h2 || lhs.children.size() != rhs.children.size())
        return false;
    for (std::size_t i = 0; i < lhs.children.size(); ++i)
        if (!expr_equal(*lhs.children[i], *rhs.children[i]))
            return false;
    return true;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse_top() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(pos_, "end of input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::size_t at, std::string expected) {
        std::ostringstream msg;
        msg << "parse error at offset " << at << ": expected " << expected;
        if (at < text_.size())
            msg << ", found '" << text_[at] << "'";
        else
            msg << ", found end of input";
        throw ParseError(msg.str(), at, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect_char(char c, const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(pos_, what);
        ++pos_;
    }

    bool try_char(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string read_word(std::size_t& start) {
        skip_ws();
        start = pos_;
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            word.push_back(text_[pos_++]);
        return word;
    }

    int read_number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail(start, "a number");
        int value = 0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc{})
            fail(start, "a representable number");
        return value;
    }

    // literal match so keywords with digits ("h1", "h2") work
    void expect_keyword(const char* kw) {
        skip_ws();
        const std::size_t at = pos_;
        for (const char* c = kw; *c; ++c) {
            if (pos_ >= text_.size() || text_[pos_] != *c)
                fail(at, std::string("'") + kw + "'");
            ++pos_;
        }
    }

    ExprPtr parse_expr() {
        std::size_t at = 0;
        const std::string word = read_word(at);
        if (word.empty())
            fail(at, "a graph expression");
        if (word == "C")
            return GraphExpr::cycle(read_number());
        if (word == "K")
            return GraphExpr::complete(read_number());
        if (word == "E")
            return GraphExpr::empty(read_number());
        if (word == "comp") {
            expect_char('(', "'('");
            ExprPtr e = parse_expr();
            expect_char(')', "')'");
            return GraphExpr::complement_of(std::move(e));
        }
        if (word == "line") {
            expect_char('(', "'('");
            ExprPtr e = parse_expr();
            expect_char(')', "')'");
            return GraphExpr::line_of(std::move(e));
        }
        if (word == "union") {
            expect_char('(', "'('");
            std::vector<ExprPtr> es;
            es.push_back(parse_expr());
            while (try_char(','))
                es.push_back(parse_expr());
            expect_char(')', "')'");
            return GraphExpr::union_of(std::move(es));
        }
        if (word == "cycles") {
            expect_char('(', "'('");
            std::vector<int> parts;
            parts.push_back(read_number());
            while (try_char(','))
                parts.push_back(read_number());
            expect_char(')', "')'");
            return GraphExpr::cycles_of(std::move(parts));
        }
        if (word == "msub")
            return parse_msub();
        if (word == "djoin") {
            expect_char('(', "'('");
            skip_ws();
            const std::size_t core_at = pos_;
            ExprPtr core = parse_expr();
            if (core->kind != GraphExpr::Kind::MergedSub)
                fail(core_at, "an msub expression as the first djoin argument");
            expect_char(',', "','");
            ExprPtr g1 = parse_expr();
            expect_char(',', "','");
            ExprPtr g2 = parse_expr();
            expect_char(')', "')'");
            return GraphExpr::double_join_of(std::move(core), std::move(g1), std::move(g2));
        }
        fail(at, "a graph expression");
    }

    ExprPtr parse_msub() {
        expect_char('(', "'('");
        ExprPtr base = parse_expr();
        expect_char(';', "';'");
        expect_keyword("h1");
        expect_char('=', "'='");
        std::size_t at = 0;
        const std::string h1_word = read_word(at);
        const auto h1 = h1_kind_from_string(h1_word);
        if (!h1)
            fail(at, "an edge overlay kind (empty|complete|line|compline)");
        expect_char(';', "';'");
        expect_keyword("h2");
        expect_char('=', "'='");
        const std::string h2_word = read_word(at);
        const auto h2 = h2_kind_from_string(h2_word);
        if (!h2)
            fail(at, "a vertex overlay kind (empty|complete|same|comp)");
        expect_char(')', "')'");
        return GraphExpr::merged_sub(std::move(base), *h1, *h2);
    }
};

void print_expr(const GraphExpr& e, std::ostringstream& out) {
    switch (e.kind) {
    case GraphExpr::Kind::Cycle:
        out << 'C' << e.size;
        return;
    case GraphExpr::Kind::Complete:
        out << 'K' << e.size;
        return;
    case GraphExpr::Kind::Empty:
        out << 'E' << e.size;
        return;
    case GraphExpr::Kind::Complement:
        out << "comp(";
        print_expr(*e.children[0], out);
        out << ')';
        return;
    case GraphExpr::Kind::Line:
        out << "line(";
        print_expr(*e.children[0], out);
        out << ')';
        return;
    case GraphExpr::Kind::Union:
        out << "union(";
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            if (i)
                out << ", ";
            print_expr(*e.children[i], out);
        }
        out << ')';
        return;
    case GraphExpr::Kind::Cycles:
        out << "cycles(";
        for (std::size_t i = 0; i < e.parts.size(); ++i) {
            if (i)
                out << ", ";
            out << e.parts[i];
        }
        out << ')';
        return;
    case GraphExpr::Kind::MergedSub:
        out << "msub(";
        print_expr(*e.children[0], out);
        out << "; h1=" << to_string(e.h1) << "; h2=" << to_string(e.h2) << ')';
        return;
    case GraphExpr::Kind::DoubleJoin:
        out << "djoin(";
        print_expr(*e.children[0], out);
        out << ", ";
        print_expr(*e.children[1], out);
        out << ", ";
        print_expr(*e.children[2], out);
        out << ')';
        return;
    }
}

} // namespace

ExprPtr parse_expr(std::string_view text) {
    return Parser(text).parse_top();
}

std::string pretty_print(const GraphExpr& e) {
    std::ostringstream out;
    print_expr(e, out);
    return out.str();
}

Evaluated evaluate(const GraphExpr& e) {
    switch (e.kind) {
    case GraphExpr::Kind::Cycle:
        return {make_cycle(e.size), std::nullopt};
    case GraphExpr::Kind::Complete:
        return {make_complete(e.size), std::nullopt};
    case GraphExpr::Kind::Empty:
        return {make_empty(e.size), std::nullopt};
    case GraphExpr::Kind::Complement:
        return {complement(evaluate(*e.children[0]).graph), std::nullopt};
    case GraphExpr::Kind::Line:
        return {line_graph(evaluate(*e.children[0]).graph), std::nullopt};
    case GraphExpr::Kind::Union: {
        std::vector<Graph> parts;
        parts.reserve(e.children.size());
        for (const ExprPtr& c : e.children)
            parts.push_back(evaluate(*c).graph);
        return {disjoint_union(parts), std::nullopt};
    }
    case GraphExpr::Kind::Cycles: {
        std::vector<Graph> parts;
        parts.reserve(e.parts.size());
        for (int n : e.parts)
            parts.push_back(make_cycle(n));
        return {disjoint_union(parts), std::nullopt};
    }
    case GraphExpr::Kind::MergedSub: {
        const Graph base = evaluate(*e.children[0]).graph;
        return {merged_subdivision(base, e.h1, e.h2).graph, std::nullopt};
    }
    case GraphExpr::Kind::DoubleJoin: {
        const GraphExpr& core_expr = *e.children[0];
        if (core_expr.kind != GraphExpr::Kind::MergedSub)
            throw PreconditionError("double join core must be a merged-subdivision expression");
        const Graph base = evaluate(*core_expr.children[0]).graph;
        const MergedSubdivision core = merged_subdivision(base, core_expr.h1, core_expr.h2);
        BlockedGraph bg = double_join(core, evaluate(*e.children[1]).graph,
                                      evaluate(*e.children[2]).graph);
        Graph g = bg.graph;
        return {std::move(g), std::move(bg)};
    }
    }
    throw PreconditionError("unknown expression kind");
}

} // namespace dspectra
