#include "deflog/parser.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace deflog {

namespace {

enum class Tok { Ident, Arrow, XArrow, Tilde, Amp, LParen, RParen, End };

struct Token {
    Tok type;
    std::string text;
    std::size_t column; // 1-based
};

class Lexer {
public:
    Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            std::size_t col = pos_ + 1;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", col});
                return out;
            }
            char c = src_[pos_];
            if (c == '~') { ++pos_; out.push_back({Tok::Tilde, "~", col}); continue; }
            if (c == '&') { ++pos_; out.push_back({Tok::Amp, "&", col}); continue; }
            if (c == '(') { ++pos_; out.push_back({Tok::LParen, "(", col}); continue; }
            if (c == ')') { ++pos_; out.push_back({Tok::RParen, ")", col}); continue; }
            if (c == '-') {
                if (match("->")) { out.push_back({Tok::Arrow, "->", col}); continue; }
                if (match("-x>")) { out.push_back({Tok::XArrow, "-x>", col}); continue; }
                throw ParseError(line_, col, "expected '->' or '-x>' after '-'");
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    ++pos_;
                out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), col});
                continue;
            }
            throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void skip_space() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r'))
            ++pos_;
    }
    bool match(std::string_view lit) {
        if (src_.substr(pos_, lit.size()) == lit) { pos_ += lit.size(); return true; }
        return false;
    }
    std::string_view src_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

// Surface tree: keeps `&` nodes around until desugaring so misplaced ones
// can be reported with their position.
struct Surface {
    enum class Op { Atom, Not, And, Arrow } op;
    std::string name;
    std::unique_ptr<Surface> left, right;
    std::size_t column = 0;
};

using SurfacePtr = std::unique_ptr<Surface>;

SurfacePtr node(Surface::Op op, SurfacePtr l, SurfacePtr r, std::size_t col) {
    auto n = std::make_unique<Surface>();
    n->op = op;
    n->left = std::move(l);
    n->right = std::move(r);
    n->column = col;
    return n;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t line)
        : tokens_(std::move(tokens)), line_(line) {}

    SurfacePtr run() {
        SurfacePtr e = implication();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    Token take() { return tokens_[at_++]; }

    void expect(Tok t, const char* what) {
        if (peek().type != t)
            throw ParseError(line_, peek().column,
                             std::string("expected ") + what + ", got '" + describe(peek()) + "'");
        take();
    }

    static std::string describe(const Token& t) {
        return t.type == Tok::End ? "end of input" : t.text;
    }

    // implication := conjunction ( ('->' | '-x>') implication )?   right-assoc
    SurfacePtr implication() {
        SurfacePtr lhs = conjunction();
        if (peek().type == Tok::Arrow) {
            std::size_t col = take().column;
            return node(Surface::Op::Arrow, std::move(lhs), implication(), col);
        }
        if (peek().type == Tok::XArrow) {
            std::size_t col = take().column;
            SurfacePtr rhs = node(Surface::Op::Not, implication(), nullptr, col);
            return node(Surface::Op::Arrow, std::move(lhs), std::move(rhs), col);
        }
        return lhs;
    }

    // conjunction := unary ( '&' unary )*   left-assoc
    SurfacePtr conjunction() {
        SurfacePtr lhs = unary();
        while (peek().type == Tok::Amp) {
            std::size_t col = take().column;
            lhs = node(Surface::Op::And, std::move(lhs), unary(), col);
        }
        return lhs;
    }

    SurfacePtr unary() {
        if (peek().type == Tok::Tilde) {
            std::size_t col = take().column;
            return node(Surface::Op::Not, unary(), nullptr, col);
        }
        return primary();
    }

    SurfacePtr primary() {
        if (peek().type == Tok::Ident) {
            Token t = take();
            auto n = node(Surface::Op::Atom, nullptr, nullptr, t.column);
            n->name = std::move(t.text);
            return n;
        }
        if (peek().type == Tok::LParen) {
            take();
            SurfacePtr e = implication();
            expect(Tok::RParen, "')'");
            return e;
        }
        throw ParseError(line_, peek().column,
                         "expected an atom, '~' or '(', got '" + describe(peek()) + "'");
    }

    std::vector<Token> tokens_;
    std::size_t line_;
    std::size_t at_ = 0;
};

class Desugar {
public:
    Desugar(SentenceStore& store, std::size_t line) : store_(store), line_(line) {}

    Sentence run(const Surface& s) { return lower(s); }

private:
    [[noreturn]] void misplaced_and(std::size_t col) const {
        throw ParseError(line_, col, "'&' is only allowed inside an antecedent");
    }

    Sentence lower(const Surface& s) {
        switch (s.op) {
        case Surface::Op::Atom:
            return store_.atom(s.name);
        case Surface::Op::Not:
            if (s.left->op == Surface::Op::And) misplaced_and(s.left->column);
            return store_.dneg(lower(*s.left));
        case Surface::Op::And:
            misplaced_and(s.column);
        case Surface::Op::Arrow: {
            if (s.right->op == Surface::Op::And) misplaced_and(s.right->column);
            return curry(*s.left, lower(*s.right));
        }
        }
        misplaced_and(s.column); // unreachable
    }

    // (a & b & c) -> d  ==  a -> (b -> (c -> d))
    Sentence curry(const Surface& antecedent, Sentence consequent) {
        if (antecedent.op == Surface::Op::And)
            return curry(*antecedent.left, curry(*antecedent.right, consequent));
        return store_.cond(lower(antecedent), consequent);
    }

    SentenceStore& store_;
    std::size_t line_;
};

} // namespace

Sentence parse_sentence(SentenceStore& store, std::string_view text, std::size_t line) {
    std::vector<Token> tokens = Lexer(text, line).run();
    SurfacePtr surface = Parser(std::move(tokens), line).run();
    return Desugar(store, line).run(*surface);
}

Theory parse_theory(SentenceStore& store, std::string_view text) {
    Theory out;
    std::vector<ParseError> errors;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : nl - start);
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size()) {
            try {
                out.insert(parse_sentence(store, line, line_no));
            } catch (const ParseError& e) {
                errors.push_back(e);
            }
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    if (!errors.empty()) throw TheoryParseError(std::move(errors));
    return out;
}

namespace {

void render_into(Sentence s, std::string& out) {
    switch (s.kind()) {
    case Kind::Atom:
        out += s.atom_name();
        break;
    case Kind::DNeg:
        out += '~';
        if (s.body().is_cond()) {
            out += '(';
            render_into(s.body(), out);
            out += ')';
        } else {
            render_into(s.body(), out);
        }
        break;
    case Kind::Cond:
        if (s.antecedent().is_cond()) {
            out += '(';
            render_into(s.antecedent(), out);
            out += ')';
        } else {
            render_into(s.antecedent(), out);
        }
        out += " -> ";
        render_into(s.consequent(), out);
        break;
    }
}

} // namespace

std::string render(Sentence s) {
    std::string out;
    render_into(s, out);
    return out;
}

std::string render_set(const SentenceSet& set) {
    std::string out = "{";
    bool first = true;
    for (Sentence s : set) {
        if (!first) out += ", ";
        first = false;
        out += render(s);
    }
    out += "}";
    return out;
}

} // namespace deflog
