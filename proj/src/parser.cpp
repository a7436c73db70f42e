#include <cctype>
#include <string>
#include <vector>

#include "mteam/error.hpp"
#include "mteam/formula.hpp"

namespace mteam {

namespace {

enum class Tok {
    Ident, Number, LParen, RParen, LBracket, RBracket, Lt, Gt, LBrace, RBrace,
    Comma, Semi, Dot, Amp, Bar, Eq, Neq, Tilde, Hash, Slash, Arrow, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        Token tok{Tok::End, "", line, col};
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            tok.kind = Tok::Ident;
            tok.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            tok.kind = Tok::Number;
            tok.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else {
            auto two = src.substr(i, 2);
            if (two == "!=") {
                tok.kind = Tok::Neq;
            } else if (two == "->") {
                tok.kind = Tok::Arrow;
            } else {
                switch (c) {
                    case '(': tok.kind = Tok::LParen; break;
                    case ')': tok.kind = Tok::RParen; break;
                    case '[': tok.kind = Tok::LBracket; break;
                    case ']': tok.kind = Tok::RBracket; break;
                    case '<': tok.kind = Tok::Lt; break;
                    case '>': tok.kind = Tok::Gt; break;
                    case '{': tok.kind = Tok::LBrace; break;
                    case '}': tok.kind = Tok::RBrace; break;
                    case ',': tok.kind = Tok::Comma; break;
                    case ';': tok.kind = Tok::Semi; break;
                    case '.': tok.kind = Tok::Dot; break;
                    case '&': tok.kind = Tok::Amp; break;
                    case '|': tok.kind = Tok::Bar; break;
                    case '=': tok.kind = Tok::Eq; break;
                    case '~': tok.kind = Tok::Tilde; break;
                    case '#': tok.kind = Tok::Hash; break;
                    case '/': tok.kind = Tok::Slash; break;
                    default:
                        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
                }
            }
            std::size_t len = (tok.kind == Tok::Neq || tok.kind == Tok::Arrow) ? 2 : 1;
            tok.text = std::string(src.substr(i, len));
            advance(len);
        }
        out.push_back(std::move(tok));
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

bool is_atom_keyword(const std::string& s) {
    return s == "dep" || s == "inc" || s == "excl" || s == "ind" || s == "pinc" || s == "pind";
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Formula parse_all() {
        Formula f = parse_or();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
        throw ParseError(msg, t.line, t.column);
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        return take();
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (accept(Tok::Bar)) lhs = disj(lhs, parse_and());
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (accept(Tok::Amp)) lhs = conj(lhs, parse_unary());
        return lhs;
    }

    Formula parse_unary() {
        if (accept(Tok::Lt)) {
            Threshold p = parse_threshold();
            expect(Tok::Gt, "'>'");
            return exists_frac(p, parse_unary());
        }
        if (accept(Tok::LBracket)) {
            Threshold p = parse_threshold();
            expect(Tok::RBracket, "']'");
            return forall_frac(p, parse_unary());
        }
        if (peek().kind == Tok::Ident && (peek().text == "E" || peek().text == "A") &&
            peek(1).kind == Tok::Ident) {
            bool existential = take().text == "E";
            Var x(take().text);
            expect(Tok::Dot, "'.' after quantified variable");
            Formula body = parse_or();
            return existential ? exists(x, body) : forall(x, body);
        }
        return parse_primary();
    }

    Formula parse_primary() {
        if (accept(Tok::LParen)) {
            Formula inner = parse_or();
            if (accept(Tok::Arrow)) {
                expect(Tok::LBrace, "'{' after '->'");
                Threshold p = parse_threshold();
                expect(Tok::RBrace, "'}'");
                Formula rhs = parse_or();
                expect(Tok::RParen, "')'");
                return impl_frac(p, inner, rhs);
            }
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (accept(Tok::Tilde)) {
            std::string name = expect(Tok::Ident, "relation name after '~'").text;
            return neg_rel(name, parse_args());
        }
        if (peek().kind != Tok::Ident) fail("expected a formula");
        const Token& head = take();
        if (peek().kind == Tok::Eq || peek().kind == Tok::Neq) {
            bool equal = take().kind == Tok::Eq;
            Var y(expect(Tok::Ident, "variable").text);
            return equal ? eq(Var(head.text), y) : neq(Var(head.text), y);
        }
        if (peek().kind != Tok::LParen) fail("expected '(', '=' or '!=' after '" + head.text + "'");
        if (is_atom_keyword(head.text)) return parse_dependency_atom(head);
        return rel(head.text, parse_args());
    }

    Tuple parse_args() {
        expect(Tok::LParen, "'('");
        Tuple args;
        if (accept(Tok::RParen)) return args;
        do {
            args.emplace_back(expect(Tok::Ident, "variable").text);
        } while (accept(Tok::Comma));
        expect(Tok::RParen, "')'");
        return args;
    }

    std::vector<Tuple> parse_parts() {
        expect(Tok::LParen, "'('");
        std::vector<Tuple> parts(1);
        while (true) {
            if (accept(Tok::RParen)) break;
            if (accept(Tok::Semi)) {
                parts.emplace_back();
                continue;
            }
            if (!parts.back().empty()) expect(Tok::Comma, "',' or ';'");
            parts.back().emplace_back(expect(Tok::Ident, "variable").text);
        }
        return parts;
    }

    Formula parse_dependency_atom(const Token& head) {
        const std::string& kw = head.text;
        auto parts = parse_parts();
        auto need = [&](std::size_t lo, std::size_t hi) {
            if (parts.size() < lo || parts.size() > hi)
                fail_at(head, kw + " takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                                  " ';'-separated tuples, got " + std::to_string(parts.size()));
        };
        auto same_length = [&] {
            if (parts[0].size() != parts[1].size())
                fail_at(head, kw + ": tuples have different lengths (" + std::to_string(parts[0].size()) + " vs " +
                                  std::to_string(parts[1].size()) + ")");
        };
        if (kw == "dep") {
            need(1, 2);
            if (parts.size() == 1) return dep({}, parts[0]);
            return dep(parts[0], parts[1]);
        }
        if (kw == "ind" || kw == "pind") {
            need(2, 3);
            if (parts.size() == 2) parts.insert(parts.begin(), Tuple{});
            return kw == "ind" ? ci(parts[0], parts[1], parts[2]) : pci(parts[0], parts[1], parts[2]);
        }
        need(2, 2);
        same_length();
        if (kw == "inc") return inc(parts[0], parts[1]);
        if (kw == "excl") return excl(parts[0], parts[1]);
        return pinc(parts[0], parts[1]);
    }

    Threshold parse_threshold() {
        const Token& start = peek();
        if (accept(Tok::Hash)) return Threshold::count(Count(expect(Tok::Number, "count after '#'").text));
        Count num(expect(Tok::Number, "threshold").text);
        Count den = 1;
        if (accept(Tok::Slash)) den = Count(expect(Tok::Number, "denominator").text);
        if (den == 0) fail_at(start, "zero denominator in threshold");
        Rational p(num, den);
        if (p > 1) fail_at(start, "threshold " + to_string(p) + " outside [0,1]");
        return Threshold::ratio(p);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace mteam
