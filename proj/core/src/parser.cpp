#include <cctype>
#include <optional>

#include "lpbc/program.hpp"

namespace lpbc {

namespace {

struct Token {
    enum Kind { Atom, Not, Dot, Comma, Semicolon, Arrow, VocabDirective, End } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::End, "", line, col};
        char c = src_[pos_];
        if (c == '.') return advance(1), Token{Token::Dot, ".", line, col};
        if (c == ',') return advance(1), Token{Token::Comma, ",", line, col};
        if (c == ';') return advance(1), Token{Token::Semicolon, ";", line, col};
        if (c == ':') {
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-')
                return advance(2), Token{Token::Arrow, ":-", line, col};
            throw ParseError("expected ':-'", line, col);
        }
        if (c == '#') {
            std::size_t start = pos_;
            advance(1);
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                advance(1);
            std::string word = src_.substr(start, pos_ - start);
            if (word == "#vocab") return {Token::VocabDirective, word, line, col};
            throw ParseError("unknown directive '" + word + "'", line, col);
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                advance(1);
            std::string word = src_.substr(start, pos_ - start);
            if (word == "not") return {Token::Not, word, line, col};
            return {Token::Atom, word, line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            } else {
                break;
            }
        }
    }

    void advance(int n) {
        for (int i = 0; i < n && pos_ < src_.size(); ++i) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(const std::string& src, std::optional<Vocabulary> declared)
        : lexer_(src), declared_(std::move(declared)) {
        advance();
    }

    ParseResult run() {
        std::vector<Rule> rules;
        std::vector<std::string> declared_atoms;
        if (declared_) declared_atoms = declared_->atoms();
        while (cur_.kind != Token::End) {
            if (cur_.kind == Token::VocabDirective) {
                advance();
                while (cur_.kind == Token::Atom) {
                    declared_atoms.push_back(cur_.text);
                    advance();
                }
                expect(Token::Dot, "'.'");
            } else {
                rules.push_back(rule());
            }
        }
        Program program(std::move(rules));
        Vocabulary vocab = Vocabulary(declared_atoms).merged(Vocabulary(program.atoms()));
        if (declared_ || !declared_atoms.empty()) {
            Vocabulary decl(declared_atoms);
            for (const auto& a : program.atoms())
                if (!decl.contains(a))
                    throw ParseError("atom '" + a + "' outside declared vocabulary", 0, 0);
        }
        return {std::move(program), std::move(vocab)};
    }

private:
    Rule rule() {
        std::vector<std::string> hp, hn, bp, bn;
        if (cur_.kind == Token::Arrow) {  // constraint, empty head
            advance();
            body(bp, bn);
        } else {
            literal_list(hp, hn, Token::Semicolon);
            if (cur_.kind == Token::Arrow) {
                advance();
                body(bp, bn);
            }
        }
        expect(Token::Dot, "'.'");
        return Rule(std::move(hp), std::move(hn), std::move(bp), std::move(bn));
    }

    void body(std::vector<std::string>& pos, std::vector<std::string>& neg) {
        literal_list(pos, neg, Token::Comma);
    }

    void literal_list(std::vector<std::string>& pos, std::vector<std::string>& neg,
                      Token::Kind separator) {
        for (;;) {
            bool negated = false;
            if (cur_.kind == Token::Not) {
                negated = true;
                advance();
            }
            if (cur_.kind != Token::Atom)
                throw ParseError("expected atom, got '" + cur_.text + "'", cur_.line, cur_.column);
            (negated ? neg : pos).push_back(cur_.text);
            advance();
            if (cur_.kind != separator) break;
            advance();
        }
    }

    void expect(Token::Kind kind, const char* what) {
        if (cur_.kind != kind)
            throw ParseError(std::string("expected ") + what + ", got '" + cur_.text + "'",
                             cur_.line, cur_.column);
        advance();
    }

    void advance() { cur_ = lexer_.next(); }

    Lexer lexer_;
    Token cur_;
    std::optional<Vocabulary> declared_;
};

}  // namespace

ParseResult parse_program(const std::string& text) { return Parser(text, std::nullopt).run(); }

ParseResult parse_program(const std::string& text, const Vocabulary& declared) {
    return Parser(text, declared).run();
}

Rule parse_rule(const std::string& text) {
    auto result = parse_program(text);
    if (result.program.size() != 1)
        throw DomainError("expected exactly one rule in '" + text + "'");
    return result.program.rules().front();
}

}  // namespace lpbc
