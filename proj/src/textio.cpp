#include "mdl/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace mdl {

std::vector<Literal> Extension::undecided(Mode m) const {
    std::vector<Literal> out;
    for (const Literal& l : herbrand)
        if (!is_proved(m, l) && !is_refuted(m, l)) out.push_back(l);
    return out;
}

namespace {

enum class Tok { Ident, Tilde, Bang, Comma, Dot, Colon, Gt, ArrowB, ArrowO, ArrowU, Chain, End, Bad };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + std::string(t.text) + "'";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto emit = [&](Tok k, std::size_t len) {
        out.push_back({k, src.substr(i, len), line, col});
        i += len;
        col += len;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
        } else if (c == '%') {
            while (i < src.size() && src[i] != '\n') ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            emit(Tok::Ident, j - i);
        } else if (src.substr(i, 2) == "=>") {
            emit(Tok::ArrowB, 2);
        } else if (src.substr(i, 3) == "=O>") {
            emit(Tok::ArrowO, 3);
        } else if (src.substr(i, 3) == "=U>") {
            emit(Tok::ArrowU, 3);
        } else if (src.substr(i, 3) == "(+)") {
            emit(Tok::Chain, 3);
        } else {
            switch (c) {
                case '~': emit(Tok::Tilde, 1); break;
                case '!': emit(Tok::Bang, 1); break;
                case ',': emit(Tok::Comma, 1); break;
                case '.': emit(Tok::Dot, 1); break;
                case ':': emit(Tok::Colon, 1); break;
                case '>': emit(Tok::Gt, 1); break;
                default: {
                    // Keep multi-byte UTF-8 sequences together in the message.
                    std::size_t len = 1;
                    while (i + len < src.size() && (static_cast<unsigned char>(src[i + len]) & 0xC0) == 0x80) ++len;
                    emit(Tok::Bad, len);
                    col -= len - 1;
                }
            }
        }
    }
    out.push_back({Tok::End, {}, line, col});
    return out;
}

struct Failure {
    Token at;
    std::string message;
};

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src), toks_(lex(src)) {
        std::size_t start = 0;
        for (std::size_t i = 0; i <= src.size(); ++i) {
            if (i == src.size() || src[i] == '\n') {
                lines_.push_back(src.substr(start, i - start));
                start = i + 1;
            }
        }
    }

    ParseResult run() {
        while (peek().kind != Tok::End) {
            try {
                statement();
            } catch (const Failure& f) {
                error(f.at, f.message);
                recover();
            }
        }
        for (const auto& [sup, inf] : pending_sup_) {
            bool known = true;
            for (const Token* t : {&sup, &inf}) {
                if (!theory_.find_rule(t->text)) {
                    error(*t, "superiority references unknown rule label '" + std::string(t->text) + "'");
                    known = false;
                }
            }
            if (known) theory_.add_superiority(sup.text, inf.text);
        }
        if (result_.errors.empty()) result_.theory = std::move(theory_);
        return std::move(result_);
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& advance() {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }
    const Token& expect(Tok k, std::string_view what) {
        if (peek().kind != k) throw Failure{peek(), "expected " + std::string(what) + ", found " + describe(peek())};
        return advance();
    }

    ParseError make(const Token& t, std::string msg) const {
        std::string snippet = t.line - 1 < lines_.size() ? std::string(lines_[t.line - 1]) : "";
        return {t.line, t.column, std::move(msg), std::move(snippet)};
    }
    void error(const Token& t, std::string msg) { result_.errors.push_back(make(t, std::move(msg))); }
    void warn(const Token& t, std::string msg) { result_.warnings.push_back(make(t, std::move(msg))); }

    void recover() {
        while (peek().kind != Tok::End && peek().kind != Tok::Dot) advance();
        if (peek().kind == Tok::Dot) advance();
    }

    static bool is_modal_keyword(const Token& t) {
        auto m = parse_mode(t.text);
        return t.kind == Tok::Ident && m && *m != Mode::B;
    }
    bool at_modal() const {
        if (peek().kind == Tok::Bang) return true;
        return is_modal_keyword(peek()) && (peek(1).kind == Tok::Ident || peek(1).kind == Tok::Tilde);
    }

    Literal literal() {
        bool positive = true;
        if (peek().kind == Tok::Tilde) {
            advance();
            positive = false;
        }
        const Token& name = expect(Tok::Ident, "literal");
        return Literal(Atom(name.text), positive);
    }

    BodyElement modal_literal() {
        bool negated = false;
        if (peek().kind == Tok::Bang) {
            advance();
            negated = true;
            if (!is_modal_keyword(peek()))
                throw Failure{peek(), "expected mode O, D, G, I or SI after '!', found " + describe(peek())};
        }
        if (at_modal() || negated) {
            Mode m = *parse_mode(advance().text);
            return BodyElement(m, literal(), negated);
        }
        return BodyElement(literal());
    }

    void statement() {
        const Token& first = peek();
        if (first.kind == Tok::Ident && peek(1).kind == Tok::Gt) {
            Token sup = advance();
            advance();
            Token inf = expect(Tok::Ident, "rule label");
            expect(Tok::Dot, "'.'");
            pending_sup_.emplace_back(sup, inf);
        } else if (first.kind == Tok::Ident && first.text == "fact") {
            advance();
            BodyElement f = modal_literal();
            expect(Tok::Dot, "'.'");
            theory_.add_fact(f);
        } else if (first.kind == Tok::Ident && first.text == "rule") {
            advance();
            rule();
        } else if (first.kind == Tok::Ident) {
            throw Failure{first, "unknown statement keyword '" + std::string(first.text) + "'"};
        } else {
            throw Failure{first, "expected a statement, found " + describe(first)};
        }
    }

    void rule() {
        Token label = expect(Tok::Ident, "rule label");
        expect(Tok::Colon, "':'");
        std::vector<BodyElement> body;
        auto is_arrow = [](Tok k) { return k == Tok::ArrowB || k == Tok::ArrowO || k == Tok::ArrowU; };
        if (!is_arrow(peek().kind)) {
            body.push_back(modal_literal());
            while (peek().kind == Tok::Comma) {
                advance();
                body.push_back(modal_literal());
            }
        }
        if (!is_arrow(peek().kind)) throw Failure{peek(), "expected '=>', '=O>' or '=U>', found " + describe(peek())};
        Tok arrow = advance().kind;
        RuleKind kind = arrow == Tok::ArrowB ? RuleKind::B : arrow == Tok::ArrowO ? RuleKind::O : RuleKind::U;

        std::vector<Literal> chain;
        std::vector<Token> where;
        for (;;) {
            if (at_modal()) throw Failure{peek(), "modal literal in rule head"};
            where.push_back(peek());
            chain.push_back(literal());
            if (peek().kind != Tok::Chain) break;
            advance();
        }
        expect(Tok::Dot, "'.'");

        for (std::size_t i = 0; i < chain.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (chain[j] == chain[i]) {
                    warn(where[i], "duplicate chain element '" + to_string(chain[i]) + "' dropped");
                    break;
                }
                if (chain[j] == complement(chain[i]))
                    warn(where[i], "chain contains both '" + to_string(chain[j]) + "' and '" +
                                       to_string(chain[i]) + "'");
            }
        }
        OutcomeChain head = normalize_chain(chain);
        if (kind == RuleKind::B && head.size() != 1) {
            error(label, "belief rule '" + std::string(label.text) + "' must have a single-literal head");
            return;
        }
        if (theory_.find_rule(label.text)) {
            error(label, "duplicate rule label '" + std::string(label.text) + "'");
            return;
        }
        theory_.add_rule(Rule(std::string(label.text), kind, std::move(body), std::move(head)));
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::vector<std::string_view> lines_;
    std::size_t pos_ = 0;
    Theory theory_;
    ParseResult result_;
    std::vector<std::pair<Token, Token>> pending_sup_;
};

std::vector<std::string> sorted_names(const std::set<Literal>& s) {
    std::vector<std::string> out;
    for (const Literal& l : s) out.push_back(to_string(l));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted_names(const std::vector<Literal>& s) {
    std::vector<std::string> out;
    for (const Literal& l : s) out.push_back(to_string(l));
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += xs[i];
    }
    return out;
}

}  // namespace

ParseResult parse_theory(std::string_view source) { return Parser(source).run(); }

std::string format_diagnostic(const ParseError& e, std::string_view kind, std::string_view file) {
    std::ostringstream os;
    if (!file.empty()) os << file << ':';
    os << e.line << ':' << e.column << ": " << kind << ": " << e.message << '\n';
    os << "  " << e.snippet << '\n';
    os << "  " << std::string(e.column > 0 ? e.column - 1 : 0, ' ') << "^\n";
    return os.str();
}

std::string render_theory(const Theory& t) {
    std::ostringstream os;
    for (const BodyElement& f : t.facts()) os << "fact " << to_string(f) << ".\n";
    for (const Rule& r : t.rules()) {
        os << "rule " << r.label << ':';
        for (std::size_t i = 0; i < r.body.size(); ++i) os << (i ? ", " : " ") << to_string(r.body[i]);
        switch (r.kind) {
            case RuleKind::B: os << " => "; break;
            case RuleKind::O: os << " =O> "; break;
            case RuleKind::U: os << " =U> "; break;
        }
        os << to_string(r.head) << ".\n";
    }
    for (auto [a, b] : t.superiority()) os << t.rules()[a].label << " > " << t.rules()[b].label << ".\n";
    return os.str();
}

std::string serialize_extension(const Extension& e, ExtensionFormat format, std::span<const Mode> modes) {
    if (format == ExtensionFormat::Json) {
        nlohmann::ordered_json doc;
        doc["modes"] = nlohmann::ordered_json::object();
        for (Mode m : modes) {
            auto& entry = doc["modes"][std::string(to_string(m))];
            entry["plus"] = sorted_names(e.proved(m));
            entry["minus"] = sorted_names(e.refuted(m));
            entry["undecided"] = sorted_names(e.undecided(m));
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    for (Mode m : modes) {
        os << "mode " << to_string(m) << '\n';
        os << "  plus:      " << join(sorted_names(e.proved(m))) << '\n';
        os << "  minus:     " << join(sorted_names(e.refuted(m))) << '\n';
        os << "  undecided: " << join(sorted_names(e.undecided(m))) << '\n';
    }
    return os.str();
}

}  // namespace mdl
