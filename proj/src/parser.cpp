#include "groundhog/parser.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "groundhog/errors.hpp"
#include "groundhog/printer.hpp"
#include "groundhog/safety.hpp"

namespace groundhog {

namespace {

enum class Tok {
    Ident, Variable, Integer, QuotedConst, Anonymous,
    ColonDash, Pipe, Comma, Dot, LParen, RParen,
    Eq, Neq, Lt, Gt, Leq, Geq,
    Plus, Minus, Star, Slash,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skipLayout();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            tok_.kind = Tok::Ident;
            tok_.text = takeWord();
            return;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            tok_.kind = Tok::Variable;
            tok_.text = takeWord();
            return;
        }
        if (c == '_') {
            std::string word = takeWord();
            if (word.size() == 1) {
                tok_.kind = Tok::Anonymous;
            } else {
                tok_.kind = Tok::Variable;  // "_" followed by more names a variable
                tok_.text = std::move(word);
            }
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lexInteger(false);
            return;
        }
        if (c == '"') {
            lexQuoted();
            return;
        }
        step();
        switch (c) {
            case ':':
                expect('-', "expected \":-\"");
                tok_.kind = Tok::ColonDash;
                return;
            case '|': tok_.kind = Tok::Pipe; return;
            case ',': tok_.kind = Tok::Comma; return;
            case '.': tok_.kind = Tok::Dot; return;
            case '(': tok_.kind = Tok::LParen; return;
            case ')': tok_.kind = Tok::RParen; return;
            case '=': tok_.kind = Tok::Eq; return;
            case '!':
                expect('=', "expected \"!=\"");
                tok_.kind = Tok::Neq;
                return;
            case '<':
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    step();
                    tok_.kind = Tok::Leq;
                } else {
                    tok_.kind = Tok::Lt;
                }
                return;
            case '>':
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    step();
                    tok_.kind = Tok::Geq;
                } else {
                    tok_.kind = Tok::Gt;
                }
                return;
            case '+': tok_.kind = Tok::Plus; return;
            case '-': tok_.kind = Tok::Minus; return;
            case '*': tok_.kind = Tok::Star; return;
            case '/': tok_.kind = Tok::Slash; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", tok_.line, tok_.col);
        }
    }

    void skipLayout() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
    }

    std::string takeWord() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                step();
            else
                break;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void lexInteger(bool negative) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) step();
        std::string digits(text_.substr(start, pos_ - start));
        if (negative) digits.insert(digits.begin(), '-');
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("integer literal out of range: " + digits, tok_.line, tok_.col);
        tok_.kind = Tok::Integer;
        tok_.value = v;
    }

    void lexQuoted() {
        step();  // opening quote
        std::string out;
        while (true) {
            if (pos_ >= text_.size())
                throw ParseError("unterminated quoted constant", tok_.line, tok_.col);
            char c = text_[pos_];
            step();
            if (c == '"') break;
            if (c == '\\') {
                if (pos_ >= text_.size())
                    throw ParseError("unterminated escape in quoted constant", tok_.line, tok_.col);
                char e = text_[pos_];
                step();
                if (e != '"' && e != '\\')
                    throw ParseError(std::string("unsupported escape '\\") + e + "'", tok_.line, tok_.col);
                out.push_back(e);
            } else {
                if (c == '\n') {
                    ++line_;
                    col_ = 1;
                }
                out.push_back(c);
            }
        }
        tok_.kind = Tok::QuotedConst;
        tok_.text = std::move(out);
    }

    void expect(char c, const char* msg) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(msg, line_, col_);
        step();
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lx_(text) {}

    Program parseProgramFile() {
        Program out;
        while (lx_.peek().kind != Tok::End) {
            Rule r = parseRule(static_cast<int>(out.rules.size()));
            if (r.isFactShaped()) throw FactInProgramError(printAtom(r.head[0]));
            makeSafetyPlan(r);  // rejects unsafe rules up front
            out.rules.push_back(std::move(r));
        }
        collectPredicates(out);
        return out;
    }

    FactSet parseFactFile() {
        FactSet out;
        while (lx_.peek().kind != Tok::End) {
            Token at = lx_.peek();
            Atom a = parseAtom(/*allowAnonymous=*/false);
            for (const auto& t : a.terms)
                if (t.kind == TermKind::Variable) throw NonGroundFactError(t.name, printAtom(a));
            consume(Tok::Dot, "expected '.' after fact");
            (void)at;
            out.insert(std::move(a));
        }
        return out;
    }

    std::vector<Rule> parseGroundRuleFile() {
        std::vector<Rule> out;
        while (lx_.peek().kind != Tok::End) {
            Token at = lx_.peek();
            Rule r = parseRule(static_cast<int>(out.size()));
            if (!r.builtins.empty())
                throw ParseError("builtins are not allowed in ground rule files", at.line, at.col);
            for (const Atom* a : ruleAtoms(r))
                for (const auto& t : a->terms)
                    if (t.kind == TermKind::Variable)
                        throw ParseError("ground rule file contains variable " + t.name, at.line, at.col);
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    static std::vector<const Atom*> ruleAtoms(const Rule& r) {
        std::vector<const Atom*> out;
        for (const auto& a : r.head) out.push_back(&a);
        for (const auto& a : r.posBody) out.push_back(&a);
        for (const auto& a : r.negBody) out.push_back(&a);
        return out;
    }

    Rule parseRule(int sourceId) {
        Rule r;
        r.sourceId = sourceId;
        anonCounter_ = 0;
        usedVarNames_.clear();
        pendingAnon_.clear();

        Token at = lx_.peek();
        if (at.kind == Tok::Dot)
            throw ParseError("empty rule", at.line, at.col);

        if (at.kind != Tok::ColonDash) {
            r.head.push_back(parseAtom(/*allowAnonymous=*/false));
            while (lx_.peek().kind == Tok::Pipe) {
                lx_.take();
                r.head.push_back(parseAtom(false));
            }
        }
        if (lx_.peek().kind == Tok::ColonDash) {
            lx_.take();
            parseBody(r);
        }
        consume(Tok::Dot, "expected '.' at end of rule");

        // Each "_" becomes a fresh variable not clashing with the rule's own.
        rememberRuleVars(r);
        for (auto& a : r.posBody) renameAnon(a);
        return r;
    }

    void parseBody(Rule& r) {
        while (true) {
            parseLiteral(r);
            if (lx_.peek().kind == Tok::Comma)
                lx_.take();
            else
                break;
        }
    }

    void parseLiteral(Rule& r) {
        const Token& t = lx_.peek();
        if (t.kind == Tok::Ident && t.text == "not") {
            lx_.take();
            r.negBody.push_back(parseAtom(false));
            return;
        }
        if (t.kind == Tok::Ident || t.kind == Tok::QuotedConst) {
            // Could be an atom or a builtin with a constant lhs; an atom
            // with an argument list is unambiguous.
            Token first = lx_.take();
            if (t.kind == Tok::Ident && lx_.peek().kind == Tok::LParen) {
                r.posBody.push_back(parseAtomTail(first));
                return;
            }
            if (isRelop(lx_.peek().kind)) {
                r.builtins.push_back(parseBuiltinTail(Term::constant(first.text)));
                return;
            }
            // Plain propositional atom.
            r.posBody.push_back(Atom{first.text, {}});
            return;
        }
        // Variables, integers, "-", and "_" can only start a builtin.
        Term lhs = parseTerm(/*allowAnonymous=*/false);
        if (!isRelop(lx_.peek().kind)) {
            const Token& bad = lx_.peek();
            throw ParseError("expected comparison operator after term", bad.line, bad.col);
        }
        r.builtins.push_back(parseBuiltinTail(std::move(lhs)));
    }

    BuiltinAtom parseBuiltinTail(Term lhs) {
        BuiltinAtom b;
        b.lhs = std::move(lhs);
        b.op = takeRelop();
        b.rhs.first = parseTerm(false);
        while (true) {
            ArithOp op;
            switch (lx_.peek().kind) {
                case Tok::Plus: op = ArithOp::Add; break;
                case Tok::Minus: op = ArithOp::Sub; break;
                case Tok::Star: op = ArithOp::Mul; break;
                case Tok::Slash: op = ArithOp::Div; break;
                default: return b;
            }
            lx_.take();
            b.rhs.rest.emplace_back(op, parseTerm(false));
        }
    }

    Atom parseAtom(bool allowAnonymous) {
        Token name = lx_.take();
        if (name.kind != Tok::Ident)
            throw ParseError("expected predicate name", name.line, name.col);
        if (name.text == "not")
            throw ParseError("\"not\" is reserved", name.line, name.col);
        return parseAtomTail(name, allowAnonymous);
    }

    Atom parseAtomTail(const Token& name, bool allowAnonymous = true) {
        Atom a;
        a.predicate = name.text;
        if (lx_.peek().kind == Tok::LParen) {
            lx_.take();
            while (true) {
                a.terms.push_back(parseTerm(allowAnonymous));
                if (lx_.peek().kind == Tok::Comma) {
                    lx_.take();
                    continue;
                }
                break;
            }
            consume(Tok::RParen, "expected ')'");
        }
        return a;
    }

    Term parseTerm(bool allowAnonymous) {
        Token t = lx_.take();
        switch (t.kind) {
            case Tok::Ident: return Term::constant(t.text);
            case Tok::QuotedConst: return Term::constant(t.text);
            case Tok::Variable: return Term::variable(t.text);
            case Tok::Integer: return Term::integer(t.value);
            case Tok::Minus: {
                Token n = lx_.take();
                if (n.kind != Tok::Integer)
                    throw ParseError("expected integer after '-'", n.line, n.col);
                return Term::integer(-n.value);
            }
            case Tok::Anonymous:
                if (!allowAnonymous)
                    throw ParseError("anonymous variable is only allowed in positive body atoms",
                                     t.line, t.col);
                return makeAnonPlaceholder();
            default:
                throw ParseError("expected term", t.line, t.col);
        }
    }

    // Placeholder names get replaced by fresh variables once the whole
    // rule is known (fresh names must avoid the rule's own variables).
    Term makeAnonPlaceholder() {
        std::string name = "\x01anon" + std::to_string(pendingAnon_.size());
        pendingAnon_.insert(name);
        return Term::variable(name);
    }

    void rememberRuleVars(const Rule& r) {
        for (const Atom* a : ruleAtoms(r))
            for (const auto& t : a->terms)
                if (t.kind == TermKind::Variable && !pendingAnon_.count(t.name))
                    usedVarNames_.insert(t.name);
        for (const auto& b : r.builtins) {
            if (b.lhs.kind == TermKind::Variable) usedVarNames_.insert(b.lhs.name);
            if (b.rhs.first.kind == TermKind::Variable) usedVarNames_.insert(b.rhs.first.name);
            for (const auto& [op, t] : b.rhs.rest)
                if (t.kind == TermKind::Variable) usedVarNames_.insert(t.name);
        }
    }

    void renameAnon(Atom& a) {
        for (auto& t : a.terms) {
            if (t.kind != TermKind::Variable || !pendingAnon_.count(t.name)) continue;
            std::string fresh;
            do {
                fresh = "_" + std::to_string(++anonCounter_);
            } while (usedVarNames_.count(fresh));
            usedVarNames_.insert(fresh);
            t.name = fresh;
        }
    }

    static bool isRelop(Tok k) {
        return k == Tok::Eq || k == Tok::Neq || k == Tok::Lt || k == Tok::Gt || k == Tok::Leq ||
               k == Tok::Geq;
    }

    Relop takeRelop() {
        Token t = lx_.take();
        switch (t.kind) {
            case Tok::Eq: return Relop::Eq;
            case Tok::Neq: return Relop::Neq;
            case Tok::Lt: return Relop::Lt;
            case Tok::Gt: return Relop::Gt;
            case Tok::Leq: return Relop::Leq;
            case Tok::Geq: return Relop::Geq;
            default: throw ParseError("expected comparison operator", t.line, t.col);
        }
    }

    void consume(Tok k, const char* msg) {
        Token t = lx_.take();
        if (t.kind != k) throw ParseError(msg, t.line, t.col);
    }

    static void collectPredicates(Program& p) {
        std::set<PredicateSig> sigs;
        for (const auto& r : p.rules) {
            for (const auto& a : r.head) sigs.insert({a.predicate, a.arity()});
            for (const auto& a : r.posBody) sigs.insert({a.predicate, a.arity()});
            for (const auto& a : r.negBody) sigs.insert({a.predicate, a.arity()});
        }
        p.predicates.assign(sigs.begin(), sigs.end());
    }

    Lexer lx_;
    int anonCounter_ = 0;
    std::set<std::string> usedVarNames_;
    std::set<std::string> pendingAnon_;
};

} // namespace

Program parseProgram(std::string_view text) { return Parser(text).parseProgramFile(); }

FactSet parseFacts(std::string_view text) { return Parser(text).parseFactFile(); }

std::vector<Rule> parseGroundRules(std::string_view text) {
    return Parser(text).parseGroundRuleFile();
}

} // namespace groundhog
