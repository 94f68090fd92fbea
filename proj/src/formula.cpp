#include "cjs/formula.hpp"

#include <cctype>

namespace cjs {

TermPtr Term::zero() {
    static const TermPtr t = std::make_shared<Term>(Term{Kind::Zero, "", nullptr, nullptr});
    return t;
}
TermPtr Term::one() {
    static const TermPtr t = std::make_shared<Term>(Term{Kind::One, "", nullptr, nullptr});
    return t;
}
TermPtr Term::variable(std::string name) {
    return std::make_shared<Term>(Term{Kind::Var, std::move(name), nullptr, nullptr});
}
TermPtr Term::join(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Term{Kind::Join, "", std::move(l), std::move(r)});
}

FormulaPtr Formula::atom(TermPtr l, Rel r, TermPtr rr) {
    return std::make_shared<Formula>(
        Formula{Kind::Atom, std::move(l), std::move(rr), r, nullptr, nullptr});
}
FormulaPtr Formula::negation(FormulaPtr f) {
    return std::make_shared<Formula>(
        Formula{Kind::Not, nullptr, nullptr, Rel::Leq, std::move(f), nullptr});
}
static FormulaPtr binary(Formula::Kind k, FormulaPtr l, FormulaPtr r) {
    return std::make_shared<Formula>(
        Formula{k, nullptr, nullptr, Rel::Leq, std::move(l), std::move(r)});
}
FormulaPtr Formula::conjunction(FormulaPtr l, FormulaPtr r) {
    return binary(Kind::And, std::move(l), std::move(r));
}
FormulaPtr Formula::disjunction(FormulaPtr l, FormulaPtr r) {
    return binary(Kind::Or, std::move(l), std::move(r));
}
FormulaPtr Formula::implication(FormulaPtr l, FormulaPtr r) {
    return binary(Kind::Implies, std::move(l), std::move(r));
}
FormulaPtr Formula::equivalence(FormulaPtr l, FormulaPtr r) {
    return binary(Kind::Iff, std::move(l), std::move(r));
}

namespace {

struct Token {
    enum class Kind {
        Zero, One, Ident, Contact, Leq, Eq, Plus, LParen, RParen,
        Not, And, Or, Implies, Iff, End
    };
    Kind kind;
    std::string text;
    size_t offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) {
        size_t i = 0;
        const size_t n = text.size();
        while (i < n) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            const size_t at = i;
            const char c = text[i];
            auto push = [&](Token::Kind k, size_t len) {
                tokens_.push_back({k, text.substr(at, len), at});
                i += len;
            };
            if (c == '0') push(Token::Kind::Zero, 1);
            else if (c == '1') push(Token::Kind::One, 1);
            else if (c == '+') push(Token::Kind::Plus, 1);
            else if (c == '(') push(Token::Kind::LParen, 1);
            else if (c == ')') push(Token::Kind::RParen, 1);
            else if (c == '~') push(Token::Kind::Not, 1);
            else if (c == '&') push(Token::Kind::And, 1);
            else if (c == '|') push(Token::Kind::Or, 1);
            else if (c == '=') push(Token::Kind::Eq, 1);
            else if (c == '<') {
                if (i + 2 < n && text[i + 1] == '-' && text[i + 2] == '>')
                    push(Token::Kind::Iff, 3);
                else if (i + 1 < n && text[i + 1] == '=')
                    push(Token::Kind::Leq, 2);
                else
                    throw ParseError("unexpected character '<'", at);
            } else if (c == '-') {
                if (i + 1 < n && text[i + 1] == '>') push(Token::Kind::Implies, 2);
                else throw ParseError("unexpected character '-'", at);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t len = 1;
                while (i + len < n && (std::isalnum(static_cast<unsigned char>(text[i + len])) ||
                                       text[i + len] == '_'))
                    ++len;
                const std::string word = text.substr(i, len);
                if (word == "C") push(Token::Kind::Contact, 1);
                else push(Token::Kind::Ident, len);
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", at);
            }
        }
        tokens_.push_back({Token::Kind::End, "", n});
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    size_t mark() const { return pos_; }
    void reset(size_t m) { pos_ = m; }

private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {
        if (lex_.peek().kind == Token::Kind::End) throw ParseError("empty input", 0);
    }

    FormulaPtr parse() {
        FormulaPtr f = iff();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError("unexpected token '" + t.text + "'", t.offset);
        return f;
    }

private:
    FormulaPtr iff() {
        FormulaPtr f = imp();
        while (lex_.peek().kind == Token::Kind::Iff) {
            lex_.next();
            f = Formula::equivalence(f, imp());
        }
        return f;
    }
    FormulaPtr imp() {
        FormulaPtr f = disj();
        if (lex_.peek().kind == Token::Kind::Implies) {
            lex_.next();
            f = Formula::implication(f, imp());
        }
        return f;
    }
    FormulaPtr disj() {
        FormulaPtr f = conj();
        while (lex_.peek().kind == Token::Kind::Or) {
            lex_.next();
            f = Formula::disjunction(f, conj());
        }
        return f;
    }
    FormulaPtr conj() {
        FormulaPtr f = unary();
        while (lex_.peek().kind == Token::Kind::And) {
            lex_.next();
            f = Formula::conjunction(f, unary());
        }
        return f;
    }
    FormulaPtr unary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Not) {
            lex_.next();
            return Formula::negation(unary());
        }
        if (t.kind == Token::Kind::LParen) {
            // a "(" may open a parenthesized formula or a term of an atom;
            // try the atom reading first and backtrack
            const size_t m = lex_.mark();
            try {
                return atom();
            } catch (const ParseError&) {
                lex_.reset(m);
            }
            lex_.next();
            FormulaPtr f = iff();
            expect(Token::Kind::RParen, "')'");
            return f;
        }
        return atom();
    }
    FormulaPtr atom() {
        TermPtr l = term();
        const Token& t = lex_.peek();
        Rel rel;
        if (t.kind == Token::Kind::Leq) rel = Rel::Leq;
        else if (t.kind == Token::Kind::Contact) rel = Rel::Contact;
        else if (t.kind == Token::Kind::Eq) rel = Rel::Eq;
        else throw ParseError("expected '<=', 'C' or '=', got '" + t.text + "'", t.offset);
        lex_.next();
        return Formula::atom(std::move(l), rel, term());
    }
    TermPtr term() {
        TermPtr t = factor();
        while (lex_.peek().kind == Token::Kind::Plus) {
            lex_.next();
            t = Term::join(t, factor());
        }
        return t;
    }
    TermPtr factor() {
        const Token& t = lex_.next();
        switch (t.kind) {
            case Token::Kind::Zero: return Term::zero();
            case Token::Kind::One: return Term::one();
            case Token::Kind::Ident: return Term::variable(t.text);
            case Token::Kind::LParen: {
                TermPtr inner = term();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError("expected term, got '" +
                                     (t.kind == Token::Kind::End ? std::string("end of input")
                                                                 : t.text) +
                                     "'",
                                 t.offset);
        }
    }
    void expect(Token::Kind k, const std::string& what) {
        const Token& t = lex_.next();
        if (t.kind != k)
            throw ParseError("expected " + what + ", got '" +
                                 (t.kind == Token::Kind::End ? std::string("end of input")
                                                             : t.text) +
                                 "'",
                             t.offset);
    }

    Lexer lex_;
};

int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Or: return 3;
        case Formula::Kind::And: return 4;
        case Formula::Kind::Not: return 5;
        case Formula::Kind::Atom: return 6;
    }
    return 6;
}

void render_term(const TermPtr& t, std::string& out, bool parenthesize_join) {
    switch (t->kind) {
        case Term::Kind::Zero: out += "0"; break;
        case Term::Kind::One: out += "1"; break;
        case Term::Kind::Var: out += t->var; break;
        case Term::Kind::Join:
            if (parenthesize_join) out += "(";
            render_term(t->left, out, false);
            out += " + ";
            // + is left-assoc in the grammar, so a join on the right needs parens
            render_term(t->right, out, t->right->kind == Term::Kind::Join);
            if (parenthesize_join) out += ")";
            break;
    }
}

void render_formula(const FormulaPtr& f, std::string& out, int parent_prec) {
    const int prec = precedence(f->kind);
    const bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (f->kind) {
        case Formula::Kind::Atom:
            render_term(f->lhs, out, false);
            out += f->rel == Rel::Leq ? " <= " : f->rel == Rel::Contact ? " C " : " = ";
            render_term(f->rhs, out, false);
            break;
        case Formula::Kind::Not:
            out += "~";
            render_formula(f->left, out, prec);
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Iff:
            // left-assoc chains re-parse identically at equal precedence
            render_formula(f->left, out, prec);
            out += f->kind == Formula::Kind::And ? " & "
                   : f->kind == Formula::Kind::Or ? " | "
                                                  : " <-> ";
            render_formula(f->right, out, prec + 1);
            break;
        case Formula::Kind::Implies:
            render_formula(f->left, out, prec + 1);  // right-assoc
            out += " -> ";
            render_formula(f->right, out, prec);
            break;
    }
    if (parens) out += ")";
}

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
    switch (t->kind) {
        case Term::Kind::Var:
            for (const std::string& v : out)
                if (v == t->var) return;
            out.push_back(t->var);
            break;
        case Term::Kind::Join:
            collect_vars(t->left, out);
            collect_vars(t->right, out);
            break;
        default: break;
    }
}

void collect_vars(const FormulaPtr& f, std::vector<std::string>& out) {
    switch (f->kind) {
        case Formula::Kind::Atom:
            collect_vars(f->lhs, out);
            collect_vars(f->rhs, out);
            break;
        case Formula::Kind::Not: collect_vars(f->left, out); break;
        default:
            collect_vars(f->left, out);
            collect_vars(f->right, out);
            break;
    }
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return Parser(text).parse(); }

std::string render(const FormulaPtr& f) {
    std::string out;
    render_formula(f, out, 0);
    return out;
}

std::string render(const TermPtr& t) {
    std::string out;
    render_term(t, out, false);
    return out;
}

std::vector<std::string> variables(const FormulaPtr& f) {
    std::vector<std::string> out;
    collect_vars(f, out);
    return out;
}

int eval_term(const FiniteJoinStructure& s, const Valuation& v, const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Zero: return s.zero();
        case Term::Kind::One: return s.one();
        case Term::Kind::Var: {
            const auto it = v.find(t->var);
            return it == v.end() ? s.zero() : it->second;
        }
        case Term::Kind::Join: return s.join(eval_term(s, v, t->left), eval_term(s, v, t->right));
    }
    return s.zero();
}

bool eval_formula(const FiniteJoinStructure& s, const Valuation& v, const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Atom: {
            const int l = eval_term(s, v, f->lhs);
            const int r = eval_term(s, v, f->rhs);
            switch (f->rel) {
                case Rel::Leq: return s.leq(l, r);
                case Rel::Contact: return s.contact(l, r);
                case Rel::Eq: return s.leq(l, r) && s.leq(r, l);
            }
            return false;
        }
        case Formula::Kind::Not: return !eval_formula(s, v, f->left);
        case Formula::Kind::And:
            return eval_formula(s, v, f->left) && eval_formula(s, v, f->right);
        case Formula::Kind::Or:
            return eval_formula(s, v, f->left) || eval_formula(s, v, f->right);
        case Formula::Kind::Implies:
            return !eval_formula(s, v, f->left) || eval_formula(s, v, f->right);
        case Formula::Kind::Iff:
            return eval_formula(s, v, f->left) == eval_formula(s, v, f->right);
    }
    return false;
}

bool equal(const TermPtr& a, const TermPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::Var: return a->var == b->var;
        case Term::Kind::Join: return equal(a->left, b->left) && equal(a->right, b->right);
        default: return true;
    }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::Atom:
            return a->rel == b->rel && equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
        case Formula::Kind::Not: return equal(a->left, b->left);
        default: return equal(a->left, b->left) && equal(a->right, b->right);
    }
}

}  // namespace cjs
