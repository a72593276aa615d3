#include "pocka/syntax.hpp"

#include <set>
#include <sstream>
#include <vector>

#include "pocka/error.hpp"

namespace pocka {

namespace {

enum class Tok { Ident, Number, Quoted, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }
bool value_char(char c) { return ident_char(c) || c == '-' || c == '.'; }

std::vector<Token> lex(std::string_view s) {
    static const std::vector<std::pair<std::string, std::string>> aliases = {
        {"\xC2\xB7", ";"},       {"\xE2\x88\xA5", "||"}, {"\xC2\xAC", "!"},    {"\xE2\x88\xA7", "&"},
        {"\xE2\x88\xA8", "\\/"}, {"\xE2\x86\x90", ":="}, {"\xE2\x8A\xA4", "top"}, {"\xE2\x8A\xA5", "bot"},
    };
    static const std::vector<std::string> symbols = {"||", "\\/", "/\\", "==", ":=", "(", ")", ";", "|", "+", "*",
                                                     "!",  "&",   "<",   ">",  "{",  "}", "[", "]", ":", ",", "="};
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        bool matched = false;
        for (const auto& [from, to] : aliases) {
            if (s.substr(i, from.size()) == from) {
                Tok k = (to == "top" || to == "bot") ? Tok::Ident : Tok::Sym;
                out.push_back({k, to, {i, i + from.size()}});
                i += from.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), {i, j}});
            i = j;
            continue;
        }
        if (digit(c) || (c == '-' && i + 1 < s.size() && digit(s[i + 1]))) {
            std::size_t j = i + 1;
            while (j < s.size() && value_char(s[j])) ++j;
            out.push_back({Tok::Number, std::string(s.substr(i, j - i)), {i, j}});
            i = j;
            continue;
        }
        if (c == '\'') {
            std::size_t j = s.find('\'', i + 1);
            if (j == std::string_view::npos) throw ParseError("unterminated quoted value", {i, s.size()});
            out.push_back({Tok::Quoted, std::string(s.substr(i + 1, j - i - 1)), {i, j + 1}});
            i = j + 1;
            continue;
        }
        for (const auto& sym : symbols) {
            if (s.substr(i, sym.size()) == sym) {
                out.push_back({Tok::Sym, sym, {i, i + sym.size()}});
                i += sym.size();
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", {i, i + 1});
    }
    out.push_back({Tok::End, "", {s.size(), s.size()}});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    const Token& peek() const { return toks_[pos_]; }
    bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool at_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
    bool at_end() const { return peek().kind == Tok::End; }
    const Token& next() { return toks_[pos_++]; }
    const Token& lookahead(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

    [[noreturn]] void fail(const std::set<std::string>& expected) const {
        std::string msg = "syntax error: expected ";
        bool first = true;
        for (const auto& e : expected) {
            msg += (first ? "" : ", ") + e;
            first = false;
        }
        const Token& t = peek();
        msg += t.kind == Tok::End ? ", found end of input" : ", found '" + t.text + "'";
        throw ParseError(msg, t.span);
    }

    void expect(const char* s) {
        if (!at_sym(s)) fail({std::string("'") + s + "'"});
        next();
    }

    void finish() {
        if (!at_end()) fail({"end of input"});
    }

    Var variable() {
        if (peek().kind != Tok::Ident) fail({"variable"});
        return next().text;
    }

    Val value() {
        const Token& t = peek();
        if (t.kind != Tok::Ident && t.kind != Tok::Number && t.kind != Tok::Quoted) fail({"value"});
        return next().text;
    }

    bool eq_sym() const { return at_sym("==") || at_sym("="); }

    Action action_after(Var v) {
        expect(":=");
        const Token& t = peek();
        if (t.kind == Tok::Ident) return Action::copy(std::move(v), next().text);
        if (t.kind == Tok::Number || t.kind == Tok::Quoted) return Action::assign(std::move(v), next().text);
        fail({"value", "variable"});
    }

    State state() {
        expect("{");
        std::vector<std::pair<Var, Val>> es;
        if (!at_sym("}")) {
            while (true) {
                Var v = variable();
                expect(":");
                es.emplace_back(std::move(v), value());
                if (at_sym(",")) {
                    next();
                    continue;
                }
                break;
            }
        }
        expect("}");
        return State(std::move(es));
    }

    // Observation grammar.
    ObsTerm obs_or() {
        ObsTerm a = obs_and();
        while (at_sym("\\/") || at_sym("|")) {
            next();
            a = ObsTerm::disj(a, obs_and());
        }
        return a;
    }
    ObsTerm obs_and() {
        ObsTerm a = obs_unary();
        while (at_sym("&") || at_sym("/\\")) {
            next();
            a = ObsTerm::conj(a, obs_unary());
        }
        return a;
    }
    ObsTerm obs_unary() {
        if (at_sym("!")) {
            next();
            return ObsTerm::negate(obs_unary());
        }
        if (at_sym("(")) {
            next();
            ObsTerm p = obs_or();
            expect(")");
            return p;
        }
        if (peek().kind == Tok::Ident) {
            if (lookahead(1).kind == Tok::Sym && (lookahead(1).text == "==" || lookahead(1).text == "=")) {
                Var v = next().text;
                next();
                return ObsTerm::test(std::move(v), value());
            }
            if (at_ident("top")) return next(), ObsTerm::top();
            if (at_ident("bot")) return next(), ObsTerm::bot();
        }
        fail({"'!'", "'('", "'top'", "'bot'", "test 'v == n'"});
    }

    // Term grammar.
    Term plus() {
        Term a = par();
        while (at_sym("+")) {
            next();
            a = Term::plus(a, par());
        }
        return a;
    }
    Term par() {
        Term a = seq();
        while (at_sym("||")) {
            next();
            a = Term::par(a, seq());
        }
        return a;
    }
    Term seq() {
        Term a = t_or();
        while (at_sym(";")) {
            next();
            a = Term::dot(a, t_or());
        }
        return a;
    }
    const ObsTerm& need_obs(const Term& t, SourceSpan span) const {
        if (t.kind() != Term::Kind::Obs)
            throw ParseError("observation operator applied to a term that is not an observation", span);
        return t.observation();
    }
    Term t_or() {
        SourceSpan s0 = peek().span;
        Term a = t_and();
        while (at_sym("\\/") || at_sym("|")) {
            SourceSpan op = next().span;
            SourceSpan s1 = peek().span;
            Term b = t_and();
            a = Term::obs(ObsTerm::disj(need_obs(a, s0), need_obs(b, s1)));
            (void)op;
        }
        return a;
    }
    Term t_and() {
        SourceSpan s0 = peek().span;
        Term a = t_unary();
        while (at_sym("&") || at_sym("/\\")) {
            next();
            SourceSpan s1 = peek().span;
            Term b = t_unary();
            a = Term::obs(ObsTerm::conj(need_obs(a, s0), need_obs(b, s1)));
        }
        return a;
    }
    Term t_unary() {
        if (at_sym("!")) {
            next();
            SourceSpan s = peek().span;
            Term a = t_unary();
            return Term::obs(ObsTerm::negate(need_obs(a, s)));
        }
        Term a = t_primary();
        while (at_sym("*")) {
            next();
            a = Term::star(a);
        }
        return a;
    }
    Term t_primary() {
        const Token& t = peek();
        if (t.kind == Tok::Sym && t.text == "(") {
            next();
            Term e = plus();
            expect(")");
            return e;
        }
        if (t.kind == Tok::Sym && t.text == "<") {
            next();
            State s = state();
            expect(">");
            return Term::state(std::move(s));
        }
        if (t.kind == Tok::Number && (t.text == "0" || t.text == "1")) {
            next();
            return t.text == "0" ? Term::zero() : Term::one();
        }
        if (t.kind == Tok::Ident) {
            const Token& op = lookahead(1);
            if (op.kind == Tok::Sym && op.text == ":=") {
                Var v = next().text;
                return Term::act(action_after(std::move(v)));
            }
            if (op.kind == Tok::Sym && (op.text == "==" || op.text == "=")) {
                Var v = next().text;
                next();
                return Term::obs(ObsTerm::test(std::move(v), value()));
            }
            if (t.text == "top") return next(), Term::obs(ObsTerm::top());
            if (t.text == "bot") return next(), Term::obs(ObsTerm::bot());
        }
        fail({"'0'", "'1'", "'('", "'<'", "'!'", "'top'", "'bot'", "assignment 'v := n'", "test 'v == n'"});
    }

    // Pomset grammar.
    Pomset p_par() {
        std::vector<Pomset> parts{p_seq()};
        while (at_sym("||")) {
            next();
            parts.push_back(p_seq());
        }
        return Pomset::par(std::move(parts));
    }
    Pomset p_seq() {
        std::vector<Pomset> parts{p_atom()};
        while (at_sym(";")) {
            next();
            parts.push_back(p_atom());
        }
        return Pomset::seq(std::move(parts));
    }
    Pomset p_atom() {
        if (at_ident("eps")) return next(), Pomset();
        if (at_sym("[")) {
            next();
            Var v = variable();
            Action a = action_after(std::move(v));
            expect("]");
            return Pomset::leaf(std::move(a));
        }
        if (at_sym("<")) {
            next();
            State s = state();
            expect(">");
            return Pomset::leaf(std::move(s));
        }
        if (at_sym("(")) {
            next();
            Pomset p = p_par();
            expect(")");
            return p;
        }
        fail({"'eps'", "'['", "'<'", "'('"});
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

bool bare_token(const std::string& n, bool allow_ident) {
    if (n.empty()) return false;
    try {
        auto toks = lex(n);
        if (toks.size() != 2) return false;
        return toks[0].kind == Tok::Number || (allow_ident && toks[0].kind == Tok::Ident);
    } catch (const ParseError&) {
        return false;
    }
}

std::string quoted(const std::string& n, bool allow_ident) { return bare_token(n, allow_ident) ? n : "'" + n + "'"; }

int obs_prec(const ObsTerm& p) {
    switch (p.kind()) {
    case ObsTerm::Kind::Or:
        return 4;
    case ObsTerm::Kind::And:
        return 5;
    case ObsTerm::Kind::Not:
    case ObsTerm::Kind::Test:
        return 6;
    default:
        return 7;
    }
}

std::string render_obs_at(const ObsTerm& p, int ctx) {
    std::string s;
    switch (p.kind()) {
    case ObsTerm::Kind::Bot:
        s = "bot";
        break;
    case ObsTerm::Kind::Top:
        s = "top";
        break;
    case ObsTerm::Kind::Test:
        s = p.var() + " == " + quoted(p.val(), true);
        break;
    case ObsTerm::Kind::Not:
        s = "!" + render_obs_at(p.lhs(), 6);
        break;
    case ObsTerm::Kind::And:
        s = render_obs_at(p.lhs(), 5) + " & " + render_obs_at(p.rhs(), 6);
        break;
    case ObsTerm::Kind::Or:
        s = render_obs_at(p.lhs(), 4) + " \\/ " + render_obs_at(p.rhs(), 5);
        break;
    }
    return obs_prec(p) < ctx ? "(" + s + ")" : s;
}

int term_prec(const Term& e) {
    switch (e.kind()) {
    case Term::Kind::Plus:
        return 1;
    case Term::Kind::Par:
        return 2;
    case Term::Kind::Dot:
        return 3;
    case Term::Kind::Obs:
        return obs_prec(e.observation());
    case Term::Kind::Act:
    case Term::Kind::Star:
        return 6;
    default:
        return 7;
    }
}

std::string render_term_at(const Term& e, int ctx) {
    std::string s;
    switch (e.kind()) {
    case Term::Kind::Zero:
        s = "0";
        break;
    case Term::Kind::One:
        s = "1";
        break;
    case Term::Kind::Act:
        s = render_action(e.action());
        break;
    case Term::Kind::Obs:
        s = render_obs_at(e.observation(), 0);
        break;
    case Term::Kind::State:
        s = "<" + render_state(e.state_label()) + ">";
        break;
    case Term::Kind::Plus:
        s = render_term_at(e.lhs(), 1) + " + " + render_term_at(e.rhs(), 2);
        break;
    case Term::Kind::Par:
        s = render_term_at(e.lhs(), 2) + " || " + render_term_at(e.rhs(), 3);
        break;
    case Term::Kind::Dot:
        s = render_term_at(e.lhs(), 3) + " ; " + render_term_at(e.rhs(), 4);
        break;
    case Term::Kind::Star:
        s = render_term_at(e.body(), 7) + "*";
        break;
    }
    return term_prec(e) < ctx ? "(" + s + ")" : s;
}

} // namespace

ObsTerm parse_obs(std::string_view text) {
    Parser p(text);
    ObsTerm o = p.obs_or();
    p.finish();
    return o;
}

Term parse_term(std::string_view text) {
    Parser p(text);
    Term e = p.plus();
    p.finish();
    return e;
}

Pomset parse_pomset(std::string_view text) {
    Parser p(text);
    Pomset u = p.p_par();
    p.finish();
    return u;
}

State parse_state(std::string_view text) {
    Parser p(text);
    bool angled = p.at_sym("<");
    if (angled) p.next();
    State s = p.state();
    if (angled) p.expect(">");
    p.finish();
    return s;
}

std::string render_value(const Val& n) { return quoted(n, true); }

std::string render_state(const State& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [v, n] : s.entries()) {
        out += (first ? "" : ",") + v + ":" + quoted(n, true);
        first = false;
    }
    return out + "}";
}

std::string render_action(const Action& a) {
    if (a.kind == Action::Kind::Copy) return a.target + " := " + a.source;
    return a.target + " := " + quoted(a.source, false);
}

std::string render_label(const Label& l) {
    if (is_state(l)) return "<" + render_state(as_state(l)) + ">";
    const Action& a = as_action(l);
    if (a.kind == Action::Kind::Copy) return "[" + a.target + ":=" + a.source + "]";
    return "[" + a.target + ":=" + quoted(a.source, false) + "]";
}

std::string render_obs(const ObsTerm& p) { return render_obs_at(p, 0); }

std::string render_term(const Term& e) { return render_term_at(e, 0); }

std::string render_pomset(const Pomset& p) {
    switch (p.kind()) {
    case Pomset::Kind::Empty:
        return "eps";
    case Pomset::Kind::Leaf:
        return render_label(p.label());
    case Pomset::Kind::Seq: {
        std::string out;
        for (const auto& c : p.children()) {
            if (!out.empty()) out += " ; ";
            out += c.kind() == Pomset::Kind::Par ? "(" + render_pomset(c) + ")" : render_pomset(c);
        }
        return out;
    }
    case Pomset::Kind::Par: {
        std::string out;
        for (const auto& c : p.children()) {
            if (!out.empty()) out += " || ";
            out += render_pomset(c);
        }
        return out;
    }
    }
    return "";
}

} // namespace pocka
