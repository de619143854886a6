#include "gfkit/parse.hpp"

#include <cctype>
#include <sstream>

namespace gfkit {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at " << line << ":" << col << ": " << msg;
        throw parse_error(os.str());
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) {
            if (s[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    void advance() { ++pos; ++col; }

    bool accept(char c) {
        if (peek() == c) { advance(); return true; }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            std::ostringstream os;
            os << "expected '" << c << "'";
            fail(os.str());
        }
    }

    Int integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            fail("expected an integer");
        std::string digits;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            digits += s[pos];
            advance();
        }
        return Int(digits);
    }

    std::string ident() {
        skip_ws();
        if (pos >= s.size() ||
            !(std::isalpha((unsigned char)s[pos]) || s[pos] == '_'))
            fail("expected a name");
        std::string name;
        while (pos < s.size() &&
               (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) {
            name += s[pos];
            advance();
        }
        return name;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& text) : lex(text) {}

    MPoly expr() {
        bool neg = false;
        if (lex.accept('-')) neg = true;
        else lex.accept('+');
        MPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (lex.accept('+')) acc += term();
            else if (lex.accept('-')) acc -= term();
            else return acc;
        }
    }

    MPoly term() {
        MPoly acc = factor();
        for (;;) {
            if (lex.accept('*')) {
                acc = acc * factor();
            } else if (lex.accept('/')) {
                MPoly d = factor();
                if (!d.is_constant() || d.is_zero())
                    lex.fail("'/' requires a nonzero constant divisor");
                acc = acc * (1 / d.as_constant());
            } else {
                return acc;
            }
        }
    }

    MPoly factor() {
        MPoly base = atom();
        while (lex.accept('^')) {
            bool neg = lex.accept('-');
            Int e = lex.integer();
            if (!e.fits_sint_p()) lex.fail("exponent out of range");
            int k = (int)e.get_si();
            base = base.pow(neg ? -k : k);
        }
        return base;
    }

    MPoly atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.advance();
            MPoly inner = expr();
            lex.expect(')');
            return inner;
        }
        if (std::isdigit((unsigned char)c))
            return MPoly(Rat(lex.integer()));
        std::string name = lex.ident();
        if (lex.peek() == '(') {
            lex.advance();
            std::string arg = lex.ident();
            lex.expect(')');
            name += "(" + arg + ")";
        }
        return MPoly::variable(var_id(name));
    }
};

} // namespace

MPoly parse_poly(const std::string& text) {
    Parser p(text);
    MPoly out = p.expr();
    if (!p.lex.eof()) p.lex.fail("trailing input");
    return out;
}

} // namespace gfkit
