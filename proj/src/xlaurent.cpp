#include "gkgrowth/xlaurent.hpp"

#include <cctype>
#include <sstream>

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

XLaurent XLaurent::term(QRat c, int k) {
    XLaurent r;
    r.set(k, std::move(c));
    return r;
}

void XLaurent::set(int k, QRat c) {
    if (c.is_zero())
        t_.erase(k);
    else
        t_[k] = std::move(c);
}

QRat XLaurent::coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? QRat(0) : it->second;
}

int XLaurent::leading_exponent() const {
    if (t_.empty()) throw std::logic_error("XLaurent::leading_exponent on zero");
    return t_.rbegin()->first;
}

QRat XLaurent::leading_coeff() const {
    if (t_.empty()) throw std::logic_error("XLaurent::leading_coeff on zero");
    return t_.rbegin()->second;
}

XLaurent XLaurent::operator-() const {
    XLaurent r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

XLaurent& XLaurent::operator+=(const XLaurent& o) {
    for (const auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

XLaurent& XLaurent::operator-=(const XLaurent& o) { return *this += -o; }

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
    XLaurent r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) {
            auto it = r.t_.find(ka + kb);
            if (it == r.t_.end()) {
                r.t_.emplace(ka + kb, ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    for (auto it = r.t_.begin(); it != r.t_.end();) {
        if (it->second.is_zero())
            it = r.t_.erase(it);
        else
            ++it;
    }
    return r;
}

XLaurent XLaurent::scaled(const QRat& c) const {
    XLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.set(k, v * c);
    return r;
}

XLaurent XLaurent::shifted(int dk) const {
    XLaurent r;
    for (const auto& [k, v] : t_) r.t_.emplace(k + dk, v);
    return r;
}

XLaurent XLaurent::pow(int k) const {
    if (k < 0) {
        if (t_.size() != 1)
            throw Error("XLaurent::pow: negative power of a non-monomial");
        const auto& [e, c] = *t_.begin();
        return term(c.inverse(), -e).pow(-k);
    }
    XLaurent acc(QRat(1));
    XLaurent base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool XLaurent::is_integral() const {
    for (const auto& [k, c] : t_) {
        if (k < 0) return false;
        if (!c.is_polynomial()) return false;
    }
    return true;
}

Int XLaurent::eval_dim(const Int& q0, int N) const {
    if (q0 < 2) throw Error("eval_dim: q0 must be >= 2");
    if (N < 1) throw Error("eval_dim: N must be >= 1");
    mpq_class total = 0;
    for (const auto& [k, c] : t_) {
        mpq_class v = c.eval(q0);
        long e = static_cast<long>(k) * (N - 1);
        Int p;
        mpz_pow_ui(p.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (e >= 0)
            v *= p;
        else
            v /= p;
        total += v;
    }
    total.canonicalize();
    if (total.get_den() != 1)
        throw NonIntegralEvaluation("eval_dim: value " + total.get_str() +
                                    " is not an integer at q0 = " + q0.get_str() +
                                    ", N = " + std::to_string(N));
    return total.get_num();
}

XLaurent XLaurent::substitute_coeff_power(int m) const {
    XLaurent r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, c.substitute_power(m));
    return r;
}

XLaurent XLaurent::compress_coeff_power(int m) const {
    XLaurent r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, c.compress_power(m));
    return r;
}

namespace {

bool is_single_monomial(const QPoly& p) {
    int nonzero = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++nonzero;
    return nonzero == 1;
}

// Coefficient factor as it appears in front of "*X^k".
std::string coeff_factor(const QRat& c, const std::string& var) {
    if (c.is_polynomial() && is_single_monomial(c.num())) return c.num().str(var);
    return "(" + c.str(var) + ")";
}

std::string x_power(int k) {
    if (k == 1) return "X";
    return "X^" + std::to_string(k);
}

}  // namespace

std::string XLaurent::str(const std::string& var) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        int k = it->first;
        QRat c = it->second;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0) {
            if (c.is_polynomial() && !is_single_monomial(c.num()))
                os << "(" << c.str(var) << ")";
            else
                os << c.str(var);
        } else if (c.is_one()) {
            os << x_power(k);
        } else {
            os << coeff_factor(c, var) << "*" << x_power(k);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser: +,-,*,/,^ expressions over integers, the coefficient variable,
// and X. '/' requires a single-term divisor.

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        char c = peek();
        if (pos < s.size()) ++pos;
        return c;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lex;
    std::string var;

    Parser(const std::string& text, std::string v) : lex(text), var(std::move(v)) {}

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("polynomial parse error at position " + std::to_string(lex.pos) + ": " +
                         msg);
    }

    long parse_int() {
        bool neg = lex.eat('-');
        if (!std::isdigit(static_cast<unsigned char>(lex.peek()))) fail("expected integer");
        long v = 0;
        while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
            v = v * 10 + (lex.s[lex.pos] - '0');
            ++lex.pos;
        }
        return neg ? -v : v;
    }

    XLaurent parse_atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            XLaurent e = parse_expr();
            if (!lex.eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v = 0;
            while (lex.pos < lex.s.size() &&
                   std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
                v = v * 10 + (lex.s[lex.pos] - '0');
                ++lex.pos;
            }
            return XLaurent(QRat(v));
        }
        if (c == 'X') {
            lex.get();
            return XLaurent::x();
        }
        if (!var.empty() && lex.s.compare(lex.pos, var.size(), var) == 0) {
            lex.pos += var.size();
            return XLaurent(QRat(QPoly::var()));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    XLaurent parse_power() {
        XLaurent base = parse_atom();
        if (lex.eat('^')) {
            long e = parse_int();
            if (e < -1000000 || e > 1000000) fail("exponent out of range");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    XLaurent parse_unary() {
        if (lex.eat('-')) return -parse_unary();
        if (lex.eat('+')) return parse_unary();
        return parse_power();
    }

    XLaurent divide(const XLaurent& a, const XLaurent& b) {
        if (b.is_zero()) fail("division by zero");
        if (b.terms().size() != 1) fail("divisor must be a single term");
        const auto& [k, c] = *b.terms().begin();
        return a.scaled(c.inverse()).shifted(-k);
    }

    XLaurent parse_term() {
        XLaurent acc = parse_unary();
        for (;;) {
            if (lex.eat('*'))
                acc *= parse_unary();
            else if (lex.eat('/'))
                acc = divide(acc, parse_unary());
            else
                return acc;
        }
    }

    XLaurent parse_expr() {
        XLaurent acc = parse_term();
        for (;;) {
            if (lex.eat('+'))
                acc += parse_term();
            else if (lex.eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    XLaurent run() {
        XLaurent e = parse_expr();
        if (lex.peek() != '\0') fail("trailing input");
        return e;
    }
};

}  // namespace

XLaurent XLaurent::parse(const std::string& text, const std::string& var) {
    return Parser(text, var).run();
}

}  // namespace gkgrowth
