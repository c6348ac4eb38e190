#include "linarr/errors.hpp"
#include "linarr/poly.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace linarr {

namespace {

// Parsing works on an inhomogeneous accumulator; homogeneity is checked
// once the whole expression is expanded.
struct Sparse {
    std::map<std::array<int, 3>, Rational> terms;

    static Sparse constant(const Rational& c) {
        Sparse s;
        if (c != 0) s.terms[{0, 0, 0}] = c;
        return s;
    }
    static Sparse variable(int v) {
        Sparse s;
        std::array<int, 3> e{0, 0, 0};
        e[v] = 1;
        s.terms[e] = 1;
        return s;
    }
    Sparse& operator+=(const Sparse& o) {
        for (const auto& [e, c] : o.terms) {
            Rational& slot = terms[e];
            slot += c;
            if (slot == 0) terms.erase(e);
        }
        return *this;
    }
    Sparse operator*(const Sparse& o) const {
        Sparse r;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                std::array<int, 3> e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
                Rational& slot = r.terms[e];
                slot += c1 * c2;
                if (slot == 0) r.terms.erase(e);
            }
        return r;
    }
    Sparse negated() const {
        Sparse r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    Sparse pow(int n) const {
        Sparse r = constant(1);
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }
};

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Sparse parse() {
        Sparse e = expression();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return e;
    }

    // Top-level multiplicative factors of the expression; nullopt when the
    // expression is a sum (more than one additive term) at depth 0.
    // Powers are expanded into repeated factors so that x^2 shows up as a
    // duplicate and gets rejected downstream as non-reduced.
    std::optional<std::vector<Sparse>> top_factors() {
        std::vector<Sparse> out;
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
        }
        if (!starts_primary(peek())) return std::nullopt;
        while (true) {
            char c = peek();
            if (c == '*') {
                get();
                continue;
            }
            if (!starts_primary(c)) break;
            Sparse base = primary();
            int n = 1;
            if (peek() == '^') {
                get();
                std::size_t at = pos_;
                n = integer_literal();
                if (n < 0) throw ParseError("negative exponent", at);
            }
            if (n == 0) out.push_back(Sparse::constant(Rational(1)));
            for (int i = 0; i < n; ++i) out.push_back(base);
        }
        skip_ws();
        if (pos_ != s_.size()) return std::nullopt; // a '+' or '-' follows: sum at top level
        if (neg) out.push_back(Sparse::constant(Rational(-1)));
        return out;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        return s_[pos_++];
    }

    bool starts_primary(char c) const {
        return c == '(' || c == 'x' || c == 'y' || c == 'z' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    Sparse expression() {
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
        }
        Sparse acc = term();
        if (neg) acc = acc.negated();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                Sparse t = term();
                acc += (c == '-') ? t.negated() : t;
            } else {
                break;
            }
        }
        return acc;
    }

    Sparse term() {
        Sparse acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                get();
                acc = acc * factor();
            } else if (starts_primary(c)) {
                acc = acc * factor(); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Sparse factor() {
        Sparse base = primary();
        if (peek() == '^') {
            get();
            std::size_t at = pos_;
            skip_ws();
            int n = integer_literal();
            if (n < 0) throw ParseError("negative exponent", at);
            base = base.pow(n);
        }
        return base;
    }

    int integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", start);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    Sparse primary() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            get();
            Sparse e = expression();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            get();
            return e;
        }
        if (c == 'x') { get(); return Sparse::variable(0); }
        if (c == 'y') { get(); return Sparse::variable(1); }
        if (c == 'z') { get(); return Sparse::variable(2); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = bigint_literal();
            // a '/' followed by digits is a rational literal; '/' is not an
            // operator anywhere else
            std::size_t save = pos_;
            if (peek() == '/') {
                get();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    BigInt den = bigint_literal();
                    if (den == 0) throw ParseError("zero denominator", save);
                    Rational q(num, den);
                    q.canonicalize();
                    return Sparse::constant(q);
                }
                throw ParseError("'/' is only allowed between integer literals", save);
            }
            return Sparse::constant(Rational(num));
        }
        if (c == '\0') throw ParseError("unexpected end of expression", at);
        throw ParseError("unexpected character '" + std::string(1, c) + "'", at);
    }

    BigInt bigint_literal() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_++];
        }
        return BigInt(digits);
    }
};

HomPoly to_homogeneous(const Sparse& s) {
    if (s.terms.empty()) return HomPoly(0);
    int deg = -1;
    for (const auto& [e, c] : s.terms) {
        const int d = e[0] + e[1] + e[2];
        if (deg < 0)
            deg = d;
        else if (d != deg)
            throw InhomogeneityError(deg, d);
    }
    HomPoly p(deg);
    for (const auto& [e, c] : s.terms) p.set_coeff(e[0], e[1], e[2], c);
    return p;
}

} // namespace

HomPoly parse_poly(const std::string& expr) {
    Parser parser(expr);
    return to_homogeneous(parser.parse());
}

std::optional<std::vector<LinearForm>> parse_linear_factors(const std::string& expr) {
    Parser parser(expr);
    std::optional<std::vector<Sparse>> factors = parser.top_factors();
    if (!factors) return std::nullopt;
    std::vector<LinearForm> lines;
    for (const Sparse& f : *factors) {
        HomPoly p = to_homogeneous(f); // throws InhomogeneityError on mixed factors
        if (p.is_zero()) return std::nullopt;
        if (p.degree() == 0) continue; // scalar factor
        if (p.degree() != 1) return std::nullopt; // non-linear piece
        lines.emplace_back(p.coeffs()[0], p.coeffs()[1], p.coeffs()[2]);
    }
    if (lines.empty()) return std::nullopt;
    return lines;
}

} // namespace linarr
