#include "kappa/render.hpp"

#include <sstream>

namespace kappa {

namespace {

bool coeff_needs_parens(const std::string& s) {
    // a leading sign is fine; interior +/- or a fraction needs wrapping
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '/' ) return true;
        if ((c == '+' || c == '-') && k > 0 && s[k - 1] != '(' && s[k-1] != '*') return true;
        if (c == ' ') return true;
    }
    return false;
}

} // namespace

std::string render_text_monomial(AlgebraTag tag, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    const int n = tag.n;
    for (const auto& f : m.lam) {
        if (!first) os << "*";
        os << "L[" << f.id / n << "," << f.id % n << "]";
        if (f.exp > 1) os << "^" << f.exp;
        first = false;
    }
    const char* coord = tag.kind == AlgebraKind::Minkowski ? "y" : "x";
    for (const auto& f : m.xs) {
        if (!first) os << "*";
        os << coord << "[" << f.id << "]";
        if (f.exp > 1) os << "^" << f.exp;
        first = false;
    }
    return os.str();
}

std::string render_text(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && !coeff_needs_parens(cs.substr(1));
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        std::string body = neg ? cs.substr(1) : cs;
        if (coeff_needs_parens(body)) body = "(" + body + ")";
        if (m.is_unit()) {
            os << body;
        } else if (body == "1") {
            os << render_text_monomial(e.tag(), m);
        } else {
            os << body << "*" << render_text_monomial(e.tag(), m);
        }
        first = false;
    }
    return os.str();
}

std::string render_text(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        if (!first) os << " + ";
        std::string cs = c.str();
        if (coeff_needs_parens(cs) || (cs.size() && cs[0] == '-')) cs = "(" + cs + ")";
        if (cs != "1") os << cs << "*";
        for (std::size_t l = 0; l < key.size(); ++l) {
            if (l) os << " (x) ";
            os << render_text_monomial(t.tags()[l], key[l]);
        }
        first = false;
    }
    return os.str();
}

std::string render_latex_monomial(AlgebraTag tag, const Monomial& m) {
    if (m.is_unit()) return "I";
    std::ostringstream os;
    const int n = tag.n;
    bool first = true;
    for (const auto& f : m.lam) {
        if (!first) os << " ";
        if (f.exp > 1) os << "(";
        os << "\\Lambda^{" << f.id / n << "}{}_{" << f.id % n << "}";
        if (f.exp > 1) os << ")^{" << f.exp << "}";
        first = false;
    }
    const char* coord = tag.kind == AlgebraKind::Minkowski ? "y" : "x";
    for (const auto& f : m.xs) {
        if (!first) os << " ";
        if (f.exp > 1) os << "(";
        os << coord << "^{" << f.id << "}";
        if (f.exp > 1) os << ")^{" << f.exp << "}";
        first = false;
    }
    return os.str();
}

std::string render_latex(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        std::string cs = c.latex();
        bool neg = cs.size() > 1 && cs[0] == '-';
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        std::string body = neg ? cs.substr(1) : cs;
        bool composite = body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos;
        if (composite) body = "\\left(" + body + "\\right)";
        if (m.is_unit()) {
            os << body;
        } else if (body == "1") {
            os << render_latex_monomial(e.tag(), m);
        } else {
            os << body << " \\, " << render_latex_monomial(e.tag(), m);
        }
        first = false;
    }
    return os.str();
}

namespace {

// Minimal reader for the LaTeX this project emits.
struct LatexReader {
    const std::string& s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool consume(const std::string& tok) {
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (!eof() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    std::string braced() {
        // assumes '{' at pos; returns inner content, handles nesting
        int depth = 0;
        std::size_t start = pos + 1;
        for (std::size_t k = pos; k < s.size(); ++k) {
            if (s[k] == '{') ++depth;
            if (s[k] == '}') {
                --depth;
                if (depth == 0) {
                    std::string inner = s.substr(start, k - start);
                    pos = k + 1;
                    return inner;
                }
            }
        }
        throw Error("unbalanced braces in latex");
    }
};

std::string latex_tokens_to_text(LatexReader& r);

std::string latex_fragment_to_text(const std::string& fragment) {
    LatexReader r{fragment};
    return latex_tokens_to_text(r);
}

std::string latex_tokens_to_text(LatexReader& r) {
    std::ostringstream os;
    bool prev_atom = false;
    auto emit_mul = [&]() {
        if (prev_atom) os << "*";
        prev_atom = true;
    };
    while (!r.eof()) {
        r.skip_ws();
        if (r.eof()) break;
        char c = r.peek();
        if (c == '+' || c == '-') {
            os << c;
            ++r.pos;
            prev_atom = false;
            continue;
        }
        if (r.consume("\\left(") || r.consume("(")) {
            emit_mul();
            os << "(";
            prev_atom = false;
            continue;
        }
        if (r.consume("\\right)") || r.consume(")")) {
            os << ")";
            prev_atom = true;
            continue;
        }
        if (r.consume("\\,") || r.consume("\\;")) continue;
        if (r.consume("\\frac")) {
            emit_mul();
            std::string num = r.braced();
            std::string den = r.braced();
            os << "(" << latex_fragment_to_text(num) << ")/(" << latex_fragment_to_text(den) << ")";
            continue;
        }
        if (r.consume("\\kappa")) {
            // kappa = 1/q, so kappa^{k} reads back as (1/q^k)
            int e = 1;
            r.skip_ws();
            if (!r.eof() && r.peek() == '^') {
                ++r.pos;
                std::string exp = r.braced();
                e = std::stoi(exp);
            }
            emit_mul();
            os << "(1/q" << (e != 1 ? "^" + std::to_string(e) : "") << ")";
            continue;
        }
        if (r.consume("\\Lambda")) {
            // \Lambda^{m}{}_{n}
            if (!r.consume("^")) throw Error("malformed Lambda in latex");
            std::string up = r.braced();
            r.consume("{}");
            if (!r.consume("_")) throw Error("malformed Lambda in latex");
            std::string lo = r.braced();
            emit_mul();
            os << "L[" << up << "," << lo << "]";
            continue;
        }
        if (c == 'x' || c == 'y') {
            ++r.pos;
            if (!r.consume("^")) throw Error("malformed coordinate in latex");
            std::string up = r.braced();
            emit_mul();
            os << c << "[" << up << "]";
            continue;
        }
        if (c == 'I') {
            ++r.pos;
            emit_mul();
            os << "1";
            continue;
        }
        if (c == 'i') {
            ++r.pos;
            emit_mul();
            os << "i";
            continue;
        }
        if (c == '^') {
            ++r.pos;
            std::string exp = r.braced();
            os << "^" << exp;
            prev_atom = true;
            continue;
        }
        if (c >= '0' && c <= '9') {
            emit_mul();
            while (!r.eof() && r.peek() >= '0' && r.peek() <= '9') {
                os << r.peek();
                ++r.pos;
            }
            continue;
        }
        throw Error(std::string("unexpected latex character: ") + c);
    }
    return os.str();
}

} // namespace

std::string latex_to_text(const std::string& latex) {
    LatexReader r{latex};
    return latex_tokens_to_text(r);
}

} // namespace kappa
