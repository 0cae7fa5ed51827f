#include "ca/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ca {

namespace {

struct Lexer {
    const std::string& src;
    size_t i = 0;
    int line, col = 1;

    Lexer(const std::string& s, int line0) : src(s), line(line0) {}

    void skip_ws() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    }
    bool done() {
        skip_ws();
        return i >= src.size();
    }
    char peek() {
        skip_ws();
        return i < src.size() ? src[i] : '\0';
    }
    char take() {
        char c = peek();
        ++i;
        ++col;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }

    long integer() {
        skip_ws();
        if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i]))) fail("expected integer");
        long v = 0;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
            v = v * 10 + (src[i] - '0');
            if (v < 0) fail("integer overflow");
            ++i;
            ++col;
        }
        return v;
    }
    std::string name() {
        skip_ws();
        std::string s;
        while (i < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
            s += src[i];
            ++i;
            ++col;
        }
        if (s.empty()) fail("expected name");
        return s;
    }
};

struct ExprParser {
    Lexer lex;
    const std::vector<std::string>& names;
    const Field& field;
    const TermOrder& order;
    int nvars;

    ExprParser(const std::string& src, const std::vector<std::string>& nm, const Field& f,
               const TermOrder& o, int line0)
        : lex(src, line0), names(nm), field(f), order(o), nvars(static_cast<int>(nm.size())) {}

    Polynomial zero() { return Polynomial(nvars, field, order); }
    Polynomial constant(const Scalar& c) {
        return Polynomial::from_terms(nvars, field, order, {PolyTerm{c, Monomial(nvars)}});
    }

    Polynomial expr() {
        char c = lex.peek();
        bool neg = false;
        if (c == '+' || c == '-') {
            lex.take();
            neg = c == '-';
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            c = lex.peek();
            if (c != '+' && c != '-') break;
            lex.take();
            Polynomial t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex.peek() == '*') {
            lex.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex.peek() == '^') {
            lex.take();
            long e = lex.integer();
            Polynomial acc = constant(Scalar::one(field));
            for (long k = 0; k < e; ++k) acc = acc * b;
            return acc;
        }
        return b;
    }

    Polynomial base() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            Polynomial p = expr();
            if (lex.peek() != ')') lex.fail("expected ')'");
            lex.take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = lex.integer();
            if (lex.peek() == '/') {
                lex.take();
                long den = lex.integer();
                if (den == 0) lex.fail("zero denominator");
                if (field.kind == FieldKind::Rationals) return constant(Scalar::rational(num, den));
                return constant(Scalar::from_int(field, num) / Scalar::from_int(field, den));
            }
            return constant(Scalar::from_int(field, num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = lex.line, co = lex.col;
            std::string id = lex.name();
            auto it = std::find(names.begin(), names.end(), id);
            if (it == names.end()) throw ParseError(l, co, "unknown variable '" + id + "'");
            int v = static_cast<int>(it - names.begin());
            return Polynomial::from_terms(
                nvars, field, order,
                {PolyTerm{Scalar::one(field), Monomial::variable(nvars, v)}});
        }
        lex.fail(std::string("unexpected character '") + c + "'");
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Polynomial parse_polynomial(const std::string& src, const std::vector<std::string>& names,
                            const Field& field, const TermOrder& order, int line_offset) {
    ExprParser p(src, names, field, order, line_offset);
    Polynomial out = p.expr();
    if (!p.lex.done()) p.lex.fail("trailing input");
    return out;
}

Field parse_field_spec(const std::string& s) {
    if (s == "q" || s == "Q") return Field::rationals();
    if (s.rfind("fp:", 0) == 0) {
        long p = std::stol(s.substr(3));
        if (p < 2) throw Error("field spec: modulus must be at least 2");
        return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw Error("field spec must be 'q' or 'fp:P', got '" + s + "'");
}

TermOrder parse_order_spec(const std::string& s) {
    if (s == "revlex") return TermOrder::grevlex();
    if (s == "lex") return TermOrder::lex();
    if (s.rfind("elim:", 0) == 0) return TermOrder::elim(static_cast<int>(std::stol(s.substr(5))));
    if (s.rfind("weighted:", 0) == 0) {
        std::vector<int> w;
        std::string rest = s.substr(9);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            w.push_back(static_cast<int>(std::stol(rest.substr(pos, comma - pos))));
            pos = comma + 1;
        }
        if (w.empty()) throw Error("weighted order needs weights");
        return TermOrder::weighted(std::move(w));
    }
    throw Error("order spec must be revlex|lex|elim:K|weighted:..., got '" + s + "'");
}

std::string field_spec(const Field& f) {
    return f.kind == FieldKind::Rationals ? "q" : "fp:" + std::to_string(f.p);
}

std::string order_spec(const TermOrder& o) {
    switch (o.kind()) {
        case TermOrder::Kind::GrevLex:
            return "revlex";
        case TermOrder::Kind::Lex:
            return "lex";
        case TermOrder::Kind::Elim:
            return "elim:" + std::to_string(o.elim_block());
        case TermOrder::Kind::Weighted: {
            std::string s = "weighted:";
            for (size_t i = 0; i < o.weights().size(); ++i) {
                if (i) s += ',';
                s += std::to_string(o.weights()[i]);
            }
            return s;
        }
    }
    throw Error("unreachable");
}

namespace {

IdealPresentation parse_ideal_lines(const std::vector<std::string>& lines, size_t& li) {
    IdealPresentation I;
    bool saw_field = false, saw_vars = false;
    // Header directives.
    while (li < lines.size()) {
        std::string raw = strip_comment(lines[li]);
        if (blank(raw)) {
            ++li;
            continue;
        }
        auto words = split_ws(raw);
        int lineno = static_cast<int>(li) + 1;
        if (words[0] == "field") {
            if (words.size() != 2) throw ParseError(lineno, 1, "field directive takes one value");
            I.field = parse_field_spec(words[1]);
            saw_field = true;
        } else if (words[0] == "order") {
            if (words.size() != 2) throw ParseError(lineno, 1, "order directive takes one value");
            I.order = parse_order_spec(words[1]);
        } else if (words[0] == "vars") {
            I.names.assign(words.begin() + 1, words.end());
            if (I.names.empty()) throw ParseError(lineno, 1, "vars directive needs names");
            saw_vars = true;
        } else {
            break;
        }
        ++li;
    }
    if (!saw_field || !saw_vars)
        throw ParseError(static_cast<int>(li) + 1, 1, "header must declare field and vars");
    I.nvars = static_cast<int>(I.names.size());
    // Generator lines.
    while (li < lines.size()) {
        std::string raw = strip_comment(lines[li]);
        int lineno = static_cast<int>(li) + 1;
        if (blank(raw)) {
            ++li;
            continue;
        }
        if (split_ws(raw) == std::vector<std::string>{"---"}) {
            ++li;
            break;
        }
        Polynomial g = parse_polynomial(raw, I.names, I.field, I.order, lineno);
        if (g.is_zero()) throw ParseError(lineno, 1, "zero generator");
        I.gens.push_back(std::move(g));
        ++li;
    }
    return I;
}

std::vector<std::string> to_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

IdealPresentation parse_ideal(const std::string& text) {
    auto lines = to_lines(text);
    size_t li = 0;
    return parse_ideal_lines(lines, li);
}

std::vector<IdealPresentation> parse_ideal_blocks(const std::string& text) {
    auto lines = to_lines(text);
    size_t li = 0;
    std::vector<IdealPresentation> out;
    while (true) {
        out.push_back(parse_ideal_lines(lines, li));
        bool more = false;
        for (size_t j = li; j < lines.size(); ++j)
            if (!blank(strip_comment(lines[j]))) {
                more = true;
                break;
            }
        if (!more) break;
    }
    return out;
}

std::string print_ideal(const IdealPresentation& I) {
    std::string s;
    s += "field " + field_spec(I.field) + "\n";
    s += "order " + order_spec(I.order) + "\n";
    s += "vars";
    for (auto& n : I.names) s += " " + n;
    s += "\n";
    for (auto& g : I.gens) s += g.str(I.names) + "\n";
    return s;
}

ComplexFileData parse_complex(const std::string& text) {
    auto lines = to_lines(text);
    ComplexFileData c;
    bool saw_vertices = false;
    for (size_t li = 0; li < lines.size(); ++li) {
        std::string raw = strip_comment(lines[li]);
        int lineno = static_cast<int>(li) + 1;
        if (blank(raw)) continue;
        auto words = split_ws(raw);
        if (!saw_vertices) {
            if (words.size() != 2 || words[0] != "vertices")
                throw ParseError(lineno, 1, "expected 'vertices N'");
            c.vertices = std::stoi(words[1]);
            if (c.vertices < 0) throw ParseError(lineno, 1, "negative vertex count");
            saw_vertices = true;
            continue;
        }
        std::vector<int> f;
        for (auto& w : words) {
            int v;
            try {
                v = std::stoi(w);
            } catch (const std::exception&) {
                throw ParseError(lineno, 1, "facet entries must be integers");
            }
            if (v < 1 || v > c.vertices)
                throw ParseError(lineno, 1, "vertex " + w + " out of range");
            f.push_back(v);
        }
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        c.facets.push_back(std::move(f));
    }
    if (!saw_vertices) throw ParseError(1, 1, "missing 'vertices N' header");
    for (size_t i = 0; i < c.facets.size(); ++i)
        for (size_t j = 0; j < c.facets.size(); ++j) {
            if (i == j) continue;
            if (std::includes(c.facets[j].begin(), c.facets[j].end(), c.facets[i].begin(),
                              c.facets[i].end()))
                throw Error("facet list is not an antichain");
        }
    return c;
}

std::string print_complex(const ComplexFileData& c) {
    std::string s = "vertices " + std::to_string(c.vertices) + "\n";
    for (auto& f : c.facets) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(f[i]);
        }
        s += '\n';
    }
    return s;
}

}  // namespace ca
