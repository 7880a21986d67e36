#include "parser.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace mroot {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line;

    explicit Cursor(const std::string& str, int ln) : s(str), line(ln) {}

    int col() const { return static_cast<int>(pos) + 1; }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    char get() { return eof() ? '\0' : s[pos++]; }
    void skip_ws() {
        while (!eof() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col()); }
};

bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

double scan_real(Cursor& c) {
    size_t start = c.pos;
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) c.get();
    if (c.peek() == '.') {
        c.get();
        while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) c.get();
    }
    if (c.pos == start) c.fail("expected number");
    if (c.peek() == 'e' || c.peek() == 'E') {
        size_t mark = c.pos;
        c.get();
        if (c.peek() == '+' || c.peek() == '-') c.get();
        if (!std::isdigit(static_cast<unsigned char>(c.peek()))) {
            c.pos = mark;  // 'e' belongs to an identifier, not this literal
        } else {
            while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) c.get();
        }
    }
    try {
        return std::stod(c.s.substr(start, c.pos - start));
    } catch (const std::exception&) {
        c.fail("malformed coefficient");
    }
}

// number with optional 'i' suffix
cd scan_literal(Cursor& c) {
    double v = scan_real(c);
    if (c.peek() == 'i') {
        c.get();
        return cd(0.0, v);
    }
    return cd(v, 0.0);
}

std::string scan_ident(Cursor& c) {
    size_t start = c.pos;
    if (!std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != '_')
        c.fail("expected identifier");
    while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
        c.get();
    return c.s.substr(start, c.pos - start);
}

// '(' a (+|-) b i ')'  or '(' literal ')'
cd scan_paren_complex(Cursor& c) {
    c.get();  // '('
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') neg = (c.get() == '-');
    cd first = scan_literal(c);
    if (neg) first = -first;
    c.skip_ws();
    cd value = first;
    if (c.peek() == '+' || c.peek() == '-') {
        bool neg2 = (c.get() == '-');
        c.skip_ws();
        double b = scan_real(c);
        c.skip_ws();
        if (c.peek() != 'i') c.fail("expected 'i' in complex literal");
        c.get();
        value += cd(0.0, neg2 ? -b : b);
    }
    c.skip_ws();
    if (c.peek() != ')') c.fail("expected ')'");
    c.get();
    return value;
}

struct ExprParser {
    Cursor& c;
    const std::vector<std::string>& vars;
    int n;

    Poly parse_expr() {
        c.skip_ws();
        bool neg = false;
        if (c.peek() == '+' || c.peek() == '-') neg = (c.get() == '-');
        Poly acc = parse_term();
        if (neg) acc = acc * cd(-1.0);
        c.skip_ws();
        while (c.peek() == '+' || c.peek() == '-') {
            bool sub = (c.get() == '-');
            Poly t = parse_term();
            acc = sub ? acc - t : acc + t;
            c.skip_ws();
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        c.skip_ws();
        while (c.peek() == '*' || c.peek() == '/') {
            char op = c.get();
            c.skip_ws();
            if (op == '*') {
                acc = mul(acc, parse_factor());
            } else {
                if (!starts_number(c.peek())) c.fail("expected numeric divisor");
                double d = scan_real(c);
                if (d == 0.0) c.fail("division by zero");
                acc = acc * cd(1.0 / d);
            }
            c.skip_ws();
        }
        return acc;
    }

    Poly parse_factor() {
        c.skip_ws();
        if (c.peek() == '(') return Poly::constant(n, scan_paren_complex(c));
        if (starts_number(c.peek())) return Poly::constant(n, scan_literal(c));
        if (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_') {
            int col0 = c.col();
            std::string id = scan_ident(c);
            int j = -1;
            for (size_t k = 0; k < vars.size(); ++k)
                if (vars[k] == id) j = static_cast<int>(k);
            if (j < 0) throw ParseError("unknown variable '" + id + "'", c.line, col0);
            int e = 1;
            if (c.peek() == '^') {
                c.get();
                if (!std::isdigit(static_cast<unsigned char>(c.peek())))
                    c.fail("expected positive integer exponent");
                e = 0;
                while (std::isdigit(static_cast<unsigned char>(c.peek())))
                    e = e * 10 + (c.get() - '0');
                if (e <= 0) c.fail("expected positive integer exponent");
            }
            Poly p(n);
            Mono m(n, 0);
            m[j] = e;
            p.set(m, cd(1.0));
            return p;
        }
        c.fail("expected number, variable, or '('");
    }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    lines.push_back(cur);
    return lines;
}

bool blank(const std::string& s) {
    for (char ch : s)
        if (ch != ' ' && ch != '\t') return false;
    return true;
}

}  // namespace

PolySystem parse_system(const std::string& text) {
    auto lines = split_lines(text);
    size_t li = 0;
    while (li < lines.size() && blank(lines[li])) ++li;
    if (li == lines.size()) throw ParseError("empty input", 1, 1);

    Cursor head(lines[li], static_cast<int>(li) + 1);
    head.skip_ws();
    std::string kw = scan_ident(head);
    if (kw != "vars") head.fail("expected 'vars:' header");
    head.skip_ws();
    if (head.peek() != ':') head.fail("expected ':' after 'vars'");
    head.get();

    PolySystem sys;
    head.skip_ws();
    while (!head.eof()) {
        sys.vars.push_back(scan_ident(head));
        head.skip_ws();
    }
    if (sys.vars.empty()) head.fail("no variables declared");
    sys.n = static_cast<int>(sys.vars.size());

    for (++li; li < lines.size(); ++li) {
        if (blank(lines[li])) continue;
        Cursor c(lines[li], static_cast<int>(li) + 1);
        c.skip_ws();
        std::string name = scan_ident(c);
        c.skip_ws();
        if (c.peek() != '=') c.fail("expected '=' after equation name");
        c.get();
        ExprParser ep{c, sys.vars, sys.n};
        Poly p = ep.parse_expr();
        c.skip_ws();
        if (!c.eof()) c.fail("unexpected trailing input");
        sys.names.push_back(name);
        sys.polys.push_back(std::move(p));
    }
    if (sys.polys.empty())
        throw ParseError("no equations", static_cast<int>(lines.size()), 1);
    return sys;
}

namespace {

// a, bi, a+bi, a-bi with no interior whitespace
cd parse_cplx_token(const std::string& tok, int line, int col) {
    Cursor c(tok, line);
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') neg = (c.get() == '-');
    if (!starts_number(c.peek())) throw ParseError("malformed complex entry '" + tok + "'", line, col);
    cd v = scan_literal(c);
    if (neg) v = -v;
    if (c.peek() == '+' || c.peek() == '-') {
        bool neg2 = (c.get() == '-');
        if (!starts_number(c.peek()))
            throw ParseError("malformed complex entry '" + tok + "'", line, col);
        double b = scan_real(c);
        if (c.peek() != 'i') throw ParseError("expected 'i' in '" + tok + "'", line, col);
        c.get();
        v += cd(0.0, neg2 ? -b : b);
    }
    c.skip_ws();
    if (!c.eof()) throw ParseError("trailing characters in '" + tok + "'", line, col);
    return v;
}

}  // namespace

Eigen::MatrixXcd parse_matrix(const std::string& text) {
    auto lines = split_lines(text);
    std::vector<std::vector<cd>> rows;
    for (size_t li = 0; li < lines.size(); ++li) {
        if (blank(lines[li])) continue;
        std::istringstream iss(lines[li]);
        std::vector<cd> row;
        std::string tok;
        while (iss >> tok) row.push_back(parse_cplx_token(tok, static_cast<int>(li) + 1, 1));
        if (!rows.empty() && row.size() != rows[0].size())
            throw ParseError("ragged matrix row", static_cast<int>(li) + 1, 1);
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows[0].empty()) throw ParseError("empty matrix", 1, 1);
    Eigen::MatrixXcd M(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[0].size(); ++j) M(i, j) = rows[i][j];
    return M;
}

std::vector<cd> parse_point(const std::string& text) {
    std::vector<cd> out;
    std::string cur;
    auto flush = [&](int col) {
        if (blank(cur)) throw ParseError("empty point component", 1, col);
        out.push_back(parse_cplx_token(cur, 1, col));
        cur.clear();
    };
    int col = 1;
    for (char ch : text) {
        if (ch == ',')
            flush(col);
        else if (ch != ' ' && ch != '\t')
            cur.push_back(ch);
        ++col;
    }
    flush(col);
    return out;
}

}  // namespace mroot
