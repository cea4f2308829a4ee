#include "lpa/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "lpa/lattice.hpp"

namespace lpa {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    long parse_int(const std::string& what) {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = advance() == '-';
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer " + what);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (advance() - '0');
            if (v > 1'000'000'000L) fail("integer literal out of range");
        }
        return neg ? -v : v;
    }
};

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : cur_{text} {}

    LaurentPoly parse() {
        LaurentPoly p = expr();
        cur_.skip_ws();
        if (cur_.peek() != '\0') cur_.fail("unexpected trailing input");
        return p;
    }

private:
    Cursor cur_;

    LaurentPoly expr() {
        bool neg = false;
        cur_.skip_ws();
        if (cur_.peek() == '-') {
            cur_.advance();
            neg = true;
        } else if (cur_.peek() == '+') {
            cur_.advance();
        }
        LaurentPoly p = term();
        if (neg) p = -p;
        for (;;) {
            cur_.skip_ws();
            char c = cur_.peek();
            if (c == '+' || c == '-') {
                cur_.advance();
                LaurentPoly t = term();
                p = c == '+' ? p + t : p - t;
            } else {
                return p;
            }
        }
    }

    LaurentPoly term() {
        LaurentPoly p = factor();
        while (cur_.accept('*')) p = p * factor();
        return p;
    }

    LaurentPoly factor() {
        LaurentPoly base = primary();
        cur_.skip_ws();
        if (cur_.peek() != '^') return base;
        cur_.advance();
        long e = cur_.parse_int("exponent");
        if (e >= 0) return pow(base, static_cast<int>(e));
        if (!base.is_unit()) cur_.fail("negative exponent requires a variable or unit base");
        LaurentPoly inv(base.leading_monomial().inverse(), base.leading_coefficient());
        return pow(inv, static_cast<int>(-e));
    }

    LaurentPoly primary() {
        cur_.skip_ws();
        char c = cur_.peek();
        if (c == '(') {
            cur_.advance();
            LaurentPoly p = expr();
            cur_.expect(')', "to close parenthesis");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return LaurentPoly(cur_.parse_int("literal"));
        }
        if (c == 'x') {
            cur_.advance();
            cur_.expect('[', "after variable name");
            VarKey v;
            v.idx = {0, 0, 0};
            int n = 0;
            do {
                if (n == 3) cur_.fail("variable index has more than 3 components");
                v.idx[static_cast<std::size_t>(n++)] = static_cast<int>(cur_.parse_int("index"));
            } while (cur_.accept(','));
            cur_.expect(']', "to close variable index");
            v.arity = n;
            while (cur_.accept('\'')) ++v.primes;
            return LaurentPoly(v);
        }
        cur_.fail("expected a literal, variable or parenthesized expression");
    }
};

void append_coeff(std::string& out, const Int& c, bool lead, bool with_monomial) {
    Int a = abs(c);
    if (lead) {
        if (c < 0) out += '-';
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (a != 1 || !with_monomial) {
        out += a.get_str();
        if (with_monomial) out += '*';
    }
}

}  // namespace

LaurentPoly parse_expr(const std::string& text) { return ExprParser(text).parse(); }

std::string print_var(const VarKey& v) {
    std::string s = "x[";
    for (int i = 0; i < v.arity; ++i) {
        if (i) s += ',';
        s += std::to_string(v.idx[i]);
    }
    s += ']';
    s.append(static_cast<std::size_t>(v.primes), '\'');
    return s;
}

std::string print_expr(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool lead = true;
    for (const auto& [m, c] : p.terms()) {
        append_coeff(out, c, lead, !m.is_identity());
        bool first = true;
        for (const auto& [v, e] : m.exponents()) {
            if (!first) out += '*';
            first = false;
            out += print_var(v);
            if (e != 1) out += '^' + std::to_string(e);
        }
        lead = false;
    }
    return out;
}

std::string pretty_expr(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool lead = true;
    for (const auto& [m, c] : p.terms()) {
        append_coeff(out, c, lead, !m.is_identity());
        bool first = true;
        for (const auto& [v, e] : m.exponents()) {
            if (!first) out += ' ';
            first = false;
            out += "x_" + std::to_string(v.idx[0]);
            if (v.arity > 1) {
                out += "^{";
                for (int i = 1; i < v.arity; ++i) {
                    if (i > 1) out += ',';
                    out += std::to_string(v.idx[i]);
                }
                out += '}';
            }
            if (e != 1) out += "^(" + std::to_string(e) + ")";
        }
        lead = false;
    }
    return out;
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream in(line);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

}  // namespace

Seed parse_seed_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    Seed seed;
    seed.arity = 0;
    std::string template_name;
    int radius = 3;
    int margin = 2;
    std::vector<std::size_t> entry_lines;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> words = split_words(line);
        if (words.empty()) continue;
        const std::string& key = words[0];
        auto int_arg = [&](const char* what) {
            if (words.size() != 2) throw ParseError(lineno, 1, std::string(what) + " needs one value");
            return std::stoi(words[1]);
        };
        if (key == "name") {
            continue;
        } else if (key == "arity") {
            seed.arity = int_arg("arity");
            if (seed.arity < 1 || seed.arity > 3) throw ParseError(lineno, 1, "arity must be 1..3");
        } else if (key == "template") {
            if (words.size() != 2) throw ParseError(lineno, 1, "template needs a name");
            template_name = words[1];
        } else if (key == "radius") {
            radius = int_arg("radius");
        } else if (key == "margin") {
            margin = int_arg("margin");
        } else if (key == "entry") {
            std::size_t eq = line.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, 1, "entry line needs '='");
            std::string head = line.substr(0, eq);
            std::string body = line.substr(eq + 1);
            std::vector<std::string> hw = split_words(head);
            if (hw.size() != 2) throw ParseError(lineno, 1, "entry line: expected 'entry <var> ='");
            bool frozen = false;
            if (std::size_t fz = body.rfind("frozen"); fz != std::string::npos) {
                frozen = true;
                body.erase(fz);
            }
            try {
                LaurentPoly var = parse_expr(hw[1]);
                if (!var.is_monomial() || var.leading_coefficient() != 1 ||
                    var.leading_monomial().exponents().size() != 1 ||
                    var.leading_monomial().exponents().begin()->second != 1) {
                    throw ParseError(1, 1, "entry name must be a plain variable");
                }
                seed.entries.push_back(
                    {var.leading_monomial().exponents().begin()->first, parse_expr(body), frozen});
                entry_lines.push_back(lineno);
            } catch (const ParseError& e) {
                throw ParseError(lineno, e.column, e.what());
            }
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + key + "'");
        }
    }

    if (!template_name.empty()) {
        if (!seed.entries.empty()) {
            throw ParseError(lineno, 1, "seed file mixes a template reference with entries");
        }
        SeedTemplate t = make_template(template_name);
        return instantiate(t, Window{radius, margin});
    }
    if (seed.entries.empty()) throw ParseError(lineno, 1, "seed file has no entries");
    if (seed.arity == 0) seed.arity = seed.entries.front().var.arity;

    ValidationReport rep = validate_seed(seed);
    if (!rep.ok()) {
        const ValidationIssue& issue = rep.issues.front();
        throw ParseError(entry_lines[std::min(issue.entry, entry_lines.size() - 1)], 1,
                         issue.check + ": " + issue.message);
    }
    return seed;
}

Seed load_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open seed file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_seed_text(buf.str());
}

std::string seed_to_text(const Seed& s, const std::string& name) {
    std::string out;
    if (!name.empty()) out += "name " + name + "\n";
    out += "arity " + std::to_string(s.arity) + "\n";
    for (const auto& e : s.entries) {
        out += "entry " + print_var(e.var) + " = " + print_expr(e.exch);
        if (e.frozen) out += "  frozen";
        out += '\n';
    }
    return out;
}

}  // namespace lpa
