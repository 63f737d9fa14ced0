#include <cctype>
#include <sstream>

#include "polynomial.hpp"

namespace shiftlab {

VarNames::VarNames(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || static_cast<int>(names_.size()) > Monomial::kMaxVars)
        throw ParseError("expected between 1 and " + std::to_string(Monomial::kMaxVars) + " variables");
    single_letters_ = true;
    for (const auto& nm : names_) {
        if (nm.empty()) throw ParseError("empty variable name");
        for (char ch : nm)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw ParseError("invalid character in variable name '" + nm + "'");
        if (!std::isalpha(static_cast<unsigned char>(nm[0])))
            throw ParseError("variable name must start with a letter: '" + nm + "'");
        if (nm.size() > 1) single_letters_ = false;
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw ParseError("duplicate variable name '" + names_[i] + "'");
}

VarNames VarNames::letters(int n) {
    if (n > 26) return indexed(n);
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
    return VarNames(v);
}

VarNames VarNames::indexed(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("y" + std::to_string(i));
    return VarNames(v);
}

int VarNames::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i) + 1;
    return 0;
}

std::string print_monomial(const Monomial& m, const VarNames& names) {
    if (m.n() != names.n()) throw ContractError("variable naming does not match monomial");
    if (m.is_one()) return "1";
    std::string out;
    for (int i = m.n(); i >= 1; --i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty() && !names.single_letters()) out += "*";
        out += names.name(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string print_sqf(const SqfMonomial& m, const VarNames& names) {
    if (m.support.empty()) return "1";
    std::string out;
    for (auto it = m.support.rbegin(); it != m.support.rend(); ++it) {
        if (*it < 1 || *it > names.n()) throw ContractError("squarefree monomial index out of naming range");
        if (!out.empty() && !names.single_letters()) out += "*";
        out += names.name(*it);
    }
    return out;
}

namespace {

class Scanner {
public:
    Scanner(const std::string& text, const VarNames& names, int line)
        : text_(text), names_(names), line_(line) {}

    InputPoly run() {
        InputPoly poly;
        poly.n = names_.n();
        skip_space();
        if (done()) fail("empty polynomial");
        bool first = true;
        while (!done()) {
            int sign = 1;
            skip_space();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            parse_term(poly, sign);
            skip_space();
            first = false;
        }
        return poly;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_ > 0 ? line_ : 1, static_cast<int>(pos_) + 1);
    }

    long long parse_number() {
        long long v = 0;
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > (1LL << 56)) fail("coefficient too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    // variable name: longest match against the table; single letters win
    int parse_variable() {
        std::size_t best_len = 0;
        int best_index = 0;
        for (int i = 1; i <= names_.n(); ++i) {
            const std::string& nm = names_.name(i);
            if (text_.compare(pos_, nm.size(), nm) == 0 && nm.size() > best_len) {
                best_len = nm.size();
                best_index = i;
            }
        }
        if (best_index == 0) fail("unknown variable");
        pos_ += best_len;
        return best_index;
    }

    void parse_term(InputPoly& poly, int sign) {
        InputCoeff coeff;
        coeff.num = sign;
        Monomial mono = Monomial::one(names_.n());
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff.num = sign * parse_number();
            saw_factor = true;
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                coeff.den = parse_number();
                if (coeff.den == 0) fail("zero denominator");
                skip_space();
            }
            if (peek() == '*') {
                ++pos_;
                skip_space();
            }
        }
        while (!done()) {
            skip_space();
            char c = peek();
            if (c == '+' || c == '-' || c == '\0') break;
            if (c == '*') {
                ++pos_;
                skip_space();
                continue;
            }
            if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character in term");
            int var = parse_variable();
            int exp = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                long long e = parse_number();
                if (e < 0 || e > 255) fail("exponent out of range");
                exp = static_cast<int>(e);
            }
            mono.set_exponent(var, mono.exponent(var) + exp);
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        poly.terms.emplace_back(mono, coeff);
    }

    const std::string& text_;
    const VarNames& names_;
    int line_;
    std::size_t pos_ = 0;
};

} // namespace

InputPoly parse_polynomial(const std::string& text, const VarNames& names, int line) {
    return Scanner(text, names, line).run();
}

bool IdealInput::all_monomials() const {
    for (const auto& g : generators)
        if (g.terms.size() != 1) return false;
    return true;
}

IdealInput parse_ideal_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    IdealInput ideal;
    bool have_vars = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (!have_vars) {
            if (line.rfind("vars:", 0) != 0)
                throw ParseError("expected 'vars:' header", lineno, 1);
            std::vector<std::string> names;
            std::string rest = line.substr(5);
            std::string cur;
            for (char ch : rest) {
                if (ch == ',' || ch == ' ' || ch == '\t') {
                    if (!cur.empty()) names.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            if (!cur.empty()) names.push_back(cur);
            try {
                ideal.names = VarNames(names);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno, 1);
            }
            have_vars = true;
            continue;
        }
        ideal.generators.push_back(parse_polynomial(line, ideal.names, lineno));
    }
    if (!have_vars) throw ParseError("missing 'vars:' header", 1, 1);
    return ideal;
}

std::string print_ideal_text(const IdealInput& ideal) {
    std::string out = "vars: ";
    for (int i = 1; i <= ideal.names.n(); ++i) {
        if (i > 1) out += ",";
        out += ideal.names.name(i);
    }
    out += "\n";
    for (const auto& g : ideal.generators) {
        // canonical form round-trips through the Fp printer at any prime
        // large enough; print directly from the stored terms instead.
        std::string line;
        bool first = true;
        for (const auto& [m, c] : g.terms) {
            long long num = c.num;
            bool neg = num < 0;
            if (neg) num = -num;
            line += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            std::string cs = std::to_string(num);
            if (c.den != 1) cs += "/" + std::to_string(c.den);
            if (m.is_one()) {
                line += cs;
            } else {
                if (cs != "1") {
                    line += cs;
                    if (!ideal.names.single_letters()) line += "*";
                }
                line += print_monomial(m, ideal.names);
            }
        }
        out += line + "\n";
    }
    return out;
}

} // namespace shiftlab
