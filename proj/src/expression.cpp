#include "gravity/expression.hpp"

#include <cctype>

#include "gravity/errors.hpp"

namespace gravity {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }

    bool at_integer() {
        skip_space();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    long parse_integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected an integer", pos);
        long value = 0;
        for (std::size_t j = start; j < pos; ++j) {
            value = value * 10 + (text[j] - '0');
            if (value > 1'000'000'000L)
                throw ParseError("integer literal too large", start);
        }
        return value;
    }

    // coeff := int | int '/' int   (sign handled by the expression level)
    Rational parse_coeff() {
        long num = parse_integer();
        if (consume('/')) {
            std::size_t at = pos;
            long den = parse_integer();
            if (den == 0)
                throw ParseError("zero denominator", at);
            return make_rational(num, den);
        }
        return make_rational(num);
    }

    // factor := 'w(' int ',' int ')'
    std::pair<int, int> parse_factor() {
        skip_space();
        std::size_t at = pos;
        if (pos >= text.size() || text[pos] != 'w')
            throw ParseError("expected a generator w(a,b)", pos);
        ++pos;
        expect('(');
        long a = parse_integer();
        expect(',');
        long b = parse_integer();
        expect(')');
        if (a == b)
            throw InvalidGenerator("w(" + std::to_string(a) + "," + std::to_string(a) +
                                   ") at offset " + std::to_string(at));
        return {static_cast<int>(a), static_cast<int>(b)};
    }

    struct Term {
        Rational coeff;
        GeneratorWord word;
    };

    Term parse_term() {
        Term t;
        t.coeff = 1;
        const bool has_coeff = at_integer();
        if (has_coeff)
            t.coeff = parse_coeff();
        while (true) {
            std::size_t before = pos;
            bool star = consume('*');
            if (peek() == 'w') {
                t.word.push_back(parse_factor());
            } else {
                if (star)
                    throw ParseError("expected a generator after '*'", pos);
                pos = before;
                break;
            }
        }
        if (!has_coeff && t.word.empty())
            throw ParseError("expected a term", pos);
        return t;
    }
};

int max_label(const GeneratorWord& word) {
    int m = 1;
    for (const auto& [a, b] : word)
        m = std::max({m, a, b});
    return m;
}

std::string coeff_prefix(const Rational& c, bool leading, bool unit_monomial) {
    Rational abs = c < 0 ? Rational(-c) : c;
    std::string sep = leading ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (abs == 1 && !unit_monomial)
        return sep;
    return sep + rational_to_string(abs) + (unit_monomial ? "" : " ");
}

}  // namespace

ArnoldElement parse_expression(std::string_view text, std::optional<int> ambient) {
    Parser parser{text};
    std::vector<std::pair<Rational, GeneratorWord>> terms;
    bool negative = parser.consume('-');
    if (!negative)
        parser.consume('+');
    while (true) {
        auto term = parser.parse_term();
        terms.emplace_back(negative ? Rational(-term.coeff) : term.coeff, std::move(term.word));
        if (parser.eof())
            break;
        if (parser.consume('-'))
            negative = true;
        else if (parser.consume('+'))
            negative = false;
        else
            throw ParseError("expected '+', '-' or end of input", parser.pos);
        if (parser.eof())
            throw ParseError("dangling sign", parser.pos);
    }

    int n = 1;
    for (const auto& [c, word] : terms)
        n = std::max(n, max_label(word));
    if (ambient) {
        if (*ambient < 1)
            throw OutOfRange("ambient label count must be positive");
        if (n > *ambient)
            throw LabelOutOfRange("label exceeds the given ambient count " +
                                  std::to_string(*ambient));
        n = *ambient;
    }

    // All terms must share one homogeneous degree.
    std::size_t degree = terms.front().second.size();
    for (const auto& [c, word] : terms)
        if (word.size() != degree)
            throw ParseError("expression is not homogeneous", text.size());

    ArnoldElement out(n, static_cast<int>(degree));
    for (const auto& [c, word] : terms)
        out += straighten(word, c, n);
    return out;
}

std::string print_element(const ArnoldElement& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    bool leading = true;
    for (const auto& [m, c] : x.terms()) {
        out += coeff_prefix(c, leading, m.factors.empty());
        if (!m.factors.empty())
            out += monomial_to_string(m);
        leading = false;
    }
    return out;
}

std::string print_tensor(const TensorElement& t) {
    if (t.is_zero())
        return "0";
    std::string out;
    bool leading = true;
    for (const auto& [key, c] : t.terms()) {
        out += coeff_prefix(c, leading, false);
        out += "(" + monomial_to_string(key.first) + ") (x) (" + monomial_to_string(key.second) +
               ")";
        leading = false;
    }
    return out;
}

}  // namespace gravity
