#include "liexp/expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace liexp {

namespace {

struct Parser {
    const std::string& src;
    size_t pos = 0;
    const std::vector<std::string>& variables;
    const std::map<std::string, std::string>& aliases;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression error at position " + std::to_string(pos) + ": " +
                                    what);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    std::string read_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            ++pos;
        if (pos == start)
            fail("expected a number");
        return src.substr(start, pos - start);
    }

    Rational read_rational() {
        std::string num = read_integer();
        if (eat('/'))
            return Rational(mpz_class(num), mpz_class(read_integer()));
        return Rational(mpz_class(num), mpz_class(1));
    }

    MultiPoly read_variable() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string name = src.substr(start, pos - start);
        if (auto it = aliases.find(name); it != aliases.end())
            name = it->second;
        if (std::find(variables.begin(), variables.end(), name) == variables.end())
            fail("unknown variable '" + src.substr(start, pos - start) + "'");
        return MultiPoly::variable(name);
    }

    MultiPoly read_factor() {
        char c = peek();
        MultiPoly base;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            base = MultiPoly::constant(read_rational());
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            base = read_variable();
        } else {
            fail("expected a number or a variable");
        }
        if (eat('^')) {
            std::string e = read_integer();
            if (e.size() > 3)
                fail("exponent too large");
            base = pow_int(base, std::stoi(e));
        }
        return base;
    }

    MultiPoly read_term() {
        MultiPoly t = read_factor();
        while (eat('*'))
            t = t * read_factor();
        return t;
    }

    MultiPoly read_expr() {
        MultiPoly sum;
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        while (true) {
            MultiPoly term = read_term();
            sum = negative ? sum - term : sum + term;
            skip_ws();
            if (eat('-'))
                negative = true;
            else if (eat('+'))
                negative = false;
            else
                break;
        }
        skip_ws();
        if (pos != src.size())
            fail("trailing input");
        return sum;
    }
};

} // namespace

MultiPoly parse_poly(const std::string& src, const std::vector<std::string>& variables,
                     const std::map<std::string, std::string>& aliases) {
    Parser p{src, 0, variables, aliases};
    if (p.peek() == '\0')
        throw std::invalid_argument("empty expression");
    return p.read_expr();
}

} // namespace liexp
