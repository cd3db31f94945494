#include "qcsurf/golden.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcsurf {

namespace mp = boost::multiprecision;
using BigFloat = mp::cpp_bin_float_50;

GoldenScalar GoldenScalar::tau_pow(int n) {
    GoldenScalar result(1);
    const GoldenScalar factor = n >= 0 ? tau() : tau() - GoldenScalar(1);  // tau^-1 = tau - 1
    for (int k = std::abs(n); k > 0; --k) result *= factor;
    return result;
}

GoldenScalar& GoldenScalar::operator*=(const GoldenScalar& o) {
    // (a1 + b1 t)(a2 + b2 t) with t^2 = t + 1
    Rational a = a_ * o.a_ + b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_ + b_ * o.b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

GoldenScalar& GoldenScalar::operator/=(const GoldenScalar& o) {
    const Rational n = o.field_norm();
    if (n == 0) throw std::domain_error("GoldenScalar: division by zero");
    *this *= o.galois_conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

int GoldenScalar::sign() const {
    // x = a + b tau = ((2a + b) + b sqrt(5)) / 2
    const Rational u = 2 * a_ + b_;
    const Rational& v = b_;
    const int su = u.sign();
    const int sv = v.sign();
    if (su == 0 && sv == 0) return 0;
    if (su >= 0 && sv >= 0) return 1;
    if (su <= 0 && sv <= 0) return -1;
    // Opposite signs: compare u^2 against 5 v^2.
    const Rational uu = u * u;
    const Rational vv5 = 5 * v * v;
    if (su > 0) return uu > vv5 ? 1 : -1;
    return uu < vv5 ? 1 : -1;
}

namespace {

BigFloat to_bigfloat(const Rational& r) {
    return BigFloat(mp::numerator(r)) / BigFloat(mp::denominator(r));
}

}  // namespace

double GoldenScalar::to_double() const {
    static const BigFloat sqrt5 = sqrt(BigFloat(5));
    const BigFloat value = to_bigfloat(a_) + to_bigfloat(b_) * (1 + sqrt5) / 2;
    return value.convert_to<double>();
}

std::string GoldenScalar::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenScalar& x) {
    os << x.rational_part();
    if (x.tau_part() != 0) {
        os << (x.tau_part() > 0 ? " + " : " - ");
        const Rational b = abs(x.tau_part());
        if (b != 1) os << b << "*";
        os << "tau";
    }
    return os;
}

namespace {

// Recursive-descent parser over a flat token scan.
struct ExprParser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("golden expression: " + message + " at offset " +
                                    std::to_string(pos));
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    GoldenScalar parse_expr() {
        GoldenScalar value = parse_term();
        for (;;) {
            if (eat('+'))
                value += parse_term();
            else if (eat('-'))
                value -= parse_term();
            else
                return value;
        }
    }

    GoldenScalar parse_term() {
        GoldenScalar value = parse_factor();
        for (;;) {
            if (eat('*'))
                value *= parse_factor();
            else if (eat('/'))
                value /= parse_factor();
            else
                return value;
        }
    }

    GoldenScalar parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        return parse_primary();
    }

    GoldenScalar parse_primary() {
        skip_space();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            GoldenScalar value = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == '.')
                fail("floating-point literals are not allowed; use exact rationals like 1/2");
            Rational v(boost::multiprecision::cpp_int(std::string(text.substr(start, pos - start))));
            return GoldenScalar(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
            if (text.substr(start, pos - start) == "tau") return GoldenScalar::tau();
            pos = start;
            fail("unknown symbol (only 'tau' is recognized)");
        }
        fail("unexpected character");
    }
};

}  // namespace

GoldenScalar parse_golden(std::string_view expr) {
    ExprParser parser{expr};
    GoldenScalar value = parser.parse_expr();
    parser.skip_space();
    if (parser.pos != expr.size()) parser.fail("trailing input");
    return value;
}

}  // namespace qcsurf
