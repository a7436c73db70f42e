#include "mteam/numeric.hpp"

#include <cctype>

#include "mteam/error.hpp"

namespace mteam {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::string to_string(const Count& c) { return c.str(); }

std::string to_string(const Rational& r) {
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

Count parse_count(std::string_view text) {
    if (!all_digits(text)) throw InputError("expected a nonnegative integer, got '" + std::string(text) + "'");
    return Count(std::string(text));
}

Rational parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    Count num = parse_count(text.substr(0, slash));
    Count den = 1;
    if (slash != std::string_view::npos) {
        den = parse_count(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

}  // namespace mteam
