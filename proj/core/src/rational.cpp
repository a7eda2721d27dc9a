#include "rexlab/rational.hpp"

#include <charconv>
#include <limits>

#include "rexlab/error.hpp"

namespace rexlab {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("invalid number '" + std::string(whole) + "'", 0);
    }
    return v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(text.substr(0, slash), text);
        std::int64_t den = parse_int(text.substr(slash + 1), text);
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
        }
        return {num, den};
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational(parse_int(text, text));
    }
    bool negative = !text.empty() && text.front() == '-';
    std::string_view int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 17 || (int_part.empty() && frac_part.empty())) {
        throw ParseError("invalid decimal '" + std::string(text) + "'", 0);
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
        scale *= 10;
    }
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (whole < 0 || frac < 0 || whole > std::numeric_limits<std::int64_t>::max() / scale) {
        throw ParseError("invalid decimal '" + std::string(text) + "'", 0);
    }
    Rational r(whole * scale + frac, scale);
    return negative ? -r : r;
}

double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

} // namespace rexlab
