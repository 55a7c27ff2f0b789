#include "twistcat/rational.hpp"

#include <cctype>
#include <ostream>

namespace twistcat {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    // GMP's string constructor is laxer than the file format (whitespace,
    // leading '+', base prefixes), so check the shape first.
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!digits(s)) return std::nullopt;
    } else {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!digits(num) || !digits(den) || den[0] == '-') return std::nullopt;
        bool all_zero = true;
        for (char c : den) all_zero = all_zero && c == '0';
        if (all_zero) return std::nullopt;
    }
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0) return std::nullopt;
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace twistcat
