#include "twodist/rational.hpp"

#include <limits>
#include <ostream>

#include "twodist/errors.hpp"

namespace twodist {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        if (part.empty()) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw ParseError("malformed rational '" + std::string(text) + "'");
            }
        }
        std::string digits(part[0] == '+' ? part.substr(1) : part);
        return mpz_class(digits, 10);
    };
    if (slash == std::string_view::npos) {
        return Rational(mpq_class(parse_int(text)));
    }
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("rational with zero denominator '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) {
        throw InvalidArgument("rational " + to_string() + " is not a machine integer");
    }
    return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (sgn(o.q_) == 0) {
        throw InvalidArgument("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace twodist
