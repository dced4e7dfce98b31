#include "rootcontract/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rootcontract {

Rat::Rat(long long value) : value_(static_cast<long>(value)) {}

Rat::Rat(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && s[0] == '-') i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    const mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rat(mpq_class(mpz_class{std::string(num)}, d));
}

long long Rat::to_integer() const {
    if (!is_integer()) throw std::domain_error("Rat " + str() + " is not an integer");
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw std::domain_error("Rat " + str() + " out of range");
    return n.get_si();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.value_ == 0) throw std::domain_error("Rat: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rat::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace rootcontract
