#include "liexp/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace liexp {

Rational Rational::from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return Rational(std::move(q));
}

void Rational::check_den() const {
    if (v_.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator");
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace liexp
