#include "disknet/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace disknet {

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace disknet
