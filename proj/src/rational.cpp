#include "gravity/rational.hpp"

#include "gravity/errors.hpp"

namespace gravity {

Rational make_rational(long num, long den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
    if (text.empty())
        throw Error("empty rational literal");
    try {
        Rational q(std::string(text), 10);
        if (q.get_den() == 0)
            throw Error("rational with zero denominator: " + std::string(text));
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + std::string(text));
    }
}

}  // namespace gravity
