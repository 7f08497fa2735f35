#include "fkd/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace fkd {

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.b_.is_zero() && y.b_.is_zero()) return Scalar(x.a_ * y.a_);
    if (x.b_.is_zero()) return {x.a_ * y.a_, x.a_ * y.b_};
    if (y.b_.is_zero()) return {x.a_ * y.a_, x.b_ * y.a_};
    Rational bd = x.b_ * y.b_;
    return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (b_.is_zero()) return Scalar(a_.inv());
    Rational n = norm().inv();
    Scalar c = conj();
    return {c.a_ * n, c.b_ * n};
}

Scalar zeta_pow(int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return Scalar(1);
        case 1: return Scalar::zeta();
        default: return Scalar::zeta2();
    }
}

std::string Scalar::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str();
    std::string bs;
    if (b_ == Rational(1)) bs = "z";
    else if (b_ == Rational(-1)) bs = "-z";
    else bs = b_.str() + "z";
    if (!s.empty() && bs[0] != '-') s += "+";
    return s + bs;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace fkd
