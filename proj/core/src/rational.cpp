#include "finsler/rational.hpp"

#include "finsler/errors.hpp"

#include <cmath>
#include <sstream>

namespace finsler {

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw ValidationError("non-finite value cannot be made rational");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(v, &exp); // v = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings turn the mantissa into an integer.
    BigInt num = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(num);
    if (exp > 0) {
        r *= Rational(BigInt(1) << exp);
    } else if (exp < 0) {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace finsler
