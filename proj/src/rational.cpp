#include "qmk/rational.hpp"

namespace qmk {

std::string rat_str(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational literal '" + s + "': " + e.what());
    }
}

}  // namespace qmk
