#ifndef QMK_RATIONAL_HPP
#define QMK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qmk {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CompositionError : Error {
    using Error::Error;
};
struct RelationError : Error {
    using Error::Error;
};
struct NotRationalError : Error {
    using Error::Error;
};
struct TableError : Error {
    using Error::Error;
};
struct MissingDataError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// Canonical form: plain integer when the denominator is 1, "num/den" otherwise.
std::string rat_str(const Rat& r);

// Accepts "3", "-3", "3/4", "-3/4".
Rat rat_parse(const std::string& s);

}  // namespace qmk

#endif
