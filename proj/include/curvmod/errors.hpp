#pragma once

#include <stdexcept>
#include <string>

namespace curvmod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadPrime : Error {
    using Error::Error;
};
struct InvalidCartanMatrix : Error {
    using Error::Error;
};
struct UnsupportedType : Error {
    using Error::Error;
};
struct NotOneGraded : Error {
    using Error::Error;
};
struct NotProportional : Error {
    using Error::Error;
};
struct NonDominant : Error {
    using Error::Error;
};
struct UnknownAlgebra : Error {
    using Error::Error;
};
struct UnknownMatrix : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace curvmod
