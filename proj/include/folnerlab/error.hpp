#pragma once

#include <stdexcept>
#include <string>

namespace folnerlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A label that does not name an irreducible class of the ambient ring.
class InvalidLabel : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exact and floating scalars were combined.
class ModeMismatch : public Error {
public:
    using Error::Error;
};

/// A computed object violated a structural guarantee (e.g. fusion inclusion).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace folnerlab
