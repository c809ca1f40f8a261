#ifndef ORBITCALC_ERRORS_HPP
#define ORBITCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitcalc
{

// Base of every error the library throws. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

class ContextMismatch : public Error
{
public:
    using Error::Error;
};

// Exact division left a nonzero remainder.
class NotDivisible : public Error
{
public:
    using Error::Error;
};

class InvalidSequence : public Error
{
public:
    using Error::Error;
};

// Total weight of a profile differs from (r+1)(d-r).
class WeightMismatch : public Error
{
public:
    using Error::Error;
};

// (r+1)(d-r) < 3: the orbit has no class of non-negative codimension.
class CodimNegative : public Error
{
public:
    using Error::Error;
};

// Basis of a linear series has rank < r+1.
class DegenerateBasis : public Error
{
public:
    using Error::Error;
};

class NotSquarefree : public Error
{
public:
    using Error::Error;
};

class NotSymmetric : public Error
{
public:
    using Error::Error;
};

class NonIntegral : public Error
{
public:
    using Error::Error;
};

class InvalidTree : public Error
{
public:
    using Error::Error;
};

class NonexistentProfile : public Error
{
public:
    using Error::Error;
};

// Raised when an identity that must hold by construction fails.
class InternalError : public Error
{
public:
    using Error::Error;
};

} // namespace orbitcalc

#endif
