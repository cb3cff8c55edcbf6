#ifndef MVMARKOV_ERRORS_HPP
#define MVMARKOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mvmarkov {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Trace / catalog parsing.
class MalformedLine : public Error {
public:
    MalformedLine(long line_no, const std::string& detail)
        : Error("line " + std::to_string(line_no) + ": " + detail), line_no(line_no)
    {
    }
    long line_no;
};

class DuplicateHeaderMismatch : public Error {
public:
    DuplicateHeaderMismatch(long line_no, const std::string& detail)
        : Error("line " + std::to_string(line_no) + ": " + detail), line_no(line_no)
    {
    }
    long line_no;
};

class CatalogMismatch : public Error {
public:
    using Error::Error;
};

// Estimation.
class IndexOutOfCatalog : public Error {
public:
    using Error::Error;
};

// Markov engine.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonStochasticMatrix : public Error {
public:
    using Error::Error;
};

class ReducibleChain : public Error {
public:
    using Error::Error;
};

// Replacement policy.
class EmptyTier : public Error {
public:
    using Error::Error;
};

class CapacityViolation : public Error {
public:
    using Error::Error;
};

} // namespace mvmarkov

#endif // MVMARKOV_ERRORS_HPP
