#ifndef ORBITDATA_ERRORS_HPP
#define ORBITDATA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitdata {

// Base class for all domain errors raised by this library.  Parse errors
// (malformed spec documents) derive from ParseError instead so callers can
// map the two families to different exit codes.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class OrderCapExceeded : public Error {
public:
  explicit OrderCapExceeded(const std::string& what) : Error(what) {}
};

class NotAPermutation : public Error {
public:
  explicit NotAPermutation(const std::string& what) : Error(what) {}
};

class InvalidGroupTable : public Error {
public:
  explicit InvalidGroupTable(const std::string& what) : Error(what) {}
};

class NotAbelian : public Error {
public:
  explicit NotAbelian(const std::string& what) : Error(what) {}
};

class NotElementaryAbelian : public Error {
public:
  explicit NotElementaryAbelian(const std::string& what) : Error(what) {}
};

class WrongOrigin : public Error {
public:
  explicit WrongOrigin(const std::string& what) : Error(what) {}
};

class WrongShape : public Error {
public:
  explicit WrongShape(const std::string& what) : Error(what) {}
};

class TrivialClassPresent : public Error {
public:
  explicit TrivialClassPresent(const std::string& what) : Error(what) {}
};

class NotValidatable : public Error {
public:
  explicit NotValidatable(const std::string& what) : Error(what) {}
};

class FrameMismatch : public Error {
public:
  explicit FrameMismatch(const std::string& what) : Error(what) {}
};

class NotASubgroup : public Error {
public:
  explicit NotASubgroup(const std::string& what) : Error(what) {}
};

class NotAHomomorphism : public Error {
public:
  explicit NotAHomomorphism(const std::string& what) : Error(what) {}
};

class NotInSpan : public Error {
public:
  explicit NotInSpan(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class RelationOutsideKernel : public Error {
public:
  explicit RelationOutsideKernel(const std::string& what) : Error(what) {}
};

class UnexpectedTorsion : public Error {
public:
  explicit UnexpectedTorsion(const std::string& what) : Error(what) {}
};

// Exact-arithmetic result does not fit the public 64-bit representation.
class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

}  // namespace orbitdata

#endif
