#ifndef ACE_ERRORS_HPP_
#define ACE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ace {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Caller misuse: illegal identity/role combination, oversized payload,
// mismatched backends, refused parameter ranges.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

// File or socket failure.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

// Malformed bytes or text while reading a frame, key file or policy file.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Cryptographic validation failure: element outside the subgroup,
// non-unit ciphertext component, prime search exhaustion.
class CryptoError : public Error {
public:
    explicit CryptoError(const std::string& what) : Error(what) {}
};

}  // namespace ace

#endif  // ACE_ERRORS_HPP_
