#ifndef CAYLEY_ERROR_HPP
#define CAYLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cayley {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text parsers; carries a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace cayley

#endif
