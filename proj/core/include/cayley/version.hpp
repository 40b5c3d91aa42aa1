#ifndef CAYLEY_VERSION_HPP
#define CAYLEY_VERSION_HPP

namespace cayley {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
