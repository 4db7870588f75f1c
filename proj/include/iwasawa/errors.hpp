#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iwasawa {

/// Operands live at different (p, r). Mixed precision is always an error,
/// never a silent coercion.
class precision_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dimension, degree or cutoff disagreement between operands.
class shape_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation demanded more p-adic digits than the value carries.
/// required_level() is the level the caller must rebuild at.
class precision_exhausted : public std::runtime_error {
public:
    precision_exhausted(const std::string& what, std::uint32_t required_level)
        : std::runtime_error(what), required_(required_level) {}

    std::uint32_t required_level() const noexcept { return required_; }

private:
    std::uint32_t required_;
};

}  // namespace iwasawa
