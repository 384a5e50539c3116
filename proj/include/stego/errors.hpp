#pragma once

#include <stdexcept>
#include <string>

namespace stego {

// Malformed or unsupported carrier data (bad PNM header, wrong channel
// policy, empty image).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Payload does not fit the carrier.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Stego image does not carry a consistent payload header.
class CorruptStegoError : public std::runtime_error {
public:
    explicit CorruptStegoError(const std::string& what) : std::runtime_error(what) {}
};

// Too few histogram categories survive for a chi-square statistic.
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stego
