#pragma once

#include <stdexcept>
#include <string>

namespace klsum {

// Error hierarchy shared by all modules. The CLI maps these onto its
// exit-code scheme (domain/validation -> 3, capacity -> 5, I/O -> 2,
// identity violation -> 4).

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition or argument violation (bad modulus, non-fundamental
// discriminant, r outside {1,2}, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Input exceeds a configured resource cap.
class capacity_error : public error {
public:
    explicit capacity_error(const std::string& msg) : error(msg) {}
};

// An identity that must hold exactly failed beyond tolerance; signals an
// implementation bug, not bad input.
class identity_violation : public error {
public:
    explicit identity_violation(const std::string& msg) : error(msg) {}
};

class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg) {}
};

} // namespace klsum
