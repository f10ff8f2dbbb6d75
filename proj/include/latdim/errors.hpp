#pragma once

#include <stdexcept>
#include <string>

namespace latdim {

// Closed error taxonomy. Every failure mode of the library maps onto one of
// these; callers can catch the base class or a specific kind.
enum class ErrorKind {
    Cycle,          // input order relation is not antisymmetric
    NotBounded,     // no unique bottom or no unique top
    NotALattice,    // some pair lacks a unique meet or join, or the cover
                    // list is not a transitive reduction
    DuplicateLabel, // repeated element label in the input
    NotACover,      // a set claimed to be a cover is not one
    InvalidSubset,  // subset argument violates an operation's precondition
    SizeLimit,      // enumeration refused above the configured size bound
    InvalidK,       // construction parameter out of range
};

inline const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Cycle: return "Cycle";
        case ErrorKind::NotBounded: return "NotBounded";
        case ErrorKind::NotALattice: return "NotALattice";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::NotACover: return "NotACover";
        case ErrorKind::InvalidSubset: return "InvalidSubset";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::InvalidK: return "InvalidK";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class CycleError : public Error {
public:
    explicit CycleError(const std::string& what) : Error(ErrorKind::Cycle, what) {}
};

class NotBounded : public Error {
public:
    explicit NotBounded(const std::string& what) : Error(ErrorKind::NotBounded, what) {}
};

class NotALattice : public Error {
public:
    // Most failures concern a specific pair; keep the labels accessible.
    NotALattice(const std::string& what, std::string a = "", std::string b = "")
        : Error(ErrorKind::NotALattice, what), a_(std::move(a)), b_(std::move(b)) {}
    const std::string& first() const { return a_; }
    const std::string& second() const { return b_; }

private:
    std::string a_, b_;
};

class DuplicateLabel : public Error {
public:
    explicit DuplicateLabel(const std::string& what) : Error(ErrorKind::DuplicateLabel, what) {}
};

class NotACover : public Error {
public:
    explicit NotACover(const std::string& what) : Error(ErrorKind::NotACover, what) {}
};

class InvalidSubset : public Error {
public:
    explicit InvalidSubset(const std::string& what) : Error(ErrorKind::InvalidSubset, what) {}
};

class SizeLimit : public Error {
public:
    explicit SizeLimit(const std::string& what) : Error(ErrorKind::SizeLimit, what) {}
};

class InvalidK : public Error {
public:
    explicit InvalidK(const std::string& what) : Error(ErrorKind::InvalidK, what) {}
};

} // namespace latdim
