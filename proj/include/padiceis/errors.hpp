#pragma once

#include <stdexcept>
#include <string>

namespace padiceis {

// Error kinds map one-to-one onto C API status codes and CLI exit codes,
// so every throw site picks its kind deliberately.
enum class ErrorKind {
    domain,      // precondition violated / argument outside the supported domain
    precision,   // certified p-adic precision exhausted or uncertifiable
    truncation,  // series truncation order too small for the request
    integrality, // an integrality assertion failed (solver or convention bug)
    parse,       // malformed input text or JSON
    internal,    // consistency check failed; indicates an implementation bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }
[[noreturn]] inline void fail_domain(const std::string& m) { fail(ErrorKind::domain, m); }
[[noreturn]] inline void fail_precision(const std::string& m) { fail(ErrorKind::precision, m); }
[[noreturn]] inline void fail_truncation(const std::string& m) { fail(ErrorKind::truncation, m); }
[[noreturn]] inline void fail_integrality(const std::string& m) { fail(ErrorKind::integrality, m); }
[[noreturn]] inline void fail_parse(const std::string& m) { fail(ErrorKind::parse, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { fail(ErrorKind::internal, m); }

} // namespace padiceis
