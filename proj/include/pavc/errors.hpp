#pragma once

// Error taxonomy shared across the library. Each category maps to a distinct
// CLI exit code (see tools/pavc_main.cpp and README).

#include <stdexcept>
#include <string>

namespace pavc {

// Frame/sequence geometry mismatch (dimensions, channel counts, lengths).
class shape_error : public std::invalid_argument {
public:
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

// Bad or unsupported file contents, malformed text lines, invalid JSON.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, const std::string& where = {})
        : std::runtime_error(where.empty() ? what : where + ": " + what) {}
};

// Filesystem-level failures: missing files, unreadable/unwritable paths.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// A required external tool (encoder, detector adapter) is not available.
class env_error : public std::runtime_error {
public:
    explicit env_error(const std::string& what) : std::runtime_error(what) {}
};

// An external process ran but failed; carries its captured diagnostics.
class subprocess_error : public std::runtime_error {
public:
    subprocess_error(const std::string& what, int exit_code, std::string diagnostics)
        : std::runtime_error(what), exit_code_(exit_code), diagnostics_(std::move(diagnostics)) {}

    int exit_code() const noexcept { return exit_code_; }
    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    int exit_code_;
    std::string diagnostics_;
};

// Wire-protocol violations (bad magic, unknown version, corrupt stream).
class protocol_error : public std::runtime_error {
public:
    explicit protocol_error(const std::string& what) : std::runtime_error(what) {}
};

// Socket/connection failures during a transfer.
class transport_error : public std::runtime_error {
public:
    explicit transport_error(const std::string& what) : std::runtime_error(what) {}
};

// Invariant violations on domain values (out-of-range CRF, bad condition code...).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace pavc
