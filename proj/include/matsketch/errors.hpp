#pragma once

#include <stdexcept>
#include <string>

namespace matsketch {

// Exit codes used by the command line tool.
enum class ExitCode : int { ok = 0, argument = 2, numeric = 3, io = 4 };

class Error : public std::runtime_error {
public:
    Error(std::string kind, ExitCode code, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)), code_(code) {}
    const std::string& kind() const noexcept { return kind_; }
    ExitCode exit_code() const noexcept { return code_; }

private:
    std::string kind_;
    ExitCode code_;
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& msg, std::string kind = "argument")
        : Error(std::move(kind), ExitCode::argument, msg) {}
};

// Input has lower rank than the operation needs.
class RankError : public ArgumentError {
public:
    explicit RankError(const std::string& msg) : ArgumentError(msg, "rank") {}
};

// Combinatorial guard in the brute-force oracles.
class RefusalError : public ArgumentError {
public:
    explicit RefusalError(const std::string& msg) : ArgumentError(msg, "refusal") {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg, std::string kind = "numeric")
        : Error(std::move(kind), ExitCode::numeric, msg) {}
};

// A barrier step found no admissible index.
class InfeasibleError : public NumericError {
public:
    InfeasibleError(const std::string& msg, int step, double margin)
        : NumericError(msg, "infeasible"), step_(step), margin_(margin) {}
    int step() const noexcept { return step_; }
    // max_j (L(j) - U(j)) at the failing step; negative.
    double margin() const noexcept { return margin_; }

private:
    int step_;
    double margin_;
};

class InternalError : public NumericError {
public:
    explicit InternalError(const std::string& msg) : NumericError(msg, "internal") {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg, std::string kind = "io")
        : Error(std::move(kind), ExitCode::io, msg) {}
};

class ParseError : public IoError {
public:
    ParseError(const std::string& msg, long line, std::string kind = "parse")
        : IoError("line " + std::to_string(line) + ": " + msg, std::move(kind)), line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

class TypeError : public ParseError {
public:
    TypeError(const std::string& msg, long line) : ParseError(msg, line, "type") {}
};

}  // namespace matsketch
