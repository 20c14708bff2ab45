#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qyb {

// Base class for all library errors. `code()` is a stable machine-readable
// identifier used by the CLI when mapping failures to structured reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define QYB_DEFINE_ERROR(Name, code_str)                          \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& msg = #Name)             \
            : Error(code_str, msg) {}                             \
    }

QYB_DEFINE_ERROR(DivisionByZeroFunction, "division_by_zero_function");
QYB_DEFINE_ERROR(SubstitutionDegenerate, "substitution_degenerate");
QYB_DEFINE_ERROR(DegenerateQuadruple, "degenerate_quadruple");
QYB_DEFINE_ERROR(SingularPoint, "singular_point");
QYB_DEFINE_ERROR(NotLinearFractional, "not_linear_fractional");
QYB_DEFINE_ERROR(UnresolvedSingularity, "unresolved_singularity");
QYB_DEFINE_ERROR(DegenerateSingularity, "degenerate_singularity");
QYB_DEFINE_ERROR(NotAdmissible, "not_admissible");
QYB_DEFINE_ERROR(SampleExhaustion, "sample_exhaustion");
QYB_DEFINE_ERROR(NotInvolutive, "not_involutive");
QYB_DEFINE_ERROR(NotSubtractionFree, "not_subtraction_free");
QYB_DEFINE_ERROR(PointNotOnConic, "point_not_on_conic");
QYB_DEFINE_ERROR(UnsupportedType, "unsupported_type");
QYB_DEFINE_ERROR(DegeneratePencil, "degenerate_pencil");
QYB_DEFINE_ERROR(UnknownIdentifier, "unknown_identifier");

#undef QYB_DEFINE_ERROR

// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error("parse_error", msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace qyb
