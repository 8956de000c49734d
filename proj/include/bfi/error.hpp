#pragma once

#include <stdexcept>
#include <string>

namespace bfi {

enum class errc {
    missing_entry,
    duplicate_entry,
    boundary_violation,
    monotonicity_violation,
    disjointness_violation,
    dimension_mismatch,
    scale_mismatch,
    scale_violation,
    positive_component,
    empty_input,
    length_mismatch,
    parse_error,
    ragged_row,
    duplicate_id,
    link_violation,
    unsupported_axiom_for_scale,
    internal_error,
};

/// Library-wide error type. `cli_exit_code()` gives the process exit code
/// used by the command-line tool (1 parse/validation, 2 dimension/scale,
/// 3 internal).
class Error : public std::runtime_error {
  public:
    Error(errc code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}

    errc code() const noexcept { return code_; }

    int cli_exit_code() const noexcept {
        switch (code_) {
        case errc::missing_entry:
        case errc::duplicate_entry:
        case errc::boundary_violation:
        case errc::monotonicity_violation:
        case errc::disjointness_violation:
        case errc::parse_error:
        case errc::ragged_row:
        case errc::duplicate_id:
        case errc::empty_input:
        case errc::length_mismatch:
            return 1;
        case errc::dimension_mismatch:
        case errc::scale_mismatch:
        case errc::scale_violation:
        case errc::positive_component:
        case errc::unsupported_axiom_for_scale:
            return 2;
        default:
            return 3;
        }
    }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace bfi
