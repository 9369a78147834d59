#pragma once

#include <stdexcept>
#include <string>

namespace dqs {

// Failure categories carried by every exception this library throws.
// The command-line tool maps them onto distinct process exit codes.
enum class errc {
    invalid_argument,     // malformed or out-of-range input
    size_limit,           // spin count above the configured cap
    not_an_eigenvalue,    // requested energy absent from the spectrum
    degenerate_instance,  // search instance with no nontarget (or no target) states
    no_success,           // success probability identically zero
    threshold_unreached,  // requested probability never attained within the scan
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

// Thrown by queries_to_reach; remembers how close the curve got.
class threshold_error : public error {
  public:
    threshold_error(const std::string& what, double max_probability)
        : error(errc::threshold_unreached, what), max_probability_(max_probability) {}

    double max_probability() const { return max_probability_; }

  private:
    double max_probability_;
};

}  // namespace dqs
