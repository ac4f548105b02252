// SPDX-License-Identifier: Apache-2.0
#ifndef LCU_ERRORS_HPP
#define LCU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lcu {

// Error categories. The integer values double as CLI exit codes, so they
// must stay distinct and stable.
enum class errc : int {
    ok = 0,
    usage = 2,
    io = 3,
    parse = 4,
    schema = 5,
    domain = 6,
    precision = 7,
    contract = 8,
    window = 9,
    bracket = 10,
    divergence = 11,
    resolution = 12,
    degenerate = 13,
    dimension = 14,
    cutoff = 15,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace lcu

#endif
