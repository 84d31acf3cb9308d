#pragma once

#include <stdexcept>
#include <string>

namespace homalg {

/* Validation failure with a stable machine-readable code, e.g.
 * "AssociativityViolation", "NotAGroup", "BudgetExceeded".
 * Codes are part of the artifact's error contract and asserted in tests. */
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code))
    {
    }

    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail)
{
    throw Error(code, detail);
}

inline void require(bool cond, const std::string& code, const std::string& detail)
{
    if (!cond)
        fail(code, detail);
}

}  // namespace homalg
