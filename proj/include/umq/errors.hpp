#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umq {

/// Exception carrying a stable machine-readable code (e.g.
/// "StrongTriangleViolation") plus the point/node indices involved, when any.
/// The CLI maps codes to report JSON; tests match on them.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::vector<int> indices = {})
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          indices_(std::move(indices)) {}

    const std::string& code() const noexcept { return code_; }
    const std::vector<int>& indices() const noexcept { return indices_; }

private:
    std::string code_;
    std::vector<int> indices_;
};

}  // namespace umq
