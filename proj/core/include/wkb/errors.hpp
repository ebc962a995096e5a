#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wkb {

/* Domain error with a stable machine-readable name ("NotInvertible",
 * "BelowTruncation", ...). The CLI maps names to report fields and exit
 * codes; tests match on name(). */
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

} // namespace wkb
