#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace idvae {

// All library failures throw this; the CLI maps it to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

template <class... Parts>
std::string msg(Parts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

template <class... Parts>
void check(bool cond, Parts&&... parts) {
    if (!cond) throw Error(msg(std::forward<Parts>(parts)...));
}

}  // namespace idvae
