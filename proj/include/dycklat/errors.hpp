#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dycklat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parse_path
struct NotBalanced : Error { using Error::Error; };
struct GoesBelowAxis : Error { using Error::Error; };
struct BadCharacter : Error { using Error::Error; };

struct EmptyPath : Error { using Error::Error; };
struct BadShape : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };
struct InvalidCode : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct TableMissing : Error { using Error::Error; };

// meet/join failure carries the antichain of minimal upper / maximal lower
// bounds that was found instead of a unique one.
struct NoMeet : Error {
    std::vector<std::string> antichain;
    NoMeet(const std::string& msg, std::vector<std::string> a)
        : Error(msg), antichain(std::move(a)) {}
};
struct NoJoin : Error {
    std::vector<std::string> antichain;
    NoJoin(const std::string& msg, std::vector<std::string> a)
        : Error(msg), antichain(std::move(a)) {}
};

// phi table build found a rule-image collision or an uncovered path.
struct ConstructionFailure : Error {
    std::vector<std::string> witnesses;
    ConstructionFailure(const std::string& msg, std::vector<std::string> w)
        : Error(msg), witnesses(std::move(w)) {}
};

}  // namespace dycklat
