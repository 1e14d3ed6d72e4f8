#pragma once

#include <stdexcept>
#include <string>

namespace cwc {

// A claimed code property failed an exhaustive check.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word could not be decoded or corrected.
struct CodecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cwc
