#pragma once

#include <string>

namespace jnb {

// Outcome of a structural verification; `detail` names the first failed check.
struct VerifyResult {
    bool ok = true;
    std::string detail;
};

}  // namespace jnb
